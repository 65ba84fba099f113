#include "innerpar/verify.hpp"

#include "innerpar/erosion.hpp"
#include "innerpar/generate.hpp"
#include "innerpar/shape.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

namespace innerpar::verify {
namespace {

constexpr double kFlatStep = 1e-12;

Vector vec(std::initializer_list<double> c) { return make_vector(c); }

Body centered_box(std::initializer_list<double> half) {
  const std::vector<double> hw(half);
  return gen::box(hw);
}

struct Worst {
  double value = 0.0;
  std::string where;

  void take(double v, const std::string& at) {
    if (!(v <= value)) {  // NaN counts as a violation
      value = std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
      where = at;
    }
  }
  void merge(const Worst& other) {
    if (other.value > value) *this = other;
  }
};

std::string at(const Entry& e, double lambda) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " lambda=%.6g", lambda);
  return e.pair.name + buf;
}

// Applies fn to every entry (in parallel when configured) and merges the
// per-entry results in index order.
std::vector<Worst> map_entries(const Corpus& corpus, const Config& config, int slots,
                               const std::function<void(const Entry&, std::vector<Worst>&)>& fn) {
  const int n = static_cast<int>(corpus.entries.size());
  std::vector<std::vector<Worst>> partial(n, std::vector<Worst>(slots));
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (config.parallel)
  for (int i = 0; i < n; ++i) {
    try {
      fn(corpus.entries[i], partial[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Worst> total(slots);
  for (const auto& p : partial)
    for (int s = 0; s < slots; ++s) total[s].merge(p[s]);
  return total;
}

Check make_check(std::string name, const Worst& w, double limit) {
  return Check{std::move(name), w.value, limit, w.where};
}

bool is_equality_case(const std::string& name) {
  static const char* names[] = {"triangle/square", "square/diamond", "square/square",
                                "tetrahedron/cube", "cube/octahedron", "cube/cube"};
  return std::find(std::begin(names), std::end(names), name) != std::end(names);
}

// Closed-form p(0) of the equality cases, all with inradius 1.
double expected_p0(const std::string& name) {
  if (name == "triangle/square") return 16.0;
  if (name == "square/diamond" || name == "square/square") return 8.0;
  if (name == "tetrahedron/cube") return 108.0;
  return 24.0;  // cube/octahedron, cube/cube
}

const Entry* find_entry(const Corpus& corpus, const std::string& name) {
  for (const Entry& e : corpus.entries)
    if (e.pair.name == name) return &e;
  return nullptr;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "inequality") return Suite::Inequality;
  if (name == "concavity") return Suite::Concavity;
  if (name == "quotient") return Suite::Quotient;
  if (name == "equality_cases") return Suite::EqualityCases;
  if (name == "derivative") return Suite::Derivative;
  if (name == "levelset") return Suite::Levelset;
  if (name == "mixed") return Suite::Mixed;
  if (name == "inradius") return Suite::Inradius;
  if (name == "euclidean") return Suite::Euclidean;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::vector<Pair> builtin_pairs(int dim) {
  std::vector<Pair> out;
  if (dim != 3) {
    const Body square = centered_box({1, 1});
    const Body triangle = Body::from_points(std::vector{vec({-1, -1}), vec({3, -1}), vec({-1, 3})}, 2);
    out.push_back({"triangle/square", triangle, square, true});
    out.push_back({"square/diamond", square, gen::diamond(2), true});
    out.push_back({"square/square", square, square, true});
    out.push_back({"rectangle/square", centered_box({2, 1}), square, true});
  }
  if (dim != 2) {
    const Body cube = centered_box({1, 1, 1});
    const std::vector<Vector> normals{vec({-1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1}), vec({1, 1, 1})};
    out.push_back({"tetrahedron/cube", gen::circumscribed(cube, normals), cube, true});
    out.push_back({"cube/octahedron", cube, gen::diamond(3), true});
    out.push_back({"cube/cube", cube, cube, true});
    out.push_back({"box/cube", centered_box({2, 1, 1.5}), cube, true});
  }
  return out;
}

Pair random_pair(int dim, std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int m_omega = (dim == 2 ? 5 : 6) + static_cast<int>(rng() % (dim == 2 ? 8 : 9));
  const int m_k = (dim == 2 ? 4 : 5) + static_cast<int>(rng() % 6);

  const Body omega0 = gen::random_hull(m_omega, dim, rng);
  Vector shift(dim);
  for (int i = 0; i < dim; ++i) shift[i] = 4.0 * u(rng) - 2.0;
  const Body omega = scale_translate(omega0, 1.0 + 2.0 * u(rng), shift);

  const Body k0 = gen::random_hull(m_k, dim, rng);
  const double k_scale = 0.3 + 0.7 * u(rng);
  const Body k = scale_translate(k0, k_scale, -k_scale * k0.centroid());

  char name[64];
  std::snprintf(name, sizeof name, "random%dd#%d(seed=%llu)", dim, index, static_cast<unsigned long long>(seed));
  return Pair{name, omega, k, false};
}

Corpus build_corpus(const Config& config) {
  std::vector<std::function<Pair()>> makers;
  for (Pair& p : builtin_pairs(config.dim)) makers.push_back([p] { return p; });
  if (config.dim != 3)
    for (int i = 0; i < config.pairs_2d; ++i) makers.push_back([&config, i] { return random_pair(2, config.seed, i); });
  if (config.dim != 2)
    for (int i = 0; i < config.pairs_3d; ++i) makers.push_back([&config, i] { return random_pair(3, config.seed, i); });

  const int n = static_cast<int>(makers.size());
  std::vector<std::optional<Entry>> slots(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) if (config.parallel)
  for (int i = 0; i < n; ++i) {
    try {
      Pair pair = makers[i]();
      CurveFamily family = curve_family_serial(pair.omega, pair.k, config.grid_points);
      slots[i].emplace(Entry{std::move(pair), std::move(family)});
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Corpus corpus;
  for (auto& s : slots) {
    if (config.perimeter_fault != 1.0)
      for (CurveSample& sample : s->family.samples) sample.p *= config.perimeter_fault;
    corpus.entries.push_back(std::move(*s));
  }
  return corpus;
}

std::vector<Check> check_inequality(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 1, [](const Entry& e, std::vector<Worst>& out) {
    const auto& s = e.family.samples;
    const double p0 = s.front().p;
    for (const CurveSample& x : s) {
      const double bound = std::pow(std::max(0.0, 1.0 - x.lambda / e.family.inradius), e.family.dim - 1) * p0;
      out[0].take((bound - x.p) / p0, at(e, x.lambda));
    }
  });
  return {make_check("inequality: perimeter >= (1-lambda/r)^(n-1) p(0)", w[0], config.tol_check)};
}

std::vector<Check> check_concavity(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 2, [](const Entry& e, std::vector<Worst>& out) {
    const auto& s = e.family.samples;
    double max_f0 = 0.0, max_f1 = 0.0;
    for (const CurveSample& x : s) max_f0 = std::max(max_f0, x.f0), max_f1 = std::max(max_f1, x.f1);
    for (std::size_t j = 1; j + 1 < s.size(); ++j) {
      out[0].take((s[j + 1].f0 - 2.0 * s[j].f0 + s[j - 1].f0) / max_f0, at(e, s[j].lambda));
      out[1].take((s[j + 1].f1 - 2.0 * s[j].f1 + s[j - 1].f1) / max_f1, at(e, s[j].lambda));
    }
  });
  return {make_check("concavity: second difference of f0 = v^(1/n)", w[0], config.tol_check),
          make_check("concavity: second difference of f1 = v1^(1/(n-1))", w[1], config.tol_check)};
}

std::vector<Check> check_quotient(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 6, [](const Entry& e, std::vector<Worst>& out) {
    const auto& s = e.family.samples;
    const double p0sq = s.front().p * s.front().p;
    bool flat = false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      out[2].take(-s[j].xi / p0sq, at(e, s[j].lambda));
      if (j + 1 == s.size()) break;
      out[0].take(s[j + 1].psi - s[j].psi, at(e, s[j].lambda));
      const double drop = s[j].psi - s[j + 1].psi;
      if (flat) out[1].take(drop, at(e, s[j].lambda));
      // A step counts as flat only at rounding level; nearly tangential
      // erosions lose psi by ~1e-11 per step before dropping sharply.
      flat = flat || drop <= kFlatStep * s[j].psi;
      out[3].take((s[j + 1].xi - s[j].xi) / p0sq, at(e, s[j].lambda));
    }

    if (const auto start = psi_constant_index(e.family)) {
      const double lstar = s[*start].lambda;
      const auto anchor = inner_parallel(e.pair.omega, e.pair.k, lstar);
      double failures = anchor && tangential_feasibility(*anchor, e.pair.k) ? 0.0 : 1.0;
      for (std::size_t j = *start + 1; anchor && j < s.size(); ++j) {
        const auto body = inner_parallel(e.pair.omega, e.pair.k, s[j].lambda);
        if (!body || !detect_homothety(*anchor, *body)) failures += 1.0;
      }
      out[4].take(failures, at(e, lstar));
    }

    // psi is invariant under homotheties of omega.
    const double ratio = 0.5 + 1.5 * std::abs(std::sin(12.9898 * static_cast<double>(s.size()) + e.pair.omega.volume()));
    const Body scaled = scale_translate(e.pair.omega, ratio, Vector::Constant(e.pair.omega.dim(), 0.25));
    const int n = e.family.dim;
    const double psi_scaled = scaled.volume() / std::pow(aniso_perimeter(scaled, e.pair.k), double(n) / (n - 1));
    const double psi_plain =
        e.pair.omega.volume() / std::pow(aniso_perimeter(e.pair.omega, e.pair.k), double(n) / (n - 1));
    out[5].take(std::abs(psi_scaled / psi_plain - 1.0), at(e, 0.0));
  });
  return {make_check("quotient: psi non-increasing", w[0], 1e-9),
          make_check("quotient: psi constancy persists once reached", w[1], 1e-9),
          make_check("quotient: xi >= 0 (relative to p(0)^2)", w[2], 1e-6),
          make_check("quotient: xi non-increasing (relative to p(0)^2)", w[3], 1e-6),
          make_check("quotient: tail erosions homothetic to omega~lambda*K and tangential (failures)", w[4], 0.0),
          make_check("quotient: psi homothety invariance (relative)", w[5], 1e-9)};
}

std::vector<Check> check_equality_cases(const Corpus& corpus, const Config&) {
  Worst inradius_err, profile, homothetic, certificate, consistency, xi_planar, xi_spatial, psi_closed;
  int equality_cases = 0;
  for (const Entry& e : corpus.entries) {
    if (!e.pair.builtin) continue;
    const auto& s = e.family.samples;
    const int n = e.family.dim;
    const EqualityReport report = classify_equality(e.pair.omega, e.pair.k, e.family);
    consistency.take(report.equality_mid == report.tangential.has_value() ? 0.0 : 1.0, at(e, s[s.size() / 2].lambda));

    if (!is_equality_case(e.pair.name)) {
      // Strictly decreasing psi, no certificate.
      consistency.take(report.equality_mid || report.tangential || report.psi_constant_from ? 1.0 : 0.0, at(e, 0.0));
      continue;
    }
    ++equality_cases;
    inradius_err.take(std::abs(e.family.inradius - 1.0), at(e, 0.0));
    const double p_expected = expected_p0(e.pair.name);
    for (const CurveSample& x : s) {
      const double closed = p_expected * std::pow(1.0 - x.lambda, n - 1);
      profile.take(std::abs(x.p - closed) / closed, at(e, x.lambda));
      if (n == 2)
        xi_planar.take(std::abs(x.xi), at(e, x.lambda));
      else
        xi_spatial.take(std::abs(x.xi) / (p_expected * p_expected), at(e, x.lambda));
      const auto body = inner_parallel(e.pair.omega, e.pair.k, x.lambda);
      homothetic.take(body && detect_homothety(*body, e.pair.omega) ? 0.0 : 1.0, at(e, x.lambda));
    }
    if (report.tangential) {
      certificate.take(report.tangential->center.norm() + std::abs(report.tangential->ratio - 1.0), at(e, 0.0));
    } else {
      certificate.take(std::numeric_limits<double>::infinity(), at(e, 0.0));
    }
    consistency.take(report.equality_mid && report.psi_constant_from == 0.0 && report.tail_homothetic == true ? 0.0
                                                                                                               : 1.0,
                     at(e, 0.0));
  }

  // Closed forms: psi of the triangle is 1/32, of the square 1/16; the
  // rectangle starts at 8/144 and has xi = 16 throughout.
  if (const Entry* t = find_entry(corpus, "triangle/square"))
    for (const CurveSample& x : t->family.samples) psi_closed.take(std::abs(x.psi - 1.0 / 32.0), at(*t, x.lambda));
  if (const Entry* q = find_entry(corpus, "square/square"))
    for (const CurveSample& x : q->family.samples) psi_closed.take(std::abs(x.psi - 1.0 / 16.0), at(*q, x.lambda));
  Worst rect_xi;
  if (const Entry* r = find_entry(corpus, "rectangle/square")) {
    psi_closed.take(std::abs(r->family.samples.front().psi - 8.0 / 144.0), at(*r, 0.0));
    for (const CurveSample& x : r->family.samples) rect_xi.take(std::abs(x.xi - 16.0), at(*r, x.lambda));
  }

  std::vector<Check> checks{
      make_check("equality: inradius of equality cases is 1", inradius_err, 1e-10),
      make_check("equality: p(lambda) = p(0)(1-lambda)^(n-1) (relative)", profile, 1e-9),
      make_check("equality: every erosion homothetic to omega (failures)", homothetic, 0.0),
      make_check("equality: certificate center 0, ratio 1", certificate, 1e-8),
      make_check("equality: report consistency (equality <=> certificate) (failures)", consistency, 0.0),
      make_check("equality: xi = 0 on planar equality cases", xi_planar, 1e-6),
      make_check("equality: xi = 0 on spatial equality cases (relative to p(0)^2)", xi_spatial, 1e-6),
      make_check("equality: xi = 16 for rectangle/square", rect_xi, 1e-6),
      make_check("equality: closed-form psi values", psi_closed, 1e-12),
  };
  if (equality_cases == 0) checks.clear();
  return checks;
}

std::vector<Check> check_derivative(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 2, [](const Entry& e, std::vector<Worst>& out) {
    const double residual = check_derivative_identity(e.family);
    out[e.pair.builtin ? 1 : 0].take(residual, at(e, 0.0));
  });
  return {make_check("derivative: v' = -n v1 on random pairs (relative)", w[0], 1e-3),
          make_check("derivative: v' = -n v1 on closed-form cases (relative)", w[1], 1e-6)};
}

std::vector<Check> check_levelset(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 1, [&config](const Entry& e, std::vector<Worst>& out) {
    const Body& omega = e.pair.omega;
    const int dim = omega.dim();
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(e.pair.name.size()),
                      static_cast<std::uint32_t>(std::hash<std::string>{}(e.pair.name))};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    Vector lo = omega.vertices().front(), hi = lo;
    for (const Vector& v : omega.vertices()) lo = lo.cwiseMin(v), hi = hi.cwiseMax(v);
    std::vector<Vector> points;
    while (points.size() < 200) {
      Vector x(dim);
      for (int i = 0; i < dim; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
      if (omega.contains(x, 0.0)) points.push_back(x);
    }
    std::vector<double> distances;
    for (const Vector& x : points) distances.push_back(distance(omega, e.pair.k, x));

    double mismatches = 0.0;
    double worst_lambda = 0.0;
    for (int g = 0; g < 8; ++g) {
      const double lambda = kGridCoverage * e.family.inradius * u(rng);
      const auto body = inner_parallel(omega, e.pair.k, lambda);
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::abs(distances[i] - lambda) <= 1e-8) continue;
        const bool member = body && body->contains(points[i], 0.0);
        if (member != (distances[i] >= lambda)) mismatches += 1.0, worst_lambda = lambda;
      }
    }
    out[0].take(mismatches, at(e, worst_lambda));
  });
  return {make_check("levelset: x in omega~lambdaK <=> distance >= lambda (mismatches)", w[0], 0.0)};
}

std::vector<Check> check_mixed(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 1, [](const Entry& e, std::vector<Worst>& out) {
    for (const CurveSample& x : e.family.samples)
      out[0].take(std::abs(x.p - e.family.dim * x.v1) / x.p, at(e, x.lambda));
  });

  Worst closed;
  const Body unit2 = Body::from_points(std::vector{vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}, 2);
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{0.5, 3.0}, std::pair{1.0, 1.0}}) {
    const Body c = Body::from_points(std::vector{vec({0, 0}), vec({a, 0}), vec({a, b}), vec({0, b})}, 2);
    const auto w2 = steiner_coefficients(c, unit2).w;
    const double expected[] = {a * b, (a + b) / 2.0, 1.0};
    for (int i = 0; i < 3; ++i) closed.take(std::abs(w2[i] - expected[i]) / expected[i], "box2d");
  }
  std::vector<Vector> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(vec({double(m & 1), double(m >> 1 & 1), double(m >> 2 & 1)}));
  const Body unit3 = Body::from_points(cube, 3);
  for (auto [a, b, c] : {std::tuple{2.0, 1.0, 0.5}, std::tuple{1.0, 1.0, 1.0}, std::tuple{3.0, 0.25, 1.5}}) {
    const double hw[] = {a / 2, b / 2, c / 2};
    const auto w3 = steiner_coefficients(gen::box(hw), unit3).w;
    const double expected[] = {a * b * c, (a * b + b * c + c * a) / 3.0, (a + b + c) / 3.0, 1.0};
    for (int i = 0; i < 4; ++i) closed.take(std::abs(w3[i] - expected[i]) / expected[i], "box3d");
  }
  const Body tri = Body::from_points(std::vector{vec({-1, -1}), vec({3, -1}), vec({-1, 3})}, 2);
  const auto wt = steiner_coefficients(tri, centered_box({1, 1})).w;
  const double expected_t[] = {8.0, 8.0, 4.0};
  for (int i = 0; i < 3; ++i) closed.take(std::abs(wt[i] - expected_t[i]) / expected_t[i], "triangle/square");

  return {make_check("mixed: perimeter = n w1 (relative)", w[0], config.tol_check),
          make_check("mixed: Steiner coefficients match closed forms (relative)", closed, 1e-9)};
}

std::vector<Check> check_inradius(const Corpus& corpus, const Config& config) {
  const auto w = map_entries(corpus, config, 3, [](const Entry& e, std::vector<Worst>& out) {
    const Body& omega = e.pair.omega;
    const Body& k = e.pair.k;
    const Inradius in = inradius(omega, k);
    // Oracle: bisection on emptiness of the eroded halfspace system.
    auto empty = [&](double lambda) { return !find_interior_point(erode_halfspaces(omega, k, lambda), 1e-13); };
    double lo = 0.0, hi = 1.0;
    while (!empty(hi)) lo = hi, hi *= 2.0;
    for (int i = 0; i < 80 && hi - lo > 1e-14; ++i) {
      const double mid = 0.5 * (lo + hi);
      (empty(mid) ? hi : lo) = mid;
    }
    out[0].take(std::abs(in.r - 0.5 * (lo + hi)), at(e, in.r));
    double containment = 0.0;
    for (const Vector& v : k.vertices()) {
      const Vector x = in.incenter + in.r * v;
      for (const Halfspace& h : omega.hrep().halfspaces) containment = std::max(containment, h.normal.dot(x) - h.offset);
    }
    out[1].take(containment, at(e, in.r));
    out[2].take(inner_parallel(omega, k, in.r + 1e-6) ? 1.0 : 0.0, at(e, in.r + 1e-6));
  });
  Worst rect;
  const Inradius r = inradius(centered_box({2, 1}), centered_box({1, 1}));
  rect.take(std::abs(r.r - 1.0), "rectangle/square");
  return {make_check("inradius: LP vs emptiness bisection", w[0], 1e-8),
          make_check("inradius: incenter + r K inside omega", w[1], 1e-8),
          make_check("inradius: erosion beyond r is empty (failures)", w[2], 0.0),
          make_check("inradius: rectangle/square r = 1", rect, 1e-10)};
}

std::vector<Check> check_euclidean(const Config& config) {
  (void)config;
  Worst planar, spatial, form;
  const Body disk = gen::regular_polygon(64);
  const Body unit2 = Body::from_points(std::vector{vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}, 2);
  planar.take(std::abs(aniso_perimeter(unit2, disk) / 4.0 - 1.0), "unit square / 64-gon");

  const Body ball = gen::icosphere(2);
  double deficit = 0.0;
  for (const Facet& f : ball.facets()) deficit = std::max(deficit, 1.0 - f.offset);
  const double hw[] = {0.5, 0.5, 0.5};
  const double per3 = aniso_perimeter(gen::box(hw), ball);
  spatial.take(std::abs(per3 / 6.0 - 1.0) - deficit, "unit cube / icosphere");

  // Tangential bodies of the ball surrogate are homothets of their form body.
  for (int m : {3, 5, 7}) {
    std::vector<Vector> normals;
    for (int i = 0; i < m; ++i) {
      const double a = 2.0 * 3.14159265358979323846 * (i + 0.3 * (i % 2)) / m;
      normals.push_back(vec({std::cos(a), std::sin(a)}));
    }
    const Body c = gen::circumscribed(disk, normals);
    const bool certified = tangential_feasibility(c, disk).has_value();
    const bool homothetic = detect_homothety(form_body(c), c, 1e-2).has_value();
    form.take(certified && homothetic ? 0.0 : 1.0, "circumscribed " + std::to_string(m) + "-gon");
  }
  const std::vector<Vector> tetra{vec({-1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1}), vec({1, 1, 1})};
  const Body c3 = gen::circumscribed(ball, tetra);
  form.take(tangential_feasibility(c3, ball) && detect_homothety(form_body(c3), c3, 1e-2) ? 0.0 : 1.0,
            "circumscribed tetrahedron");

  return {make_check("euclidean: Per_K([0,1]^2) = 4 with K the 64-gon (relative)", planar, 2e-3),
          make_check("euclidean: Per_K([0,1]^3) = 6 beyond the icosphere support deficit", spatial, 0.0),
          make_check("euclidean: certified bodies homothetic to their form body (failures)", form, 0.0)};
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

void Report::print(std::ostream& out) const {
  char buf[96];
  if (!header.empty()) out << "# " << header << '\n';
  for (const Check& c : checks) {
    std::snprintf(buf, sizeof buf, " worst=%.3e limit=%.1e", c.worst, c.limit);
    out << (c.passed() ? "[PASS] " : "[FAIL] ") << c.name << buf;
    if (!c.passed() && !c.where.empty()) out << " at " << c.where;
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
}

Report run(Suite suite, const Corpus& corpus, const Config& config) {
  Report r;
  char header[160];
  std::snprintf(header, sizeof header, "seed=%llu grid=%d tol_check=%g dim=%s pairs_2d=%d pairs_3d=%d",
                static_cast<unsigned long long>(config.seed), config.grid_points, config.tol_check,
                config.dim == 0 ? "2,3" : std::to_string(config.dim).c_str(), config.pairs_2d, config.pairs_3d);
  r.header = header;
  auto add = [&r](std::vector<Check> c) { r.checks.insert(r.checks.end(), c.begin(), c.end()); };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Inequality) add(check_inequality(corpus, config));
  if (all || suite == Suite::Concavity) add(check_concavity(corpus, config));
  if (all || suite == Suite::Quotient) add(check_quotient(corpus, config));
  if (all || suite == Suite::EqualityCases) add(check_equality_cases(corpus, config));
  if (all || suite == Suite::Derivative) add(check_derivative(corpus, config));
  if (all || suite == Suite::Levelset) add(check_levelset(corpus, config));
  if (all || suite == Suite::Mixed) add(check_mixed(corpus, config));
  if (all || suite == Suite::Inradius) add(check_inradius(corpus, config));
  if (all || suite == Suite::Euclidean) add(check_euclidean(config));
  return r;
}

Report run(Suite suite, const Config& config) {
  if (suite == Suite::Euclidean) return run(suite, Corpus{}, config);
  return run(suite, build_corpus(config), config);
}

}  // namespace innerpar::verify
