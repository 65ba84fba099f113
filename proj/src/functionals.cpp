#include "innerpar/functionals.hpp"

#include "innerpar/erosion.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>

namespace innerpar {

double aniso_perimeter(const Body& c, const Body& k) {
  if (c.dim() != k.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "perimeter of different dimensions");
  double per = 0.0;
  for (const Facet& f : c.facets()) per += support(k, f.normal) * f.measure;
  return per;
}

SteinerCoefficients steiner_coefficients(const Body& c, const Body& k) {
  if (c.dim() != k.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "Steiner polynomial of different dimensions");
  const int n = c.dim();
  Eigen::MatrixXd a(n + 1, n + 1);
  Eigen::VectorXd vols(n + 1);
  for (int t = 0; t <= n; ++t) {
    vols[t] = t == 0 ? c.volume() : minkowski_sum(c, scale_translate(k, t, Vector::Zero(n))).volume();
    double binom = 1.0;
    for (int i = 0; i <= n; ++i) {
      a(t, i) = binom * std::pow(static_cast<double>(t), i);
      binom = binom * (n - i) / (i + 1);
    }
  }
  const Eigen::VectorXd w = a.fullPivLu().solve(vols);
  return SteinerCoefficients{n, std::vector<double>(w.data(), w.data() + w.size())};
}

double perimeter_via_mixed(const Body& c, const Body& k) { return c.dim() * steiner_coefficients(c, k).w[1]; }

double relative_probe_step(int) { return 1e-6; }

namespace {

Body erode_or_fail(const Body& omega, const Body& k, double lambda) {
  auto body = inner_parallel(omega, k, lambda);
  if (!body) throw GeometryError(ErrorKind::NumericalFailure, "erosion unexpectedly empty below the inradius");
  return std::move(*body);
}

struct GridSpec {
  double r;
  Vector incenter;
  double step;
  double probe;

  // The p'_+ window stays a quarter of the way clear of r.
  double window(int j) const { return 0.25 * std::min(step, r - j * step); }
};

GridSpec grid_spec(const Body& omega, const Body& k, int grid_points) {
  if (grid_points < 8) throw GeometryError(ErrorKind::InvalidInput, "curve grid needs at least 8 points");
  const Inradius in = inradius(omega, k);
  return GridSpec{in.r, in.incenter, kGridCoverage * in.r / (grid_points - 1),
                  relative_probe_step(omega.dim()) * in.r};
}

CurveFamily assemble(const GridSpec& g, int dim, std::vector<CurveSample> samples) {
  return CurveFamily{dim, g.r, g.incenter, g.step, g.probe, std::move(samples)};
}

}  // namespace

namespace {

// Right derivative of p at λ. Between combinatorial events p is a polynomial
// of degree n-1 <= 2, so the three-point forward difference is exact there.
// Steps h and h/2 must agree; otherwise an event sits inside the window and
// the step shrinks tenfold. Wide windows come first: features narrower than
// about 1e-4·r can fall under the hull tolerance and corrupt p.
double forward_slope(const Body& omega, const Body& k, double lambda, double p, double h, double min_h) {
  auto at = [&](double t) { return aniso_perimeter(erode_or_fail(omega, k, lambda + t), k); };
  auto three_point = [p](double step, double p1, double p2) { return (4.0 * p1 - 3.0 * p - p2) / (2.0 * step); };
  double slope = 0.0;
  for (; h >= min_h; h *= 0.1) {
    const double half = at(0.5 * h), one = at(h), two = at(2.0 * h);
    const double coarse = three_point(h, one, two);
    slope = three_point(0.5 * h, half, one);
    if (std::abs(coarse - slope) <= 1e-7 * (std::abs(slope) + p / omega.diameter())) break;
  }
  return slope;
}

}  // namespace

CurveSample curve_sample(const Body& omega, const Body& k, double lambda, double probe_step, double slope_window) {
  const int n = omega.dim();
  const Body body = erode_or_fail(omega, k, lambda);

  CurveSample s;
  s.lambda = lambda;
  s.v = body.volume();
  s.p = aniso_perimeter(body, k);
  s.v1 = steiner_coefficients(body, k).w[1];
  s.f0 = std::pow(s.v, 1.0 / n);
  s.f1 = std::pow(s.v1, 1.0 / (n - 1));
  s.psi = s.v / std::pow(s.p, static_cast<double>(n) / (n - 1));
  s.v_ahead = erode_or_fail(omega, k, lambda + probe_step).volume();
  s.v_behind = lambda >= probe_step ? erode_or_fail(omega, k, lambda - probe_step).volume()
                                    : std::numeric_limits<double>::quiet_NaN();
  s.dp = forward_slope(omega, k, lambda, s.p, slope_window, probe_step);
  s.xi = s.p * s.p + static_cast<double>(n) / (n - 1) * s.v * s.dp;
  return s;
}

CurveFamily curve_family_serial(const Body& omega, const Body& k, int grid_points) {
  const GridSpec g = grid_spec(omega, k, grid_points);
  std::vector<CurveSample> samples;
  samples.reserve(grid_points);
  for (int j = 0; j < grid_points; ++j) samples.push_back(curve_sample(omega, k, j * g.step, g.probe, g.window(j)));
  return assemble(g, omega.dim(), std::move(samples));
}

CurveFamily curve_family(const Body& omega, const Body& k, int grid_points) {
  const GridSpec g = grid_spec(omega, k, grid_points);
  std::vector<CurveSample> samples(grid_points);
  std::vector<std::exception_ptr> errors(grid_points);
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < grid_points; ++j) {
    try {
      samples[j] = curve_sample(omega, k, j * g.step, g.probe, g.window(j));
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return assemble(g, omega.dim(), std::move(samples));
}

double check_derivative_identity(const CurveFamily& family) {
  const auto& s = family.samples;
  if (s.size() < 16) throw GeometryError(ErrorKind::InvalidInput, "derivative check needs at least 16 samples");
  const int n = family.dim;
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < s.size(); ++j) {
    const double dv = (s[j].v_ahead - s[j].v_behind) / (2.0 * family.probe_step);
    worst = std::max(worst, std::abs(dv + n * s[j].v1) / (n * s[j].v1));
  }
  return worst;
}

void write_csv(std::ostream& out, const CurveFamily& family) {
  out << "lambda,v,p,v1,f0,f1,psi,xi\n";
  char buf[512];
  for (const CurveSample& s : family.samples) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n", s.lambda, s.v, s.p, s.v1, s.f0,
                  s.f1, s.psi, s.xi);
    out << buf;
  }
}

}  // namespace innerpar
