#include "innerpar/shape.hpp"

#include "innerpar/erosion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace innerpar {

std::optional<Homothety> detect_homothety(const Body& target, const Body& source, double rel_tol) {
  if (target.dim() != source.dim()) return std::nullopt;
  if (target.vertices().size() != source.vertices().size()) return std::nullopt;
  const double ratio = std::pow(target.volume() / source.volume(), 1.0 / target.dim());
  const Vector shift = target.centroid() - ratio * source.centroid();
  const double tol = rel_tol * target.diameter();

  std::vector<char> used(target.vertices().size(), 0);
  for (const Vector& v : source.vertices()) {
    const Vector mapped = ratio * v + shift;
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < target.vertices().size(); ++i) {
      if (used[i]) continue;
      const double d = (target.vertices()[i] - mapped).norm();
      if (d < best_dist) best_dist = d, best = i;
    }
    if (best_dist > tol) return std::nullopt;
    used[best] = 1;
  }
  return Homothety{ratio, shift};
}

Body form_body(const Body& c) {
  HPolytope h{c.dim(), {}};
  for (const Facet& f : c.facets()) h.halfspaces.push_back({f.normal, 1.0});
  try {
    return Body::from_hpolytope(h);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::EmptyOrUnbounded) throw;
    throw GeometryError(ErrorKind::Unbounded, "facet normals do not positively span");
  }
}

std::optional<TangentialCertificate> tangential_feasibility(const Body& omega, const Body& k) {
  if (omega.dim() != k.dim()) return std::nullopt;
  const int n = omega.dim();
  const auto& facets = omega.facets();
  const auto rows = static_cast<Eigen::Index>(facets.size());
  Eigen::MatrixXd a(rows, n + 1);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    a.row(i).head(n) = facets[i].normal.transpose();
    a(i, n) = support(k, facets[i].normal);
    b[i] = facets[i].offset;
  }

  const Eigen::MatrixXd normal_matrix = a.transpose() * a;
  const Eigen::VectorXd rhs = a.transpose() * b;
  Eigen::VectorXd sol;
  Eigen::LLT<Eigen::MatrixXd> llt(normal_matrix);
  if (llt.info() == Eigen::Success)
    sol = llt.solve(rhs);
  else
    sol = normal_matrix.fullPivLu().solve(rhs);

  const double residual = (a * sol - b).cwiseAbs().maxCoeff();
  const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  const double ratio = sol[n];
  if (!(residual <= 1e-8 * scale) || !(ratio > 1e-9)) return std::nullopt;
  return TangentialCertificate{Vector(sol.head(n)), ratio, residual};
}

std::optional<std::size_t> psi_constant_index(const CurveFamily& family) {
  const auto& s = family.samples;
  if (s.size() < 2) return std::nullopt;
  std::optional<std::size_t> from;
  for (std::size_t j = s.size() - 1; j-- > 0;) {
    if (s[j + 1].psi >= s[j].psi - kPsiFlatTol)
      from = j;
    else
      break;
  }
  return from;
}

EqualityReport classify_equality(const Body& omega, const Body& k, const CurveFamily& family) {
  EqualityReport report;
  const auto& s = family.samples;
  const int n = family.dim;

  const CurveSample& mid = s[s.size() / 2];
  const double bound = std::pow(1.0 - mid.lambda / family.inradius, n - 1) * s.front().p;
  report.equality_mid = std::abs(mid.p - bound) <= kEqualityTol * bound;

  report.tangential = tangential_feasibility(omega, k);

  if (const auto start = psi_constant_index(family)) {
    report.psi_constant_from = s[*start].lambda;
    const auto anchor = inner_parallel(omega, k, s[*start].lambda);
    bool homothetic = anchor.has_value();
    for (std::size_t j = *start + 1; homothetic && j < s.size(); ++j) {
      const auto body = inner_parallel(omega, k, s[j].lambda);
      homothetic = body && detect_homothety(*anchor, *body).has_value();
    }
    report.tail_homothetic = homothetic;
    report.tail_tangential = anchor && tangential_feasibility(*anchor, k).has_value();
  }
  return report;
}

std::string to_json(const EqualityReport& report) {
  nlohmann::ordered_json j;
  j["equality_mid"] = report.equality_mid;
  j["psi_constant_from"] = report.psi_constant_from ? nlohmann::ordered_json(*report.psi_constant_from) : nullptr;
  if (report.tangential) {
    const auto& c = report.tangential;
    j["tangential"] = {{"center", std::vector<double>(c->center.data(), c->center.data() + c->center.size())},
                       {"ratio", c->ratio},
                       {"residual", c->residual}};
  } else {
    j["tangential"] = nullptr;
  }
  j["tail_homothetic"] = report.tail_homothetic ? nlohmann::ordered_json(*report.tail_homothetic) : nullptr;
  j["tail_tangential"] = report.tail_tangential ? nlohmann::ordered_json(*report.tail_tangential) : nullptr;
  return j.dump();
}

}  // namespace innerpar
