#include "innerpar/erosion.hpp"

#include "innerpar/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace innerpar {

HPolytope erode_halfspaces(const Body& omega, const Body& k, double lambda) {
  if (omega.dim() != k.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "erosion of different dimensions");
  if (lambda < 0.0) throw GeometryError(ErrorKind::NegativeLambda, "erosion parameter must be >= 0");
  HPolytope h{omega.dim(), {}};
  h.halfspaces.reserve(omega.facets().size());
  for (const Facet& f : omega.facets())
    h.halfspaces.push_back({f.normal, f.offset - lambda * support(k, f.normal)});
  return h;
}

std::optional<Body> inner_parallel(const Body& omega, const Body& k, double lambda) {
  const HPolytope h = erode_halfspaces(omega, k, lambda);
  if (lambda == 0.0) return omega;
  std::optional<InteriorPoint> ip;
  try {
    ip = find_interior_point(h);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::Unbounded) throw;
  }
  if (!ip) return std::nullopt;
  return Body::from_hpolytope(canonicalize(h));
}

Inradius inradius(const Body& omega, const Body& k) {
  if (omega.dim() != k.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "inradius of different dimensions");
  const int dim = omega.dim();
  const auto& facets = omega.facets();
  const int rows = static_cast<int>(facets.size());

  lp::LinearProgram prog;
  prog.objective = Eigen::VectorXd::Zero(dim + 1);
  prog.objective[dim] = 1.0;
  prog.constraints.resize(rows, dim + 1);
  prog.rhs.resize(rows);
  for (int i = 0; i < rows; ++i) {
    prog.constraints.row(i).head(dim) = facets[i].normal.transpose();
    prog.constraints(i, dim) = support(k, facets[i].normal);
    prog.rhs[i] = facets[i].offset;
  }
  const lp::LPResult res = lp::solve(prog);
  if (res.status != lp::Status::Optimal || !(*res.value > 0.0))
    throw GeometryError(ErrorKind::NumericalFailure, "inradius LP has no positive optimum");
  return Inradius{*res.value, Vector(res.point->head(dim))};
}

double distance(const Body& omega, const Body& k, const Vector& x) {
  if (omega.dim() != k.dim() || x.size() != omega.dim())
    throw GeometryError(ErrorKind::DimensionMismatch, "distance arguments differ in dimension");
  for (const Halfspace& h : k.hrep().halfspaces)
    if (h.offset <= kGeomTol)
      throw GeometryError(ErrorKind::OriginNotInterior, "gauge body must contain the origin in its interior");
  if (!omega.contains(x)) throw GeometryError(ErrorKind::PointOutside, "point lies outside omega");

  double d = std::numeric_limits<double>::infinity();
  for (const Facet& f : omega.facets())
    d = std::min(d, (f.offset - f.normal.dot(x)) / support(k, f.normal));
  return std::max(d, 0.0);
}

ErosionFamily ErosionFamily::make(const Body& omega, const Body& k) {
  const Inradius in = innerpar::inradius(omega, k);
  return ErosionFamily{omega, k, in.r, in.incenter};
}

}  // namespace innerpar
