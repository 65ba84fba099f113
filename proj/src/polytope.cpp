#include "innerpar/polytope.hpp"

#include "innerpar/linprog.hpp"
#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace innerpar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::EmptyOrUnbounded: return "EmptyOrUnbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonpositiveRatio: return "NonpositiveRatio";
    case ErrorKind::NegativeLambda: return "NegativeLambda";
    case ErrorKind::PointOutside: return "PointOutside";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 3) throw GeometryError(ErrorKind::InvalidInput, "dimension must be 2 or 3");
}

detail::Hull build_hull(std::span<const Vector> points, int dim) {
  check_dim(dim);
  for (const Vector& p : points) {
    if (p.size() != dim) throw GeometryError(ErrorKind::DimensionMismatch, "point has wrong dimension");
    if (!p.allFinite()) throw GeometryError(ErrorKind::InvalidInput, "non-finite coordinate");
  }
  return dim == 2 ? detail::hull2d(points) : detail::hull3d(points);
}

}  // namespace

Halfspace make_halfspace(const Vector& a, double b) {
  const double len = a.norm();
  if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(b))
    throw GeometryError(ErrorKind::InvalidInput, "halfspace normal must be nonzero and finite");
  return Halfspace{a / len, b / len};
}

Body Body::from_points(std::span<const Vector> points, int dim) {
  detail::Hull hull = build_hull(points, dim);

  Body body;
  body.vrep_ = VPolytope{dim, std::move(hull.vertices)};
  body.hrep_.dim = dim;
  const auto& verts = body.vrep_.vertices;

  Vector ref = Vector::Zero(dim);
  for (const Vector& v : verts) ref += v;
  ref /= static_cast<double>(verts.size());

  double vol = 0.0;
  Vector moment = Vector::Zero(dim);
  for (detail::HullFacet& hf : hull.facets) {
    Facet f{hf.normal, hf.offset, 0.0, std::move(hf.cycle)};
    Vector face_centroid = Vector::Zero(dim);
    if (dim == 2) {
      const Vector& a = verts[f.vertices[0]];
      const Vector& b = verts[f.vertices[1]];
      f.measure = (b - a).norm();
      face_centroid = 0.5 * (a + b);
    } else {
      const Eigen::Vector3d n = f.normal;
      const Vector& o = verts[f.vertices[0]];
      for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
        const Eigen::Vector3d e1 = verts[f.vertices[i]] - o;
        const Eigen::Vector3d e2 = verts[f.vertices[i + 1]] - o;
        const double tri = 0.5 * n.dot(e1.cross(e2));
        f.measure += tri;
        face_centroid += tri * (o + verts[f.vertices[i]] + verts[f.vertices[i + 1]]) / 3.0;
      }
      if (f.measure > 0.0) face_centroid /= f.measure;
    }
    // Cone over the facet with apex `ref`.
    const double height = f.offset - f.normal.dot(ref);
    const double cone = f.measure * height / dim;
    vol += cone;
    moment += cone * (ref + (static_cast<double>(dim) / (dim + 1)) * (face_centroid - ref));
    body.hrep_.halfspaces.push_back({f.normal, f.offset});
    body.facets_.push_back(std::move(f));
  }
  if (!(vol > 0.0)) throw GeometryError(ErrorKind::DegenerateInput, "hull has no volume");
  body.volume_ = vol;
  body.centroid_ = moment / vol;
  return body;
}

Body Body::from_hpolytope(const HPolytope& h) { return from_vpolytope(vrep_from_hrep(h)); }

double Body::diameter() const {
  double best = 0.0;
  const auto& v = vrep_.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, (v[i] - v[j]).squaredNorm());
  return std::sqrt(best);
}

double Body::facet_width() const {
  double width = std::numeric_limits<double>::infinity();
  for (const Facet& f : facets_) {
    double lo = std::numeric_limits<double>::infinity();
    for (const Vector& v : vrep_.vertices) lo = std::min(lo, f.normal.dot(v));
    width = std::min(width, f.offset - lo);
  }
  return width;
}

bool Body::contains(const Vector& x, double tol) const {
  for (const Halfspace& h : hrep_.halfspaces)
    if (h.normal.dot(x) > h.offset + tol) return false;
  return true;
}

VPolytope convex_hull(std::span<const Vector> points, int dim) {
  return VPolytope{dim, build_hull(points, dim).vertices};
}

HPolytope hrep_from_vrep(const VPolytope& v) {
  detail::Hull hull = build_hull(v.vertices, v.dim);
  HPolytope h{v.dim, {}};
  for (const detail::HullFacet& f : hull.facets) h.halfspaces.push_back({f.normal, f.offset});
  return h;
}

std::optional<InteriorPoint> find_interior_point(const HPolytope& h, double tol) {
  const int dim = h.dim;
  const int k = static_cast<int>(h.halfspaces.size());
  if (k == 0) throw GeometryError(ErrorKind::Unbounded, "no halfspaces");
  lp::LinearProgram prog;
  prog.objective = Eigen::VectorXd::Zero(dim + 1);
  prog.objective[dim] = 1.0;
  prog.constraints.resize(k, dim + 1);
  prog.rhs.resize(k);
  for (int i = 0; i < k; ++i) {
    prog.constraints.row(i).head(dim) = h.halfspaces[i].normal.transpose();
    prog.constraints(i, dim) = 1.0;
    prog.rhs[i] = h.halfspaces[i].offset;
  }
  const lp::LPResult res = lp::solve(prog);
  if (res.status == lp::Status::Unbounded)
    throw GeometryError(ErrorKind::Unbounded, "halfspace intersection is unbounded");
  if (res.status != lp::Status::Optimal) return std::nullopt;
  const double slack = (*res.point)[dim];
  if (slack <= tol) return std::nullopt;
  return InteriorPoint{Vector(res.point->head(dim)), slack};
}

InteriorPoint interior_point(const HPolytope& h) {
  auto ip = find_interior_point(h);
  if (!ip) throw GeometryError(ErrorKind::Empty, "halfspace intersection has empty interior");
  return *ip;
}

VPolytope vrep_from_hrep(const HPolytope& h) {
  check_dim(h.dim);
  std::optional<InteriorPoint> ip;
  try {
    ip = find_interior_point(h);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::Unbounded) throw;
  }
  if (!ip) throw GeometryError(ErrorKind::EmptyOrUnbounded, "no interior point");

  const Vector& x0 = ip->point;
  std::vector<Vector> dual;
  dual.reserve(h.halfspaces.size());
  for (const Halfspace& hs : h.halfspaces) dual.push_back(hs.normal / (hs.offset - hs.normal.dot(x0)));

  detail::Hull dual_hull;
  try {
    dual_hull = h.dim == 2 ? detail::hull2d(dual) : detail::hull3d(dual);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::DegenerateInput) throw;
    throw GeometryError(ErrorKind::EmptyOrUnbounded, "normals do not positively span");
  }

  const double eps = detail::hull_tolerance(dual);
  std::vector<Vector> verts;
  for (const detail::HullFacet& f : dual_hull.facets) {
    if (f.offset <= eps) throw GeometryError(ErrorKind::EmptyOrUnbounded, "polyhedron is unbounded");
    // x0 + n/c loses accuracy when dual points crowd together (nearly parallel
    // facets). Solve the incident planes directly instead.
    std::vector<int> incident;
    for (std::size_t i = 0; i < dual.size(); ++i)
      if (std::abs(f.normal.dot(dual[i]) - f.offset) <= eps) incident.push_back(static_cast<int>(i));
    Eigen::MatrixXd a(incident.size(), h.dim);
    Eigen::VectorXd b(incident.size());
    for (std::size_t r = 0; r < incident.size(); ++r) {
      a.row(r) = h.halfspaces[incident[r]].normal.transpose();
      b[r] = h.halfspaces[incident[r]].offset;
    }
    const auto qr = a.colPivHouseholderQr();
    if (static_cast<int>(incident.size()) >= h.dim && qr.rank() == h.dim) {
      verts.push_back(qr.solve(b));
    } else {
      verts.push_back(x0 + f.normal / f.offset);
    }
  }
  return convex_hull(verts, h.dim);
}

HPolytope canonicalize(const HPolytope& h) {
  HPolytope out{h.dim, {}};
  for (const Halfspace& raw : h.halfspaces) {
    const Halfspace hs = make_halfspace(raw.normal, raw.offset);
    auto dup = std::find_if(out.halfspaces.begin(), out.halfspaces.end(), [&](const Halfspace& o) {
      return (o.normal - hs.normal).norm() < kGeomTol;
    });
    if (dup == out.halfspaces.end())
      out.halfspaces.push_back(hs);
    else
      dup->offset = std::min(dup->offset, hs.offset);
  }

  for (std::size_t i = 0; i < out.halfspaces.size() && out.halfspaces.size() > 1;) {
    const int k = static_cast<int>(out.halfspaces.size()) - 1;
    lp::LinearProgram prog;
    prog.objective = out.halfspaces[i].normal;
    prog.constraints.resize(k, h.dim);
    prog.rhs.resize(k);
    int row = 0;
    for (std::size_t j = 0; j < out.halfspaces.size(); ++j) {
      if (j == i) continue;
      prog.constraints.row(row) = out.halfspaces[j].normal.transpose();
      prog.rhs[row] = out.halfspaces[j].offset;
      ++row;
    }
    const lp::LPResult res = lp::solve(prog);
    if (res.status == lp::Status::Optimal && *res.value < out.halfspaces[i].offset - kGeomTol)
      out.halfspaces.erase(out.halfspaces.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return out;
}

double volume(const Body& b) { return b.volume(); }

double support(const Body& b, const Vector& dir) {
  if (dir.size() != b.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "direction dimension");
  if (!(dir.norm() > 0.0)) throw GeometryError(ErrorKind::ZeroDirection, "support of zero direction");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vector& v : b.vertices()) best = std::max(best, dir.dot(v));
  return best;
}

double gauge(const Body& k, const Vector& x) {
  if (x.size() != k.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "point dimension");
  double rho = 0.0;
  for (const Halfspace& h : k.hrep().halfspaces) {
    if (h.offset <= kGeomTol)
      throw GeometryError(ErrorKind::OriginNotInterior, "gauge body must contain the origin in its interior");
    rho = std::max(rho, h.normal.dot(x) / h.offset);
  }
  return rho;
}

Body minkowski_sum(const Body& a, const Body& b) {
  if (a.dim() != b.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "Minkowski sum of different dimensions");
  std::vector<Vector> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const Vector& p : a.vertices())
    for (const Vector& q : b.vertices()) sums.push_back(p + q);
  return Body::from_points(sums, a.dim());
}

Body minkowski_sum(const Body& a, const Vector& point) { return translate(a, point); }

Body scale_translate(const Body& b, double ratio, const Vector& shift) {
  if (!(ratio > 0.0)) throw GeometryError(ErrorKind::NonpositiveRatio, "homothety ratio must be positive");
  if (shift.size() != b.dim()) throw GeometryError(ErrorKind::DimensionMismatch, "shift dimension");
  std::vector<Vector> pts;
  pts.reserve(b.vertices().size());
  for (const Vector& v : b.vertices()) pts.push_back(ratio * v + shift);
  return Body::from_points(pts, b.dim());
}

}  // namespace innerpar
