#pragma once

#include "innerpar/core.hpp"

#include <optional>
#include <span>
#include <vector>

namespace innerpar {

/// {x : normal·x <= offset}, normal of unit length.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

/// Builds a halfspace from an arbitrary nonzero normal, rescaling the offset.
Halfspace make_halfspace(const Vector& a, double b);

struct HPolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
};

struct VPolytope {
  int dim = 0;
  std::vector<Vector> vertices;
};

struct Facet {
  Vector normal;
  double offset = 0.0;
  double measure = 0.0;
  // Indices into the body's vertex list: the two endpoints in 2D, the
  // boundary cycle (counterclockwise seen from outside) in 3D.
  std::vector<int> vertices;
};

/// A convex polytope with nonempty interior carrying both representations.
/// Immutable once built.
class Body {
 public:
  static Body from_points(std::span<const Vector> points, int dim);
  static Body from_vpolytope(const VPolytope& v) { return from_points(v.vertices, v.dim); }
  static Body from_hpolytope(const HPolytope& h);

  int dim() const { return vrep_.dim; }
  const VPolytope& vrep() const { return vrep_; }
  const std::vector<Vector>& vertices() const { return vrep_.vertices; }
  const HPolytope& hrep() const { return hrep_; }
  const std::vector<Facet>& facets() const { return facets_; }
  double volume() const { return volume_; }
  /// Volume centroid.
  const Vector& centroid() const { return centroid_; }
  double diameter() const;
  /// Minimum over facet normals of the body's extent along that normal.
  double facet_width() const;
  bool contains(const Vector& x, double tol = kGeomTol) const;

 private:
  Body() = default;

  VPolytope vrep_;
  HPolytope hrep_;
  std::vector<Facet> facets_;
  double volume_ = 0.0;
  Vector centroid_;
};

/// Extreme points of the hull. 2D: counterclockwise from the lexicographic
/// minimum. 3D: lexicographically sorted.
VPolytope convex_hull(std::span<const Vector> points, int dim);

HPolytope hrep_from_vrep(const VPolytope& v);

/// Vertex enumeration through the polar dual about an interior point.
VPolytope vrep_from_hrep(const HPolytope& h);

struct InteriorPoint {
  Vector point;
  double slack = 0.0;
};

/// Chebyshev-style center: maximizes s subject to a_i·x + s <= b_i.
/// Returns nullopt when the optimal slack is <= tol. Throws Unbounded if
/// the slack LP is unbounded.
std::optional<InteriorPoint> find_interior_point(const HPolytope& h, double tol = kGeomTol);

/// As find_interior_point, but throws Empty instead of returning nullopt.
InteriorPoint interior_point(const HPolytope& h);

/// Normalizes normals, merges parallel duplicates (keeping the smaller
/// offset) and drops constraints shown redundant by LP.
HPolytope canonicalize(const HPolytope& h);

double volume(const Body& b);

/// h_B(dir) = max over vertices of dir·v.
double support(const Body& b, const Vector& dir);

/// rho_K(x) = max_i (a_i·x)/b_i clamped at 0. Requires the origin in int K.
double gauge(const Body& k, const Vector& x);

Body minkowski_sum(const Body& a, const Body& b);

/// Sum with the singleton {point}.
Body minkowski_sum(const Body& a, const Vector& point);

/// x -> ratio·x + shift.
Body scale_translate(const Body& b, double ratio, const Vector& shift);

inline Body translate(const Body& b, const Vector& shift) { return scale_translate(b, 1.0, shift); }

}  // namespace innerpar
