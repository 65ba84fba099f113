#pragma once

#include "innerpar/core.hpp"

#include <span>
#include <vector>

namespace innerpar::detail {

struct HullFacet {
  Vector normal;  // outward, unit length
  double offset;
  std::vector<int> cycle;  // indices into Hull::vertices, counterclockwise seen from outside
};

struct Hull {
  std::vector<Vector> vertices;  // extreme points in canonical order
  std::vector<HullFacet> facets;
};

/// Tolerance used for visibility and coplanarity tests on a point set.
double hull_tolerance(std::span<const Vector> points);

/// Andrew's monotone chain. Vertices counterclockwise from the lexicographic minimum.
Hull hull2d(std::span<const Vector> points);

/// Quickhull with conflict lists, horizon repair and coplanar-facet merging.
/// Vertices sorted lexicographically.
Hull hull3d(std::span<const Vector> points);

bool lex_less(const Vector& a, const Vector& b);

}  // namespace innerpar::detail
