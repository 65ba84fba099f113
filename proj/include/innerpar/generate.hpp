#pragma once

#include "innerpar/polytope.hpp"

#include <random>
#include <span>

namespace innerpar::gen {

/// Axis-aligned box centered at the origin with the given half-widths.
Body box(std::span<const double> half_widths);

/// Convex hull of {0, e_1, ..., e_dim}.
Body simplex(int dim);

/// Cross-polytope hull{±e_i}.
Body diamond(int dim);

/// Regular m-gon inscribed in the circle of given radius, first vertex at angle `phase`.
Body regular_polygon(int m, double radius = 1.0, double phase = 0.0);

/// Icosahedron with each triangle split `subdivisions` times, vertices pushed to the unit sphere.
Body icosphere(int subdivisions);

/// Hull of m uniform points in the unit ball; resampled until width/diameter >= 0.05.
Body random_hull(int m, int dim, std::mt19937_64& rng);

/// {x : x·ν <= h_K(ν)} over the given normals: a tangential body of K.
Body circumscribed(const Body& k, std::span<const Vector> normals);

}  // namespace innerpar::gen
