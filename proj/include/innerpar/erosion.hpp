#pragma once

#include "innerpar/polytope.hpp"

#include <optional>

namespace innerpar {

/// Halfspaces {a_i·x <= b_i − λ·h_K(a_i)} over the facets of omega. This is
/// exactly omega ∼ λK for a polytope omega and any convex K.
HPolytope erode_halfspaces(const Body& omega, const Body& k, double lambda);

/// Inner parallel body omega ∼ λK, or nullopt when it has empty interior.
/// λ = 0 returns omega itself. Throws NegativeLambda for λ < 0.
std::optional<Body> inner_parallel(const Body& omega, const Body& k, double lambda);

struct Inradius {
  double r = 0.0;
  Vector incenter;
};

/// max λ such that x + λK ⊆ omega for some x; solved as one LP over (x, λ).
Inradius inradius(const Body& omega, const Body& k);

/// Anisotropic distance from the boundary: min_i (b_i − a_i·x)/h_K(a_i).
/// Requires 0 in int K and x in omega.
double distance(const Body& omega, const Body& k, const Vector& x);

/// omega together with its gauge body and their relative inradius.
struct ErosionFamily {
  Body omega;
  Body gauge_body;
  double inradius;
  Vector incenter;

  static ErosionFamily make(const Body& omega, const Body& k);
  std::optional<Body> at(double lambda) const { return inner_parallel(omega, gauge_body, lambda); }
};

}  // namespace innerpar
