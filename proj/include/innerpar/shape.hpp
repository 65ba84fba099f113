#pragma once

#include "innerpar/functionals.hpp"
#include "innerpar/polytope.hpp"

#include <optional>
#include <string>

namespace innerpar {

/// x ↦ ratio·x + shift.
struct Homothety {
  double ratio = 1.0;
  Vector shift;
};

/// Center and ratio such that every facet plane of omega supports ratio·K + center.
struct TangentialCertificate {
  Vector center;
  double ratio = 0.0;
  double residual = 0.0;
};

/// Finds the homothety mapping `source` onto `target`, anchored on volume
/// centroids. Accepted when every mapped vertex matches a distinct target
/// vertex within rel_tol·diameter(target).
std::optional<Homothety> detect_homothety(const Body& target, const Body& source, double rel_tol = 1e-8);

/// ∩ {x : x·ν <= 1} over the unit facet normals ν of c.
Body form_body(const Body& c);

/// Least-squares solve of ν_i·x + ρ·h_K(ν_i) = b_i over the facets of omega.
std::optional<TangentialCertificate> tangential_feasibility(const Body& omega, const Body& k);

struct EqualityReport {
  bool equality_mid = false;
  std::optional<double> psi_constant_from;
  std::optional<TangentialCertificate> tangential;
  std::optional<bool> tail_homothetic;  // absent when psi is never constant
  std::optional<bool> tail_tangential;  // omega ∼ λ*K certified tangential
};

/// Tolerances used by classify_equality.
inline constexpr double kEqualityTol = 1e-7;
inline constexpr double kPsiFlatTol = 1e-9;

/// Index of the first grid point from which psi stays constant to kPsiFlatTol, if any.
std::optional<std::size_t> psi_constant_index(const CurveFamily& family);

EqualityReport classify_equality(const Body& omega, const Body& k, const CurveFamily& family);

/// {"equality_mid": ..., "psi_constant_from": ..., "tangential": ..., "tail_homothetic": ..., "tail_tangential": ...}
std::string to_json(const EqualityReport& report);

}  // namespace innerpar
