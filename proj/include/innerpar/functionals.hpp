#pragma once

#include "innerpar/polytope.hpp"

#include <iosfwd>
#include <vector>

namespace innerpar {

/// volume(C + tK) = Σ_i binom(dim, i) · w[i] · t^i; w[i] is the mixed volume W_i(C, K).
struct SteinerCoefficients {
  int dim = 0;
  std::vector<double> w;
};

/// One λ-row of the erosion family. v1 comes from the Steiner interpolation,
/// p from the facet sum; psi and xi are computed from the stored v and p.
struct CurveSample {
  double lambda = 0.0;
  double v = 0.0;
  double p = 0.0;
  double v1 = 0.0;
  double f0 = 0.0;
  double f1 = 0.0;
  double psi = 0.0;
  double xi = 0.0;
  double dp = 0.0;  // right derivative of p
  // Volume probes at λ ± probe_step for the central difference of v.
  double v_ahead = 0.0;
  double v_behind = 0.0;  // NaN at λ = 0
};

struct CurveFamily {
  int dim = 0;
  double inradius = 0.0;
  Vector incenter;
  double grid_step = 0.0;
  double probe_step = 0.0;
  std::vector<CurveSample> samples;
};

/// Σ_facets h_K(ν)·measure.
double aniso_perimeter(const Body& c, const Body& k);

/// Interpolates t ↦ volume(C + tK) at t = 0..dim.
SteinerCoefficients steiner_coefficients(const Body& c, const Body& k);

/// dim · w[1].
double perimeter_via_mixed(const Body& c, const Body& k);

/// Fraction of the inradius sampled by the grid; the tail next to r is excluded.
inline constexpr double kGridCoverage = 1.0 - 1e-3;

/// Probe step relative to the inradius, for the central difference of v.
double relative_probe_step(int dim);

/// Evaluates one sample of omega ∼ λK.
/// p'_+ starts from a forward window of width slope_window (a quarter grid
/// step in curve_family, less near r) and narrows it, down to probe_step, until two step
/// sizes agree.
CurveSample curve_sample(const Body& omega, const Body& k, double lambda, double probe_step, double slope_window);

/// Uniform grid on [0, kGridCoverage·r]. Samples are evaluated in parallel;
/// the result does not depend on the thread count.
CurveFamily curve_family(const Body& omega, const Body& k, int grid_points);

/// Single-threaded reference for curve_family.
CurveFamily curve_family_serial(const Body& omega, const Body& k, int grid_points);

/// Max over interior grid points of |v' + n·v1| / (n·v1), with v' the central
/// difference of the probe volumes.
double check_derivative_identity(const CurveFamily& family);

/// CSV with header lambda,v,p,v1,f0,f1,psi,xi and 15 significant digits.
void write_csv(std::ostream& out, const CurveFamily& family);

}  // namespace innerpar
