#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace innerpar {

/// Point or direction in R^2 or R^3. Fixed capacity, so no heap traffic.
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;

/// Absolute geometric tolerance for unit-scale data.
inline constexpr double kGeomTol = 1e-9;

enum class ErrorKind {
  DegenerateInput,
  EmptyOrUnbounded,
  Empty,
  Unbounded,
  ZeroDirection,
  OriginNotInterior,
  DimensionMismatch,
  NonpositiveRatio,
  NegativeLambda,
  PointOutside,
  NumericalFailure,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Vector make_vector(std::initializer_list<double> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) v[i++] = c;
  return v;
}

inline Vector zero_vector(int dim) { return Vector::Zero(dim); }

}  // namespace innerpar
