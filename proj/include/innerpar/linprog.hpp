#pragma once

#include <Eigen/Dense>

#include <optional>

namespace innerpar::lp {

/// maximize objective·x  subject to  constraints·x <= rhs, x free.
struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd constraints;
  Eigen::VectorXd rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct LPResult {
  Status status = Status::Infeasible;
  std::optional<Eigen::VectorXd> point;
  std::optional<double> value;
};

/// Two-phase dense tableau simplex with Bland's rule. Free variables are
/// split into nonnegative pairs internally. Throws GeometryError
/// (NumericalFailure) if the pivot count exceeds 10·(rows + variables).
LPResult solve(const LinearProgram& lp);

/// Largest violation max_i(row_i·x − rhs_i), clamped below at 0.
double feasibility_residual(const LinearProgram& lp, const Eigen::VectorXd& x);

}  // namespace innerpar::lp
