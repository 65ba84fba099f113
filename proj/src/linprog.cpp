#include "innerpar/linprog.hpp"

#include "innerpar/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace innerpar::lp {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;
constexpr double kPhaseOneTol = 1e-9;

// Tableau rows hold B^{-1}[A | b]; the last column is the right-hand side.
class Tableau {
 public:
  Tableau(Eigen::MatrixXd body, std::vector<int> basis, long iteration_cap)
      : t_(std::move(body)), basis_(std::move(basis)), cap_(iteration_cap) {}

  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  double rhs(int r) const { return t_(r, cols()); }
  const std::vector<int>& basis() const { return basis_; }

  // Maximizes cost·z over columns [0, active_cols). Returns false if unbounded.
  bool optimize(const Eigen::VectorXd& cost, int active_cols) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < active_cols; ++j) {
        if (is_basic(j)) continue;
        double reduced = cost[j];
        for (int r = 0; r < rows(); ++r) reduced -= cost[basis_[r]] * t_(r, j);
        if (reduced > kCostTol) {
          entering = j;  // Bland: lowest index
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows(); ++r) {
        const double a = t_(r, entering);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(rhs(r), 0.0) / a;
        if (leaving < 0 || ratio < best - 1e-12) {
          best = ratio;
          leaving = r;
        } else if (ratio <= best + 1e-12 && basis_[r] < basis_[leaving]) {
          leaving = r;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(int r, int c) {
    if (++pivots_ > cap_) {
      throw GeometryError(ErrorKind::NumericalFailure,
                          "simplex exceeded " + std::to_string(cap_) + " pivots");
    }
    t_.row(r) /= t_(r, c);
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[r] = c;
  }

  void drop_row(int r) {
    const int last = rows() - 1;
    if (r != last) {
      t_.row(r) = t_.row(last);
      basis_[r] = basis_[last];
    }
    t_.conservativeResize(last, Eigen::NoChange);
    basis_.pop_back();
  }

  double entry(int r, int c) const { return t_(r, c); }

  bool is_basic(int j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

 private:
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
  long cap_;
  long pivots_ = 0;
};

}  // namespace

double feasibility_residual(const LinearProgram& lp, const Eigen::VectorXd& x) {
  const Eigen::VectorXd slack = lp.constraints * x - lp.rhs;
  return std::max(0.0, slack.maxCoeff());
}

LPResult solve(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.objective.size());
  const int k = static_cast<int>(lp.rhs.size());
  if (m < 1 || k < 1 || lp.constraints.rows() != k || lp.constraints.cols() != m) {
    throw GeometryError(ErrorKind::InvalidInput, "linear program shape mismatch");
  }

  // Columns: x+ (m), x- (m), slacks (k), artificials (one per negative rhs).
  std::vector<int> negative_rows;
  for (int i = 0; i < k; ++i)
    if (lp.rhs[i] < 0.0) negative_rows.push_back(i);
  const int n_struct = 2 * m + k;
  const int n_art = static_cast<int>(negative_rows.size());
  const int n_cols = n_struct + n_art;

  Eigen::MatrixXd body = Eigen::MatrixXd::Zero(k, n_cols + 1);
  std::vector<int> basis(k);
  int art = 0;
  for (int i = 0; i < k; ++i) {
    const double sign = lp.rhs[i] < 0.0 ? -1.0 : 1.0;
    body.block(i, 0, 1, m) = sign * lp.constraints.row(i);
    body.block(i, m, 1, m) = -sign * lp.constraints.row(i);
    body(i, 2 * m + i) = sign;
    body(i, n_cols) = sign * lp.rhs[i];
    if (sign < 0.0) {
      body(i, n_struct + art) = 1.0;
      basis[i] = n_struct + art;
      ++art;
    } else {
      basis[i] = 2 * m + i;
    }
  }

  Tableau tab(std::move(body), std::move(basis), 10L * (k + m));

  if (n_art > 0) {
    Eigen::VectorXd phase_one = Eigen::VectorXd::Zero(n_cols);
    phase_one.tail(n_art).setConstant(-1.0);
    tab.optimize(phase_one, n_cols);
    double infeasibility = 0.0;
    for (int r = 0; r < tab.rows(); ++r)
      if (tab.basis()[r] >= n_struct) infeasibility += tab.rhs(r);
    if (infeasibility > kPhaseOneTol) return LPResult{Status::Infeasible, {}, {}};

    // Drive remaining artificials out of the basis; rows with no structural
    // pivot are linearly dependent and are dropped.
    for (int r = tab.rows() - 1; r >= 0; --r) {
      if (tab.basis()[r] < n_struct) continue;
      int col = -1;
      for (int j = 0; j < n_struct; ++j) {
        if (!tab.is_basic(j) && std::abs(tab.entry(r, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col >= 0)
        tab.pivot(r, col);
      else
        tab.drop_row(r);
    }
  }

  Eigen::VectorXd cost = Eigen::VectorXd::Zero(n_cols);
  cost.head(m) = lp.objective;
  cost.segment(m, m) = -lp.objective;
  if (!tab.optimize(cost, n_struct)) return LPResult{Status::Unbounded, {}, {}};

  Eigen::VectorXd z = Eigen::VectorXd::Zero(n_cols);
  for (int r = 0; r < tab.rows(); ++r) z[tab.basis()[r]] = tab.rhs(r);
  Eigen::VectorXd x = z.head(m) - z.segment(m, m);
  const double value = lp.objective.dot(x);
  return LPResult{Status::Optimal, std::move(x), value};
}

}  // namespace innerpar::lp
