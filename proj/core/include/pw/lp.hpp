#pragma once

#include <vector>

#include <Eigen/Dense>

namespace pw {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;
};

/// maximize c.x subject to A x <= b, x >= 0. Dense two-phase simplex on a
/// compact (Tucker) tableau with Bland's rule; intended for a handful of
/// variables and up to a few thousand constraints.
LpResult solve_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                  double tol = 1e-11);

}  // namespace pw
