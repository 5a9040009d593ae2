#include "pw/lp.hpp"

#include <limits>
#include <stdexcept>

namespace pw {

namespace {

// Row i: basic[i] = rhs(i) - sum_j t(i, j) * nonbasic[j].
// Objective: z = z0 + sum_j cost(j) * nonbasic[j].
struct Tableau {
  Eigen::MatrixXd t;
  Eigen::VectorXd rhs;
  Eigen::VectorXd cost;
  double z0 = 0.0;
  std::vector<int> basic;
  std::vector<int> nonbasic;

  void pivot(Eigen::Index r, Eigen::Index e) {
    const double p = t(r, e);
    rhs(r) /= p;
    t.row(r) /= p;
    t(r, e) = 1.0 / p;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      if (i == r) continue;
      const double f = t(i, e);
      if (f == 0.0) continue;
      rhs(i) -= f * rhs(r);
      t.row(i) -= f * t.row(r);
      t(i, e) = -f / p;
    }
    const double ce = cost(e);
    z0 += ce * rhs(r);
    cost -= ce * t.row(r).transpose();
    cost(e) = -ce / p;
    std::swap(basic[static_cast<std::size_t>(r)], nonbasic[static_cast<std::size_t>(e)]);
  }

  // Primal simplex with Bland's rule. Returns false when unbounded.
  bool optimize(double tol, int max_pivots) {
    for (int it = 0; it < max_pivots; ++it) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cost.size(); ++j)
        if (cost(j) > tol && (enter < 0 || nonbasic[j] < nonbasic[enter])) enter = j;
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < t.rows(); ++i) {
        if (t(i, enter) <= tol) continue;
        const double ratio = std::max(rhs(i), 0.0) / t(i, enter);
        if (leave < 0 || ratio < best - tol) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + tol && basic[i] < basic[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: pivot limit reached");
  }
};

}  // namespace

LpResult solve_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol) {
  const Eigen::Index n = c.size();
  const Eigen::Index m = a.rows();
  if (a.cols() != n || b.size() != m) throw std::invalid_argument("solve_lp: dimension mismatch");
  const int max_pivots = static_cast<int>(50 * (n + m) + 1000);

  // Auxiliary column x0 (label n + m) relaxes every row: s = b - A x + x0.
  Tableau tab;
  tab.t.resize(m, n + 1);
  tab.t.leftCols(n) = a;
  tab.t.col(n).setConstant(-1.0);
  tab.rhs = b;
  tab.cost = Eigen::VectorXd::Zero(n + 1);
  for (Eigen::Index j = 0; j < n; ++j) tab.nonbasic.push_back(static_cast<int>(j));
  tab.nonbasic.push_back(static_cast<int>(n + m));
  for (Eigen::Index i = 0; i < m; ++i) tab.basic.push_back(static_cast<int>(n + i));

  LpResult result;
  Eigen::Index worst = -1;
  for (Eigen::Index i = 0; i < m; ++i)
    if (b(i) < -tol && (worst < 0 || b(i) < b(worst))) worst = i;
  if (worst >= 0) {
    tab.cost(n) = -1.0;  // maximize -x0
    tab.pivot(worst, n);
    tab.optimize(tol, max_pivots);
    if (tab.z0 < -1e3 * tol * std::max(1.0, b.cwiseAbs().maxCoeff())) return result;
    // Drive x0 out of the basis if it is still basic (at value ~0).
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basic[i] != n + m) continue;
      Eigen::Index e = -1;
      for (Eigen::Index j = 0; j < tab.t.cols(); ++j)
        if (std::abs(tab.t(i, j)) > tol && (e < 0 || std::abs(tab.t(i, j)) > std::abs(tab.t(i, e)))) e = j;
      if (e >= 0) tab.pivot(i, e);
    }
  }
  // Remove the x0 column.
  Eigen::Index x0col = -1;
  for (Eigen::Index j = 0; j < tab.t.cols(); ++j)
    if (tab.nonbasic[j] == n + m) x0col = j;
  if (x0col < 0) throw std::runtime_error("simplex: auxiliary variable stuck in basis");
  const Eigen::Index last = tab.t.cols() - 1;
  if (x0col != last) {
    tab.t.col(x0col) = tab.t.col(last);
    tab.nonbasic[x0col] = tab.nonbasic[last];
  }
  tab.t.conservativeResize(m, last);
  tab.nonbasic.pop_back();

  // Phase 2 objective in terms of the current nonbasic variables.
  tab.cost = Eigen::VectorXd::Zero(last);
  tab.z0 = 0.0;
  for (Eigen::Index j = 0; j < last; ++j)
    if (tab.nonbasic[j] < n) tab.cost(j) += c(tab.nonbasic[j]);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int var = tab.basic[i];
    if (var >= n) continue;
    tab.z0 += c(var) * tab.rhs(i);
    tab.cost -= c(var) * tab.t.row(i).transpose();
  }
  if (!tab.optimize(tol, max_pivots)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.objective = tab.z0;
  result.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (tab.basic[i] < n) result.x(tab.basic[i]) = std::max(0.0, tab.rhs(i));
  return result;
}

}  // namespace pw
