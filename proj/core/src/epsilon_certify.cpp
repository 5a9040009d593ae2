#include "pw/epsilon_certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pw {

namespace {

using Eigen::MatrixXd;

MatrixXd psd_part(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
}

double lambda_min(const MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

Witness dual_basis_witness(int n, int d, const std::vector<double>& row) {
  Witness w = make_witness(n, d, row);
  for (std::size_t i = 0; i < w.partitions.size(); ++i) {
    const auto& lambda = w.partitions[i];
    if (lambda.length() > d) continue;
    w.coeffs[i] /= static_cast<double>(hook_dimension(lambda) * weyl_dimension(lambda, d));
  }
  return w;
}

EpsilonCertificate epsilon_certify(const Witness& w, const EpsilonOptions& options) {
  if (w.n != 4 || w.d != 4) throw std::invalid_argument("epsilon_certify: requires n = d = 4");
  w.validate();
  constexpr int kSub = 3;
  const Eigen::Index dim = 64;
  const MatrixXd full = witness_operator(w).matrix().real();
  MatrixXd y = full.topLeftCorner(dim, dim);
  y = 0.5 * (y + y.transpose());

  std::array<std::vector<std::int64_t>, 3> maps;
  for (int s = 1; s <= kSub; ++s) {
    const int site[] = {s};
    maps[static_cast<std::size_t>(s - 1)] = partial_transpose_map(4, kSub, site);
  }
  // A_0 = identity, A_j = partial transpose on site j; each is a self-adjoint involution.
  auto apply = [&](int j, const MatrixXd& m) -> MatrixXd {
    return j == 0 ? m : apply_entry_map(m, maps[static_cast<std::size_t>(j - 1)]);
  };

  EpsilonCertificate out;
  if (lambda_min(y) >= 0.0) {
    out.lower_bound = lambda_min(y);
    out.upper_bound = out.lower_bound;
    out.epsilon = -out.lower_bound;
    out.certified = true;
    return out;
  }

  double rho = options.rho > 0.0 ? options.rho : std::max(1e-3, y.cwiseAbs().maxCoeff());
  const MatrixXd eye = MatrixXd::Identity(dim, dim);
  MatrixXd x = eye / static_cast<double>(dim);
  std::array<MatrixXd, 4> u, lam;
  for (int j = 0; j < 4; ++j) {
    u[static_cast<std::size_t>(j)] = x;
    lam[static_cast<std::size_t>(j)] = MatrixXd::Zero(dim, dim);
  }

  double best_lb = -std::numeric_limits<double>::infinity();
  double best_ub = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= options.max_iterations; ++it) {
    MatrixXd acc = MatrixXd::Zero(dim, dim);
    for (int j = 0; j < 4; ++j) acc += apply(j, u[static_cast<std::size_t>(j)] - lam[static_cast<std::size_t>(j)]);
    x = 0.25 * acc - y / (4.0 * rho);
    x = 0.5 * (x + x.transpose());
    x += ((1.0 - x.trace()) / static_cast<double>(dim)) * eye;

    double primal_res = 0.0, dual_res = 0.0;
    for (int j = 0; j < 4; ++j) {
      const auto k = static_cast<std::size_t>(j);
      const MatrixXd ax = apply(j, x);
      const MatrixXd prev = u[k];
      u[k] = psd_part(ax + lam[k]);
      lam[k] += ax - u[k];
      primal_res = std::max(primal_res, (ax - u[k]).norm());
      dual_res = std::max(dual_res, rho * (u[k] - prev).norm());
    }

    if (it % options.check_every == 0 || it == options.max_iterations) {
      // Dual bound: Z_j = -rho Lambda_j projected to PSD, j = 1..3 (X >= 0 is kept in the domain).
      MatrixXd residual = y;
      for (int j = 1; j < 4; ++j) residual -= apply(j, psd_part(-rho * lam[static_cast<std::size_t>(j)]));
      const double lb = lambda_min(0.5 * (residual + residual.transpose()));

      // Primal bound: mix toward the maximally mixed state until feasible.
      double worst = 0.0;
      for (int j = 0; j < 4; ++j) worst = std::min(worst, lambda_min(apply(j, x)));
      const double t = worst < 0.0 ? -worst / (1.0 / static_cast<double>(dim) - worst) : 0.0;
      const MatrixXd feasible = (1.0 - t) * x + (t / static_cast<double>(dim)) * eye;
      const double ub = (y.cwiseProduct(feasible)).sum();

      best_lb = std::max(best_lb, lb);
      best_ub = std::min(best_ub, ub);
      if (best_lb > best_ub + 1e-12) out.weak_duality = false;
      out.iterations = it;
      if (best_ub - best_lb <= options.target_gap * std::max(std::abs(best_lb), 1e-6)) break;

      // Residual balancing.
      if (primal_res > 10.0 * dual_res) {
        rho *= 2.0;
        for (auto& l : lam) l /= 2.0;
      } else if (dual_res > 10.0 * primal_res) {
        rho /= 2.0;
        for (auto& l : lam) l *= 2.0;
      }
    }
  }
  out.lower_bound = best_lb;
  out.upper_bound = best_ub;
  out.epsilon = -best_lb;
  out.shift = std::max(0.0, out.epsilon);
  out.gap = best_ub - best_lb;
  out.certified = out.gap <= 0.1 * std::abs(out.epsilon);
  return out;
}

}  // namespace pw
