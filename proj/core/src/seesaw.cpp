#include "pw/seesaw.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "pw/parallel.hpp"

namespace pw {

MatrixXc effective_operator(const DenseOperator& w, const ProductState& state, std::size_t r) {
  const int d = state.d;
  const int n = state.kappa.n();
  int offset = 0;
  for (std::size_t i = 0; i < r; ++i) offset += state.kappa.parts()[i];
  const int k = state.kappa.parts()[r];
  const auto left = ipow(d, offset);
  const auto mid = ipow(d, k);
  const auto right = ipow(d, n - offset - k);

  VectorXc phi_left = VectorXc::Ones(1);
  VectorXc phi_right = VectorXc::Ones(1);
  auto kron = [](const VectorXc& a, const VectorXc& b) {
    VectorXc out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
  };
  for (std::size_t i = 0; i < state.factors.size(); ++i) {
    if (i < r) phi_left = kron(phi_left, state.factors[i]);
    if (i > r) phi_right = kron(phi_right, state.factors[i]);
  }
  // env(l*mid*right + a*right + rr) = phi_left(l) * phi_right(rr) for slot a.
  const MatrixXc& m = w.matrix();
  MatrixXc out(mid, mid);
  MatrixXc cols = MatrixXc::Zero(m.rows(), mid);
  for (std::int64_t l = 0; l < left; ++l) {
    for (std::int64_t rr = 0; rr < right; ++rr) {
      const Complex amp = phi_left(l) * phi_right(rr);
      if (amp == 0.0) continue;
      for (std::int64_t b = 0; b < mid; ++b) cols.col(b) += amp * m.col(l * mid * right + b * right + rr);
    }
  }
  for (std::int64_t b = 0; b < mid; ++b) {
    for (std::int64_t a = 0; a < mid; ++a) {
      Complex s = 0.0;
      for (std::int64_t l = 0; l < left; ++l)
        for (std::int64_t rr = 0; rr < right; ++rr)
          s += std::conj(phi_left(l) * phi_right(rr)) * cols(l * mid * right + a * right + rr, b);
      out(a, b) = s;
    }
  }
  return 0.5 * (out + out.adjoint());
}

SeesawResult seesaw_minimize(const DenseOperator& w, const SeparabilityPartition& kappa,
                             const SeesawOptions& options) {
  if (kappa.n() != w.sites()) throw std::invalid_argument("seesaw: kappa does not match the number of sites");
  if (options.restarts < 1) throw std::invalid_argument("seesaw: at least one restart is required");
  const int d = w.local_dim();
  const double scale = std::max(1.0, w.matrix().cwiseAbs().maxCoeff());

  struct Run {
    double value = std::numeric_limits<double>::infinity();
    ProductState state;
    bool converged = false;
    bool monotone = true;
    int sweeps = 0;
  };
  std::vector<Run> runs(static_cast<std::size_t>(options.restarts));

  parallel_for(runs.size(), [&](std::size_t restart) {
    CounterRng rng(options.seed, restart);
    Run run;
    run.state = random_product_state(kappa, d, rng);
    double prev = expectation(w, run.state);
    const bool single = kappa.factors() == 1;
    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
      double value = prev;
      for (std::size_t r = 0; r < run.state.factors.size(); ++r) {
        Eigen::SelfAdjointEigenSolver<MatrixXc> es(effective_operator(w, run.state, r));
        run.state.factors[r] = es.eigenvectors().col(0);
        value = es.eigenvalues()(0);
      }
      if (value > prev + 1e-12 * scale) run.monotone = false;
      run.sweeps = sweep;
      const bool done = single || std::abs(prev - value) <= options.tol;
      prev = std::min(prev, value);
      if (done) {
        run.converged = true;
        break;
      }
    }
    run.value = expectation(w, run.state);
    runs[restart] = std::move(run);
  });

  SeesawResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.seed = options.seed;
  for (auto& run : runs) {
    best.monotone = best.monotone && run.monotone;
    if (run.value < best.value) {
      best.value = run.value;
      best.state = run.state;
      best.converged = run.converged;
      best.sweeps = run.sweeps;
    }
  }
  return best;
}

}  // namespace pw
