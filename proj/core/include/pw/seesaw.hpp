#pragma once

#include <cstdint>

#include "pw/dense_operator.hpp"
#include "pw/product_state.hpp"

namespace pw {

struct SeesawOptions {
  int restarts = 50;
  int max_sweeps = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

struct SeesawResult {
  double value = 0.0;  // best objective, an upper bound on alpha_kappa
  ProductState state;
  bool converged = false;  // the best restart met the tolerance
  bool monotone = true;    // no sweep increased the objective (all restarts)
  int sweeps = 0;          // sweeps used by the best restart
  std::uint64_t seed = 0;
};

/// Alternating minimization over kappa-product states: each step replaces one
/// factor by the lowest eigenvector of W contracted against all other factors.
/// Restart r starts from Haar-random factors drawn from stream (seed, r).
SeesawResult seesaw_minimize(const DenseOperator& w, const SeparabilityPartition& kappa,
                             const SeesawOptions& options = {});

/// Effective operator of factor `r` (others held fixed).
MatrixXc effective_operator(const DenseOperator& w, const ProductState& state, std::size_t r);

}  // namespace pw
