#pragma once

#include <vector>

#include "pw/witness.hpp"

namespace pw {

struct EpsilonOptions {
  int max_iterations = 20000;
  double rho = 0.0;            // 0 picks a scale from the witness
  double target_gap = 1e-4;    // stop once UB - LB <= target_gap * max(|LB|, 1e-6)
  int check_every = 25;
};

struct EpsilonCertificate {
  double lower_bound = 0.0;  // certified: lambda_min of the dual residual
  double upper_bound = 0.0;  // tr(Y X) at a feasible X
  double epsilon = 0.0;      // -lower_bound
  double shift = 0.0;        // max(0, epsilon), the certified shift
  double gap = 0.0;
  bool certified = false;    // gap <= 10% of |epsilon|
  bool weak_duality = true;  // LB <= UB at every check
  int iterations = 0;
};

/// Bounds min tr(W (|0><0| x X)) over FPPT states X on sites 2..4 (n = d = 4)
/// by ADMM on {X, X^{T_B}, X^{T_C}, X^{T_D} >= 0, tr X = 1}, with a
/// dual-feasible lower bound from the scaled multipliers.
EpsilonCertificate epsilon_certify(const Witness& w, const EpsilonOptions& options = {});

/// c_lambda = row_lambda / tr Pi_lambda.
Witness dual_basis_witness(int n, int d, const std::vector<double>& row);

}  // namespace pw
