#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pw/dense_operator.hpp"
#include "pw/witness.hpp"

namespace pw {

/// rho = sum_lambda q_lambda Pi_lambda / tr Pi_lambda. `q` runs over all
/// lambda |- n (or over lambda |-_d n); weights on partitions longer than d must vanish.
DenseOperator symmetric_state(int n, int d, const std::vector<double>& q);

struct FpptReport {
  bool pass = false;
  std::vector<int> cut_sizes;
  std::vector<double> min_eigenvalues;  // per cut: lambda_min of rho^{T_{1..s}}
};

/// Partial transposes on the first s sites for every requested cut size s.
/// Pass iff every minimum eigenvalue is >= -1e-9. Empty cut list means 1..floor(n/2).
FpptReport fppt_check(const DenseOperator& rho, std::vector<int> cut_sizes = {});

enum class TripartiteLabel { FullSep, BisepNotFull, Gme, BoundEntangled };
std::string to_string(TripartiteLabel label);

struct TripartiteClassification {
  TripartiteLabel label = TripartiteLabel::FullSep;
  double sep_criterion_1 = 0.0;  // p21 - 4 p111
  double sep_criterion_2 = 0.0;  // 3 p3 - p21 + p111
  double bisep_criterion = 0.0;  // p21 - 2 p111
  bool fppt = false;
  double fppt_min_eigenvalue = 0.0;
};

/// q = (q_3, q_21, q_111) of a symmetric three-qudit state.
TripartiteClassification classify_tripartite(const std::vector<double>& q, int d);

/// rho_p = p Pi_3/tr Pi_3 + (1-p) Pi_21/tr Pi_21.
std::vector<double> werner_weights(double p);

struct WernerSample {
  double p = 0.0;
  TripartiteClassification c;
};

struct WernerReport {
  int d = 3;
  double sep_boundary = 0.0;  // smallest p with both SEP criteria satisfied
  double ppt_boundary = 0.0;  // smallest p with rho_p FPPT
  double bound_entangled_low = 0.0;
  double bound_entangled_high = 0.0;  // window [low, high) when low < high
  bool bisep_everywhere = true;
  int label_changes = 0;
  std::vector<WernerSample> scan;
  std::string note;
};

/// Scans p on a grid of `resolution` + 1 points and bisects each boundary to 1e-9.
WernerReport classify_werner_family(int resolution = 200, int d = 3);

struct DecomposabilityReport {
  int d = 0;
  double residual_plus = 0.0;
  double residual_minus = 0.0;
};

/// Compares 4 Pi_3 - Pi_21 and Pi_21 - 4 Pi_111 with
/// sum_{cyclic j} (4/3) [ (1 x P_{+-}) (|Phi><Phi|_{j,j+1} x 1) (1 x P_{+-}) ]^{T_j}.
DecomposabilityReport decomposability_identity_check(int d);

struct SevenQubitReport {
  double alpha = 0.0;  // 24 / C(33,5)
  int samples = 0;
  std::uint64_t seed = 0;
  int violations_511 = 0;
  int violations_331 = 0;
  double min_511 = 0.0;
  double min_331 = 0.0;
  double symmetric_product_min = 0.0;  // tr(W_7 rho) on |psi>^{x7} samples
};

/// tr(W_7' rho) >= -1e-6 on random [5|1|1] and [3|3|1] product states, with
/// W_7 = 196 Pi_(7) - Pi_(4,3) and W_7' = W_7 + alpha Pi_(4,3).
SevenQubitReport seven_qubit_consistency(int samples, std::uint64_t seed);

}  // namespace pw
