#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pw/combinatorics.hpp"
#include "pw/dense_operator.hpp"
#include "pw/product_state.hpp"

namespace pw {

/// W = sum_lambda c_lambda Pi_lambda. Coefficients are stored for every
/// lambda |- n in canonical order; entries with length(lambda) > d are kept but
/// have no effect since their projectors vanish.
struct Witness {
  int n = 0;
  int d = 0;
  std::vector<Partition> partitions;
  std::vector<double> coeffs;
  std::optional<double> shift;

  double coeff(const Partition& lambda) const;
  /// Throws std::invalid_argument on non-finite or all-zero coefficients.
  void validate() const;
};

/// From a row over all lambda |- n (length p(n)) or over lambda |-_d n (length p(n, d)).
Witness make_witness(int n, int d, const std::vector<double>& row);
Witness make_witness(int n, int d, const std::map<Partition, double>& coeffs);

/// p_lambda = tr(rho Pi_lambda) over all lambda |- n, canonical order.
struct SchurDistribution {
  int n = 0;
  int d = 0;
  std::vector<Partition> partitions;
  std::vector<double> probs;

  /// Throws std::invalid_argument unless p >= -1e-12 and sum p = 1 within 1e-9.
  void validate() const;
};

SchurDistribution make_distribution(int n, int d, const std::vector<double>& row);

DenseOperator witness_operator(const Witness& w);

struct Detection {
  double value = 0.0;
  bool detected = false;
};

/// sum_lambda (c_lambda - alpha) p_lambda; detected iff value < -1e-9.
Detection detect_inseparability(const SchurDistribution& p, const Witness& w, double alpha);

struct WignerWeight {
  Partition mu;
  Partition nu;
  int k = 0;
  double w = 0.0;
};

/// x^{mu+e_k}_{mu,nu} = prod_{i<d} (nu_i - i - mu_k + k - 1) / prod_{i != k} (mu_i - i - mu_k + k).
/// Throws std::invalid_argument if nu does not interlace mu or row k is not addable.
WignerWeight wigner_weight(const Partition& mu, const Partition& nu, int k, int d);

struct AlphaResult {
  double value = 0.0;
  std::string method;  // "closed-form", "numeric", "seesaw", "tripartite-closed-form"
  std::optional<InterlacingPattern> pattern;
  std::optional<ProductState> state;
  std::optional<double> oracle;  // second route, when one was evaluated
  bool converged = true;
};

/// sum over addable corners k of mu of c_{mu+e_k} x^{mu+e_k}_{mu,nu}.
double semisep_block_value(const Witness& w, const InterlacingPattern& pattern);

/// Minimum over [n-1|1]-separable states by exhaustive (mu, nu) enumeration.
AlphaResult alpha_semisep_closed(const Witness& w);

/// Minimum eigenvalue of sum c_lambda X^lambda with a product-state certificate
/// (eigenvector on sites 1..n-1, last basis vector on site n).
AlphaResult alpha_semisep_numeric(const Witness& w);

/// Closed form cross-checked against the spectral route when d^{n-1} fits the
/// budget; throws std::logic_error if they differ by more than 1e-6.
AlphaResult alpha_semisep(const Witness& w);

/// Closed-form eigenvalue multiset of X^lambda, ascending.
std::vector<double> projected_spectrum(const Partition& lambda, int d, int n);

double alpha_tripartite_bisep(double c3, double c21, double c111, int d);
double alpha_tripartite_fullsep(double c3, double c21, double c111, int d);

struct WitnessFamilyMember {
  Witness witness;
  double alpha = 0.0;
};

/// Pi_{(n-k,1^k)} / C(n-1,k)^2 - Pi_{(n-k-1,1^{k+1})} / C(n-1,k+1)^2.
WitnessFamilyMember hook_family_witness(int k, int n, int d);

/// Pi_{(a,b)} / d_{(a,b)}^2 - Pi_{(a-k,b+k)} / d_{(a-k,b+k)}^2 on qubits.
WitnessFamilyMember two_row_qubit_witness(int a, int b, int k);

/// p_(n) - p_(n/2,n/2) / D^2 with shift 1/(2 D^2), D = d_(n/2,n/2); `alpha` holds the shift.
WitnessFamilyMember even_qubit_witness(int n);

}  // namespace pw
