#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pw/dense_operator.hpp"
#include "pw/random.hpp"
#include "pw/witness.hpp"

namespace pw {

/// imm_lambda(G) = sum_pi chi_lambda(pi) prod_i G_{i, pi(i)}; n <= 8.
Complex immanant(const Partition& lambda, const MatrixXc& g);

/// All immanants in canonical partition order, sharing one pass over S_n.
std::vector<Complex> immanants(const MatrixXc& g);

/// Hermitian-PSD check: |G - G^dagger| <= 1e-12 * scale and min eigenvalue >= -1e-9 * scale.
bool is_psd(const MatrixXc& g);

/// Vectors v_i in C^r with <v_i|v_j> = G_ij, r the numerical rank at tolerance 1e-9.
struct GramVectors {
  int rank = 0;
  std::vector<VectorXc> vectors;
};
GramVectors gram_vectors(const MatrixXc& g);

/// Random PSD matrix V V^dagger with V an n x rank complex Gaussian.
MatrixXc random_psd(int n, int rank, CounterRng& rng);

struct BridgeCheck {
  double lhs = 0.0;  // sum a_lambda imm_lambda(G)
  double rhs = 0.0;  // sum (n! a_lambda / d_lambda) tr(Pi_lambda rho_v)
  double residual = 0.0;
  double scale = 1.0;
};

/// `a` is indexed by all lambda |- n. The right-hand side acts with eta_r(pi)
/// on the unnormalized product vector v_1 x ... x v_n, r <= 4, n <= 6.
BridgeCheck bridge_identity_check(const std::vector<double>& a, const MatrixXc& g);

/// a_lambda = d_lambda c_lambda (positive factor n! dropped).
std::vector<double> witness_to_inequality(const Witness& w);
Witness inequality_to_witness(int n, int d, const std::vector<double>& a);

struct InequalityMargin {
  std::string id;
  int n = 0;
  double margin = 0.0;  // value of the nonnegative side
  double scale = 1.0;
  bool violated = false;  // margin < -1e-8 * scale
};

/// Hook rule, Schur inequality and permanent dominance (n <= 6) for every n;
/// additionally the tight 3x3 inequality for n = 3 and the six facet and three
/// indecomposable 4x4 inequalities for n = 4.
std::vector<InequalityMargin> inequality_suite(const MatrixXc& g);

/// Rows (inequality-id, n, matrix-seed, margin).
void write_inequality_csv(std::ostream& out, const std::vector<InequalityMargin>& rows, std::uint64_t seed,
                          bool header);

/// Four-ququart coefficient rows used by the 4x4 suite.
const std::vector<std::vector<double>>& facet_rows();         // f_1 .. f_6, unnormalized
const std::vector<std::vector<double>>& indecomposable_rows();  // w_1 .. w_3

}  // namespace pw
