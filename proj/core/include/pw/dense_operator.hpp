#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pw/combinatorics.hpp"

namespace pw {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Largest supported Hilbert-space dimension d^n.
inline constexpr std::int64_t kMaxDimension = 16384;

/// PSD threshold used by every ">= 0" test downstream of an eigensolve.
inline constexpr double kPsdTolerance = 1e-9;

/// d^n, throwing std::length_error when it exceeds kMaxDimension.
std::int64_t checked_dimension(int d, int n);

/// d^n without the budget check (may still overflow-guard).
std::int64_t ipow(int d, int n);

/// Operator on (C^d)^{\otimes n}; basis index sum_s i_s d^{n-s} (site 1 most significant).
class DenseOperator {
 public:
  DenseOperator() = default;
  DenseOperator(int d, int n);
  DenseOperator(int d, int n, MatrixXc m);

  static DenseOperator identity(int d, int n);
  static DenseOperator projector_onto(int d, int n, const VectorXc& psi);

  int local_dim() const { return d_; }
  int sites() const { return n_; }
  Eigen::Index dim() const { return m_.rows(); }

  const MatrixXc& matrix() const { return m_; }
  MatrixXc& matrix() { return m_; }

  double hermiticity_error() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_error() <= tol; }
  Complex trace() const { return m_.trace(); }

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator*=(double s);
  friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
  friend DenseOperator operator*(double s, DenseOperator a) { return a *= s; }
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

 private:
  int d_ = 0;
  int n_ = 0;
  MatrixXc m_;
};

/// Max |A_ij - B_ij|.
double max_abs_diff(const MatrixXc& a, const MatrixXc& b);

/// Basis digits (i_1..i_n) of a flat index.
std::vector<int> index_digits(std::int64_t index, int d, int n);
std::int64_t digits_index(std::span<const int> digits, int d);

/// For every input basis index, the output index under eta_d(pi):
/// |i_1..i_n> -> |i_{pi^{-1}(1)} .. i_{pi^{-1}(n)}>.
std::vector<std::int64_t> permutation_index_map(const Permutation& pi, int d);

/// eta_d(pi) as a 0/1 matrix.
DenseOperator permutation_operator(const Permutation& pi, int d);

/// Tensor factors listed in `sites` (1-based) transposed.
DenseOperator partial_transpose(const DenseOperator& a, std::span<const int> sites);

/// Flat (column-major) index permutation realizing the partial transpose of a
/// d^n x d^n matrix on `sites`: out.data()[map[k]] = in.data()[k]. The map is an involution.
std::vector<std::int64_t> partial_transpose_map(int d, int n, std::span<const int> sites);

/// Applies an entry permutation produced by partial_transpose_map.
Eigen::MatrixXd apply_entry_map(const Eigen::MatrixXd& m, const std::vector<std::int64_t>& map);

/// Kronecker product A (sites of a) followed by B.
DenseOperator tensor_product(const DenseOperator& a, const DenseOperator& b);

/// Ascending spectrum. Throws std::invalid_argument for non-Hermitian input.
std::vector<double> eigenvalues(const DenseOperator& a);
double min_eigenvalue(const DenseOperator& a);

struct EigenPair {
  double value = 0.0;
  VectorXc vector;
};
EigenPair min_eigenpair(const DenseOperator& a);

/// Operator on n-1 sites: (<d| x I) A (|d> x I), |d> the last basis vector of site 1.
struct ProjectedOperator {
  Partition lambda;  // empty unless produced from a Young projector
  int d = 0;
  int n = 0;  // sites of the parent operator
  MatrixXc matrix;
};

ProjectedOperator compress_first_site(const DenseOperator& a);

}  // namespace pw
