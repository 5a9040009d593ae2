#include "pw/dense_operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pw {

std::int64_t ipow(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("ipow: bad arguments");
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= d;
    if (r > (std::int64_t{1} << 40)) throw std::length_error("dimension overflow");
  }
  return r;
}

std::int64_t checked_dimension(int d, int n) {
  const std::int64_t dim = ipow(d, n);
  if (dim > kMaxDimension)
    throw std::length_error("d^n = " + std::to_string(dim) + " exceeds the size budget " +
                            std::to_string(kMaxDimension));
  return dim;
}

DenseOperator::DenseOperator(int d, int n) : d_(d), n_(n) {
  const auto dim = checked_dimension(d, n);
  m_ = MatrixXc::Zero(dim, dim);
}

DenseOperator::DenseOperator(int d, int n, MatrixXc m) : d_(d), n_(n), m_(std::move(m)) {
  const auto dim = checked_dimension(d, n);
  if (m_.rows() != dim || m_.cols() != dim)
    throw std::invalid_argument("DenseOperator: matrix size does not match d^n");
}

DenseOperator DenseOperator::identity(int d, int n) {
  const auto dim = checked_dimension(d, n);
  return DenseOperator(d, n, MatrixXc::Identity(dim, dim));
}

DenseOperator DenseOperator::projector_onto(int d, int n, const VectorXc& psi) {
  return DenseOperator(d, n, psi * psi.adjoint());
}

double DenseOperator::hermiticity_error() const {
  if (m_.size() == 0) return 0.0;
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  if (other.d_ != d_ || other.n_ != n_) throw std::invalid_argument("operator shape mismatch");
  m_ += other.m_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.d_ != b.d_ || a.n_ != b.n_) throw std::invalid_argument("operator shape mismatch");
  return DenseOperator(a.d_, a.n_, a.m_ * b.m_);
}

double max_abs_diff(const MatrixXc& a, const MatrixXc& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<int> index_digits(std::int64_t index, int d, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int s = n - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(index % d);
    index /= d;
  }
  return digits;
}

std::int64_t digits_index(std::span<const int> digits, int d) {
  std::int64_t index = 0;
  for (int v : digits) index = index * d + v;
  return index;
}

std::vector<std::int64_t> permutation_index_map(const Permutation& pi, int d) {
  const int n = pi.size();
  const auto dim = ipow(d, n);
  // Output site pi(j) carries the digit of input site j.
  std::vector<std::int64_t> stride(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) stride[s] = ipow(d, n - 1 - s);
  std::vector<std::int64_t> out(static_cast<std::size_t>(dim));
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::int64_t target = 0;
    for (int j = 0; j < n; ++j) target += digits[j] * stride[pi(j)];
    out[idx] = target;
    for (int s = n - 1; s >= 0; --s) {
      if (++digits[s] < d) break;
      digits[s] = 0;
    }
  }
  return out;
}

DenseOperator permutation_operator(const Permutation& pi, int d) {
  DenseOperator op(d, pi.size());
  const auto map = permutation_index_map(pi, d);
  for (std::size_t in = 0; in < map.size(); ++in)
    op.matrix()(map[in], static_cast<Eigen::Index>(in)) = 1.0;
  return op;
}

DenseOperator partial_transpose(const DenseOperator& a, std::span<const int> sites) {
  const int d = a.local_dim();
  const int n = a.sites();
  std::vector<std::int64_t> strides;
  for (int s : sites) {
    if (s < 1 || s > n) throw std::invalid_argument("partial_transpose: site out of range");
    strides.push_back(ipow(d, n - s));
  }
  const Eigen::Index dim = a.dim();
  MatrixXc out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      std::int64_t rr = r;
      std::int64_t cc = c;
      for (auto st : strides) {
        const std::int64_t dr = (r / st) % d;
        const std::int64_t dc = (c / st) % d;
        rr += (dc - dr) * st;
        cc += (dr - dc) * st;
      }
      out(rr, cc) = a.matrix()(r, c);
    }
  }
  return DenseOperator(d, n, std::move(out));
}

std::vector<std::int64_t> partial_transpose_map(int d, int n, std::span<const int> sites) {
  const auto dim = checked_dimension(d, n);
  std::vector<std::int64_t> strides;
  for (int s : sites) {
    if (s < 1 || s > n) throw std::invalid_argument("partial_transpose: site out of range");
    strides.push_back(ipow(d, n - s));
  }
  std::vector<std::int64_t> map(static_cast<std::size_t>(dim * dim));
  for (std::int64_t c = 0; c < dim; ++c) {
    for (std::int64_t r = 0; r < dim; ++r) {
      std::int64_t rr = r;
      std::int64_t cc = c;
      for (auto st : strides) {
        const std::int64_t dr = (r / st) % d;
        const std::int64_t dc = (c / st) % d;
        rr += (dc - dr) * st;
        cc += (dr - dc) * st;
      }
      map[static_cast<std::size_t>(c * dim + r)] = cc * dim + rr;
    }
  }
  return map;
}

Eigen::MatrixXd apply_entry_map(const Eigen::MatrixXd& m, const std::vector<std::int64_t>& map) {
  if (static_cast<std::size_t>(m.size()) != map.size()) throw std::invalid_argument("apply_entry_map: size mismatch");
  Eigen::MatrixXd out(m.rows(), m.cols());
  const double* in = m.data();
  double* o = out.data();
  for (std::size_t k = 0; k < map.size(); ++k) o[map[k]] = in[k];
  return out;
}

DenseOperator tensor_product(const DenseOperator& a, const DenseOperator& b) {
  if (a.local_dim() != b.local_dim()) throw std::invalid_argument("tensor_product: local dims differ");
  const int d = a.local_dim();
  DenseOperator out(d, a.sites() + b.sites());
  const auto db = b.dim();
  for (Eigen::Index i = 0; i < a.dim(); ++i)
    for (Eigen::Index j = 0; j < a.dim(); ++j)
      out.matrix().block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
  return out;
}

namespace {

void require_hermitian(const DenseOperator& a) {
  const double scale = std::max(1.0, a.matrix().cwiseAbs().maxCoeff());
  if (a.hermiticity_error() > 1e-12 * scale)
    throw std::invalid_argument("eigensolver requires a Hermitian operator");
}

}  // namespace

std::vector<double> eigenvalues(const DenseOperator& a) {
  require_hermitian(a);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(a.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_eigenvalue(const DenseOperator& a) { return eigenvalues(a).front(); }

EigenPair min_eigenpair(const DenseOperator& a) {
  require_hermitian(a);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(a.matrix());
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

ProjectedOperator compress_first_site(const DenseOperator& a) {
  if (a.sites() < 2) throw std::invalid_argument("compress_first_site requires n >= 2");
  const int d = a.local_dim();
  const auto sub = ipow(d, a.sites() - 1);
  const auto offset = static_cast<Eigen::Index>((d - 1) * sub);
  return {Partition{}, d, a.sites(), a.matrix().block(offset, offset, sub, sub)};
}

}  // namespace pw
