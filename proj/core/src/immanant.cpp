#include "pw/immanant.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pw {

namespace {

void check_square(const MatrixXc& g, int max_n) {
  if (g.rows() != g.cols()) throw std::invalid_argument("immanant: matrix is not square");
  if (g.rows() < 1 || g.rows() > max_n)
    throw std::invalid_argument("immanant: size must be between 1 and " + std::to_string(max_n));
}

}  // namespace

std::vector<Complex> immanants(const MatrixXc& g) {
  check_square(g, 8);
  const int n = static_cast<int>(g.rows());
  const auto lambdas = enumerate_partitions(n);
  std::vector<Complex> per_class(lambdas.size(), 0.0);
  for (const auto& pi : all_permutations(n)) {
    Complex prod = 1.0;
    for (int i = 0; i < n && prod != 0.0; ++i) prod *= g(i, pi(i));
    per_class[static_cast<std::size_t>(partition_index(lambdas, pi.cycle_type().lengths))] += prod;
  }
  std::vector<Complex> out(lambdas.size(), 0.0);
  for (std::size_t l = 0; l < lambdas.size(); ++l)
    for (std::size_t c = 0; c < lambdas.size(); ++c)
      out[l] += static_cast<double>(character(lambdas[l], CycleType(lambdas[c]))) * per_class[c];
  return out;
}

Complex immanant(const Partition& lambda, const MatrixXc& g) {
  check_square(g, 8);
  if (lambda.size() != g.rows()) throw std::invalid_argument("immanant: partition size does not match matrix");
  return immanants(g)[static_cast<std::size_t>(partition_index(enumerate_partitions(lambda.size()), lambda))];
}

bool is_psd(const MatrixXc& g) {
  if (g.rows() != g.cols()) return false;
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) return false;
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -kPsdTolerance * scale;
}

GramVectors gram_vectors(const MatrixXc& g) {
  if (!is_psd(g)) throw std::invalid_argument("gram_vectors: matrix is not positive semidefinite");
  const Eigen::Index n = g.rows();
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(0.5 * (g + g.adjoint()));
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = n - 1; k >= 0; --k)
    if (es.eigenvalues()(k) > kPsdTolerance * scale) keep.push_back(k);
  GramVectors out;
  out.rank = static_cast<int>(keep.size());
  // G = V V^dagger with V = U sqrt(D); G_ij = <v_i|v_j> requires v_i = conj(row i of V).
  for (Eigen::Index i = 0; i < n; ++i) {
    VectorXc v(out.rank);
    for (int r = 0; r < out.rank; ++r)
      v(r) = std::conj(es.eigenvectors()(i, keep[static_cast<std::size_t>(r)]) *
                       std::sqrt(es.eigenvalues()(keep[static_cast<std::size_t>(r)])));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

MatrixXc random_psd(int n, int rank, CounterRng& rng) {
  MatrixXc v(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      v(i, j) = {re, im};
    }
  MatrixXc g = v * v.adjoint();
  return 0.5 * (g + g.adjoint());
}

BridgeCheck bridge_identity_check(const std::vector<double>& a, const MatrixXc& g) {
  check_square(g, 6);
  const int n = static_cast<int>(g.rows());
  const auto lambdas = enumerate_partitions(n);
  if (a.size() != lambdas.size()) throw std::invalid_argument("bridge_identity_check: coefficient count mismatch");
  const auto gv = gram_vectors(g);
  const int r = std::max(1, gv.rank);
  if (r > 4) throw std::invalid_argument("bridge_identity_check: rank exceeds supported local dimension 4");

  // Product vector in (C^r)^{x n}; the zero matrix has rank 0 and gives the zero vector.
  VectorXc psi = VectorXc::Ones(1);
  for (int i = 0; i < n; ++i) {
    VectorXc v = gv.rank ? gv.vectors[static_cast<std::size_t>(i)] : VectorXc::Zero(1);
    VectorXc next(psi.size() * r);
    for (Eigen::Index k = 0; k < psi.size(); ++k) next.segment(k * r, r) = psi(k) * v;
    psi = std::move(next);
  }
  // <psi| eta(pi) |psi> per class, then tr(Pi_lambda rho_v) = (d/n!) sum chi <eta>.
  std::vector<Complex> per_class(lambdas.size(), 0.0);
  for (const auto& pi : all_permutations(n)) {
    const auto map = permutation_index_map(pi, r);
    Complex s = 0.0;
    for (Eigen::Index in = 0; in < psi.size(); ++in) s += std::conj(psi(map[in])) * psi(in);
    per_class[static_cast<std::size_t>(partition_index(lambdas, pi.cycle_type().lengths))] += s;
  }
  const double nfact = static_cast<double>(factorial(n));
  const auto imm = immanants(g);
  BridgeCheck out;
  Complex lhs = 0.0, rhs = 0.0;
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    if (a[l] == 0.0) continue;
    lhs += a[l] * imm[l];
    const double dl = static_cast<double>(hook_dimension(lambdas[l]));
    Complex tr = 0.0;
    for (std::size_t c = 0; c < lambdas.size(); ++c)
      tr += static_cast<double>(character(lambdas[l], CycleType(lambdas[c]))) * per_class[c];
    tr *= dl / nfact;
    rhs += nfact * a[l] / dl * tr;
  }
  out.lhs = lhs.real();
  out.rhs = rhs.real();
  out.residual = std::abs(lhs - rhs);
  double diag = 1.0;
  for (int i = 0; i < n; ++i) diag *= std::abs(g(i, i));
  double amax = 0.0;
  for (double x : a) amax = std::max(amax, std::abs(x));
  out.scale = std::max(1.0, nfact * diag * amax);
  return out;
}

std::vector<double> witness_to_inequality(const Witness& w) {
  std::vector<double> a(w.coeffs.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = static_cast<double>(hook_dimension(w.partitions[i])) * w.coeffs[i];
  return a;
}

Witness inequality_to_witness(int n, int d, const std::vector<double>& a) {
  const auto lambdas = enumerate_partitions(n);
  if (a.size() != lambdas.size()) throw std::invalid_argument("inequality_to_witness: coefficient count mismatch");
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] / static_cast<double>(hook_dimension(lambdas[i]));
  return make_witness(n, d, c);
}

const std::vector<std::vector<double>>& facet_rows() {
  static const std::vector<std::vector<double>> rows = {
      {0, 0, 0, 0, 1}, {0, 0, 0, 1, -9}, {0, 0, 3, -2, 6}, {0, 6, -9, -2, 0}, {6, -2, 3, 0, 0}, {18, 2, -9, 0, 0},
  };
  return rows;
}

const std::vector<std::vector<double>>& indecomposable_rows() {
  static const std::vector<std::vector<double>> rows = {
      {8, 0, -4, 1, -1}, {12, -1, -3, 1, 0}, {0, 2, -3, -1, 3},
  };
  return rows;
}

std::vector<InequalityMargin> inequality_suite(const MatrixXc& g) {
  if (!is_psd(g)) throw std::invalid_argument("inequality_suite: matrix is not positive semidefinite");
  const int n = static_cast<int>(g.rows());
  if (n > 6) throw std::invalid_argument("inequality_suite supports n <= 6");
  const auto lambdas = enumerate_partitions(n);
  const auto imm = immanants(g);
  std::vector<double> norm(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    norm[i] = imm[i].real() / static_cast<double>(hook_dimension(lambdas[i]));
  const double per = imm.front().real();
  const double det = imm.back().real();
  const double scale = std::max(std::abs(per), 1e-300);

  std::vector<InequalityMargin> out;
  auto add = [&](std::string id, double margin) {
    out.push_back({std::move(id), n, margin, scale, margin < -1e-8 * scale});
  };
  // hook chain (n) > (n-1,1) > ... > (1^n), normalized
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<int> a{n - k}, b{n - k - 1};
    a.insert(a.end(), static_cast<std::size_t>(k), 1);
    b.insert(b.end(), static_cast<std::size_t>(k + 1), 1);
    const auto ia = static_cast<std::size_t>(partition_index(lambdas, Partition(a)));
    const auto ib = static_cast<std::size_t>(partition_index(lambdas, Partition(b)));
    add("hook:" + lambdas[ia].to_string() + ">" + lambdas[ib].to_string(), norm[ia] - norm[ib]);
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    add("schur:" + lambdas[i].to_string(), norm[i] - det);
    add("perdom:" + lambdas[i].to_string(), per - norm[i]);
  }
  if (n == 3) add("tight3:3per-2imm21+det", 3.0 * per - 2.0 * imm[1].real() + det);
  if (n == 4) {
    auto row_margin = [&](const std::vector<double>& c) {
      double m = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) m += c[i] * static_cast<double>(hook_dimension(lambdas[i])) * imm[i].real();
      return m;
    };
    for (std::size_t f = 0; f < facet_rows().size(); ++f) add("facet:f" + std::to_string(f + 1), row_margin(facet_rows()[f]));
    for (std::size_t w = 0; w < indecomposable_rows().size(); ++w)
      add("indecomposable:w" + std::to_string(w + 1), row_margin(indecomposable_rows()[w]));
  }
  return out;
}

void write_inequality_csv(std::ostream& out, const std::vector<InequalityMargin>& rows, std::uint64_t seed,
                          bool header) {
  if (header) out << "inequality_id,n,matrix_seed,margin\n";
  const auto old = out.precision(17);
  for (const auto& r : rows) out << r.id << ',' << r.n << ',' << seed << ',' << r.margin << '\n';
  out.precision(old);
}

}  // namespace pw
