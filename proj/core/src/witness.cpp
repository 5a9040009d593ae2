#include "pw/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pw/projectors.hpp"

namespace pw {

double Witness::coeff(const Partition& lambda) const {
  const int idx = partition_index(partitions, lambda);
  return idx < 0 ? 0.0 : coeffs[static_cast<std::size_t>(idx)];
}

void Witness::validate() const {
  if (n < 1 || d < 1) throw std::invalid_argument("witness: n and d must be positive");
  if (partitions != enumerate_partitions(n) || coeffs.size() != partitions.size())
    throw std::invalid_argument("witness: coefficients must cover all partitions of n in canonical order");
  bool nonzero = false;
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("witness: non-finite coefficient");
    nonzero = nonzero || c != 0.0;
  }
  if (!nonzero) throw std::invalid_argument("witness: all coefficients are zero");
  if (shift && !std::isfinite(*shift)) throw std::invalid_argument("witness: non-finite shift");
}

namespace {

std::vector<double> expand_row(int n, int d, const std::vector<double>& row) {
  const auto all = enumerate_partitions(n);
  if (row.size() == all.size()) return row;
  const auto bounded = enumerate_partitions(n, d);
  if (row.size() != bounded.size())
    throw std::invalid_argument("coefficient row has " + std::to_string(row.size()) + " entries; expected " +
                                std::to_string(all.size()) + " or " + std::to_string(bounded.size()));
  std::vector<double> out(all.size(), 0.0);
  for (std::size_t i = 0; i < bounded.size(); ++i)
    out[static_cast<std::size_t>(partition_index(all, bounded[i]))] = row[i];
  return out;
}

}  // namespace

Witness make_witness(int n, int d, const std::vector<double>& row) {
  Witness w{n, d, enumerate_partitions(n), expand_row(n, d, row), std::nullopt};
  w.validate();
  return w;
}

Witness make_witness(int n, int d, const std::map<Partition, double>& coeffs) {
  Witness w{n, d, enumerate_partitions(n), {}, std::nullopt};
  w.coeffs.assign(w.partitions.size(), 0.0);
  for (const auto& [lambda, c] : coeffs) {
    const int idx = partition_index(w.partitions, lambda);
    if (idx < 0) throw std::invalid_argument("witness: " + lambda.to_string() + " is not a partition of n");
    w.coeffs[static_cast<std::size_t>(idx)] = c;
  }
  w.validate();
  return w;
}

void SchurDistribution::validate() const {
  if (probs.size() != partitions.size()) throw std::invalid_argument("distribution: size mismatch");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= -1e-12)) throw std::invalid_argument("distribution: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("distribution: probabilities do not sum to 1");
}

SchurDistribution make_distribution(int n, int d, const std::vector<double>& row) {
  SchurDistribution p{n, d, enumerate_partitions(n), expand_row(n, d, row)};
  p.validate();
  return p;
}

DenseOperator witness_operator(const Witness& w) {
  return class_sum_operator(projector_class_function(w.partitions, w.coeffs, w.d), w.d, w.n);
}

Detection detect_inseparability(const SchurDistribution& p, const Witness& w, double alpha) {
  p.validate();
  if (p.n != w.n) throw std::invalid_argument("detect_inseparability: n mismatch");
  double value = 0.0;
  for (std::size_t i = 0; i < p.partitions.size(); ++i) value += (w.coeff(p.partitions[i]) - alpha) * p.probs[i];
  return {value, value < -1e-9};
}

namespace {

double weight(const std::vector<int>& mu, const std::vector<int>& nu, int k, int d) {
  const int muk = mu[static_cast<std::size_t>(k - 1)];
  double num = 1.0;
  for (int i = 1; i <= d - 1; ++i) num *= nu[static_cast<std::size_t>(i - 1)] - i - muk + k - 1;
  double den = 1.0;
  for (int i = 1; i <= d; ++i)
    if (i != k) den *= mu[static_cast<std::size_t>(i - 1)] - i - muk + k;
  return num / den;
}

bool addable(const std::vector<int>& mu, int k) { return k == 1 || mu[k - 2] > mu[k - 1]; }

}  // namespace

WignerWeight wigner_weight(const Partition& mu, const Partition& nu, int k, int d) {
  if (d < 1 || mu.length() > d || nu.length() > d - 1)
    throw std::invalid_argument("wigner_weight: partition too long for d");
  const auto mp = mu.padded(d);
  const auto np = nu.padded(d - 1);
  if (!interlaces(np, mp)) throw std::invalid_argument("wigner_weight: nu does not interlace mu");
  if (k < 1 || k > d || !addable(mp, k)) throw std::invalid_argument("wigner_weight: row is not an addable corner");
  return {mu, nu, k, weight(mp, np, k, d)};
}

double semisep_block_value(const Witness& w, const InterlacingPattern& pattern) {
  double value = 0.0;
  for (int k = 1; k <= w.d; ++k) {
    if (!addable(pattern.mu, k)) continue;
    auto child = pattern.mu;
    ++child[static_cast<std::size_t>(k - 1)];
    const double c = w.coeff(Partition(child));
    if (c != 0.0) value += c * weight(pattern.mu, pattern.nu, k, w.d);
  }
  return value;
}

AlphaResult alpha_semisep_closed(const Witness& w) {
  w.validate();
  if (w.n < 2) throw std::invalid_argument("alpha_semisep_closed requires n >= 2");
  AlphaResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.method = "closed-form";
  for (const auto& mu : enumerate_partitions(w.n - 1, w.d)) {
    const auto mp = mu.padded(w.d);
    for (auto& nu : interlacings(mu, w.d)) {
      InterlacingPattern pattern{mp, std::move(nu)};
      const double v = semisep_block_value(w, pattern);
      if (v < best.value) {
        best.value = v;
        best.pattern = std::move(pattern);
      }
    }
  }
  return best;
}

AlphaResult alpha_semisep_numeric(const Witness& w) {
  w.validate();
  if (w.n < 2) throw std::invalid_argument("alpha_semisep_numeric requires n >= 2");
  const auto f = projector_class_function(w.partitions, w.coeffs, w.d);
  const auto blocks = compress_class_sum(f, w.d, w.n);
  AlphaResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.method = "numeric";
  const auto& bases = blocks.sectors.blocks();
  std::size_t best_block = 0;
  Eigen::VectorXd best_vec;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blocks.blocks[b]);
    if (es.eigenvalues()(0) < best.value) {
      best.value = es.eigenvalues()(0);
      best_block = b;
      best_vec = es.eigenvectors().col(0);
    }
  }
  VectorXc rest = VectorXc::Zero(blocks.sectors.dim());
  for (std::size_t i = 0; i < bases[best_block].size(); ++i)
    rest(bases[best_block][i]) = best_vec(static_cast<Eigen::Index>(i));
  VectorXc last = VectorXc::Zero(w.d);
  last(w.d - 1) = 1.0;
  best.state = ProductState{SeparabilityPartition({w.n - 1, 1}), w.d, {std::move(rest), std::move(last)}};
  return best;
}

AlphaResult alpha_semisep(const Witness& w) {
  AlphaResult closed = alpha_semisep_closed(w);
  if (ipow(w.d, w.n - 1) > kMaxDimension) return closed;
  const AlphaResult numeric = alpha_semisep_numeric(w);
  if (std::abs(closed.value - numeric.value) > 1e-6)
    throw std::logic_error("closed-form and spectral alpha disagree: " + std::to_string(closed.value) + " vs " +
                           std::to_string(numeric.value));
  closed.oracle = numeric.value;
  closed.state = numeric.state;
  return closed;
}

std::vector<double> projected_spectrum(const Partition& lambda, int d, int n) {
  if (lambda.size() != n || n < 2) throw std::invalid_argument("projected_spectrum: lambda must partition n >= 2");
  if (d < 2) throw std::invalid_argument("projected_spectrum requires d >= 2");
  std::vector<double> out;
  for (const auto& mu : enumerate_partitions(n - 1, d)) {
    const auto mp = mu.padded(d);
    int row = 0;
    for (int k = 1; k <= d; ++k) {
      if (!addable(mp, k)) continue;
      auto child = mp;
      ++child[static_cast<std::size_t>(k - 1)];
      if (Partition(child) == lambda) row = k;
    }
    const auto dmu = hook_dimension(mu);
    for (const auto& nu : interlacings(mu, d)) {
      const double value = row ? weight(mp, nu, row, d) : 0.0;
      const auto mult = dmu * weyl_dimension(Partition(nu), d - 1);
      out.insert(out.end(), static_cast<std::size_t>(mult), value);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double alpha_tripartite_bisep(double c3, double c21, double c111, int d) {
  if (d < 2) throw std::invalid_argument("alpha_tripartite_bisep requires d >= 2");
  double v = std::min(c3, c21);
  if (d > 2) v = std::min(v, 2.0 / 3.0 * c21 + 1.0 / 3.0 * c111);
  return v;
}

double alpha_tripartite_fullsep(double c3, double c21, double c111, int d) {
  if (d < 2) throw std::invalid_argument("alpha_tripartite_fullsep requires d >= 2");
  double v = std::min(c3, 0.25 * c3 + 0.75 * c21);
  if (d > 2) v = std::min(v, 2.0 / 3.0 * c21 + c3 / 6.0 + c111 / 6.0);
  return v;
}

namespace {

Partition hook(int arm, int legs) {
  std::vector<int> parts{arm};
  parts.insert(parts.end(), static_cast<std::size_t>(legs), 1);
  return Partition(parts);
}

double square(double x) { return x * x; }

}  // namespace

WitnessFamilyMember hook_family_witness(int k, int n, int d) {
  if (k < 0 || n < k + 2 || d < k + 2)
    throw std::invalid_argument("hook family requires k >= 0, n >= k+2, d >= k+2");
  const double upper = square(static_cast<double>(binomial(n - 1, k)));
  const double lower = square(static_cast<double>(binomial(n - 1, k + 1)));
  std::map<Partition, double> coeffs;
  coeffs[hook(n - k, k)] = 1.0 / upper;
  coeffs[hook(n - k - 1, k + 1)] = -1.0 / lower;
  const double alpha = (k <= n - 3) ? -1.0 / lower : -static_cast<double>(k) / ((k + 1.0) * (k + 2.0));
  return {make_witness(n, d, coeffs), alpha};
}

WitnessFamilyMember two_row_qubit_witness(int a, int b, int k) {
  if (b < 0 || a < b || k < 1 || a - b < 2 * k)
    throw std::invalid_argument("two-row family requires a >= b >= 0 and a - b >= 2k > 0");
  const Partition top({a, b});
  const Partition low({a - k, b + k});
  const double d_top = static_cast<double>(hook_dimension(top));
  const double d_low = static_cast<double>(hook_dimension(low));
  std::map<Partition, double> coeffs;
  coeffs[top] = 1.0 / square(d_top);
  coeffs[low] = -1.0 / square(d_low);
  const int delta = a - b;
  double alpha;
  if (delta >= 2 * k + 1)
    alpha = -1.0 / square(d_low);
  else if (k > 1)
    alpha = -1.0 / (2.0 * square(d_low));
  else
    alpha = 0.5 * (1.0 / square(d_top) - 1.0 / square(d_low));
  return {make_witness(a + b, 2, coeffs), alpha};
}

WitnessFamilyMember even_qubit_witness(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("even-qubit witness requires even n >= 4");
  const double D = static_cast<double>(binomial(n, n / 2) - binomial(n, n / 2 - 1));
  std::map<Partition, double> coeffs;
  coeffs[Partition({n})] = 1.0;
  coeffs[Partition({n / 2, n / 2})] = -1.0 / (D * D);
  const double shift = 1.0 / (2.0 * D * D);
  Witness w = make_witness(n, 2, coeffs);
  w.shift = shift;
  return {std::move(w), shift};
}

}  // namespace pw
