#include "pw/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>
#include <stdexcept>

#include "pw/parallel.hpp"
#include "pw/product_state.hpp"
#include "pw/projectors.hpp"
#include "pw/random.hpp"

namespace pw {

DenseOperator symmetric_state(int n, int d, const std::vector<double>& q) {
  const auto all = enumerate_partitions(n);
  std::vector<double> weights = q;
  if (q.size() != all.size()) {
    const auto bounded = enumerate_partitions(n, d);
    if (q.size() != bounded.size()) throw std::invalid_argument("symmetric_state: weight count mismatch");
    weights.assign(all.size(), 0.0);
    for (std::size_t i = 0; i < bounded.size(); ++i)
      weights[static_cast<std::size_t>(partition_index(all, bounded[i]))] = q[i];
  }
  double total = 0.0;
  std::vector<double> coeffs(all.size(), 0.0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (weights[i] < -1e-12) throw std::invalid_argument("symmetric_state: negative weight");
    if (all[i].length() > d) {
      if (std::abs(weights[i]) > 1e-12) throw std::invalid_argument("symmetric_state: weight on a vanishing projector");
      continue;
    }
    total += weights[i];
    coeffs[i] = weights[i] / static_cast<double>(hook_dimension(all[i]) * weyl_dimension(all[i], d));
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("symmetric_state: weights do not sum to 1");
  return class_sum_operator(projector_class_function(all, coeffs, d), d, n);
}

FpptReport fppt_check(const DenseOperator& rho, std::vector<int> cut_sizes) {
  const int n = rho.sites();
  if (cut_sizes.empty())
    for (int s = 1; s <= n / 2; ++s) cut_sizes.push_back(s);
  FpptReport report;
  report.pass = true;
  report.cut_sizes = cut_sizes;
  for (int s : cut_sizes) {
    if (s < 1 || s >= n) throw std::invalid_argument("fppt_check: cut size out of range");
    std::vector<int> sites(static_cast<std::size_t>(s));
    std::iota(sites.begin(), sites.end(), 1);
    const double m = min_eigenvalue(partial_transpose(rho, sites));
    report.min_eigenvalues.push_back(m);
    if (m < -1e-9) report.pass = false;
  }
  return report;
}

std::string to_string(TripartiteLabel label) {
  switch (label) {
    case TripartiteLabel::FullSep: return "FULL-SEP";
    case TripartiteLabel::BisepNotFull: return "[2,1]-SEP-NOT-FULL";
    case TripartiteLabel::Gme: return "GME";
    case TripartiteLabel::BoundEntangled: return "BOUND-ENTANGLED";
  }
  return "UNKNOWN";
}

TripartiteClassification classify_tripartite(const std::vector<double>& q, int d) {
  if (q.size() != 3) throw std::invalid_argument("classify_tripartite expects (q_3, q_21, q_111)");
  TripartiteClassification c;
  c.sep_criterion_1 = q[1] - 4.0 * q[2];
  c.sep_criterion_2 = 3.0 * q[0] - q[1] + q[2];
  c.bisep_criterion = q[1] - 2.0 * q[2];
  const auto fppt = fppt_check(symmetric_state(3, d, q), {1});
  c.fppt = fppt.pass;
  c.fppt_min_eigenvalue = fppt.min_eigenvalues.front();
  const double tol = 1e-12;
  if (c.bisep_criterion < -tol)
    c.label = TripartiteLabel::Gme;
  else if (c.sep_criterion_1 >= -tol && c.sep_criterion_2 >= -tol)
    c.label = TripartiteLabel::FullSep;
  else if (c.fppt)
    c.label = TripartiteLabel::BoundEntangled;
  else
    c.label = TripartiteLabel::BisepNotFull;
  return c;
}

std::vector<double> werner_weights(double p) { return {p, 1.0 - p, 0.0}; }

namespace {

// Smallest p in [lo, hi] with pred(p) true, assuming pred is monotone (false then true).
template <typename Pred>
double bisect(double lo, double hi, Pred pred) {
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

WernerReport classify_werner_family(int resolution, int d) {
  if (resolution < 2) throw std::invalid_argument("classify_werner_family: resolution must be >= 2");
  if (d < 2) throw std::invalid_argument("classify_werner_family: d must be >= 2");
  WernerReport r;
  r.d = d;
  auto sep = [](double p) {
    const auto q = werner_weights(p);
    return q[1] - 4.0 * q[2] >= 0.0 && 3.0 * q[0] - q[1] + q[2] >= 0.0;
  };
  // Bisection uses the sign of the eigenvalue itself, not the reporting tolerance.
  auto ppt = [d](double p) { return fppt_check(symmetric_state(3, d, werner_weights(p)), {1}).min_eigenvalues[0] >= -1e-14; };
  r.scan.resize(static_cast<std::size_t>(resolution) + 1);
  parallel_for(r.scan.size(), [&](std::size_t i) {
    const double p = static_cast<double>(i) / resolution;
    r.scan[i] = {p, classify_tripartite(werner_weights(p), d)};
  });
  for (std::size_t i = 0; i < r.scan.size(); ++i) {
    r.bisep_everywhere = r.bisep_everywhere && r.scan[i].c.bisep_criterion >= -1e-12;
    if (i && r.scan[i].c.label != r.scan[i - 1].c.label) ++r.label_changes;
  }
  r.sep_boundary = sep(0.0) ? 0.0 : bisect(0.0, 1.0, sep);
  r.ppt_boundary = ppt(0.0) ? 0.0 : bisect(0.0, 1.0, ppt);
  r.bound_entangled_low = r.ppt_boundary;
  r.bound_entangled_high = r.sep_boundary;
  r.note = "derived: bound entangled for " + std::to_string(r.ppt_boundary) + " <= p < " +
           std::to_string(r.sep_boundary) + ", fully separable for p >= " + std::to_string(r.sep_boundary) +
           "; the stated interval 1/4 < p <= 1/5 is empty and disagrees with these thresholds (reference PPT value 1/5)";
  return r;
}

DecomposabilityReport decomposability_identity_check(int d) {
  if (d < 2) throw std::invalid_argument("decomposability_identity_check: d must be >= 2");
  const int n = 3;
  DecomposabilityReport report;
  report.d = d;
  VectorXc phi = VectorXc::Zero(d * d);
  for (int j = 0; j < d; ++j) phi(j * d + j) = 1.0;
  const DenseOperator epr = DenseOperator::projector_onto(d, 2, phi);
  const DenseOperator id1 = DenseOperator::identity(d, 1);

  for (int sign : {+1, -1}) {
    DenseOperator sum(d, n);
    for (int j = 1; j <= 3; ++j) {
      const int a = j % 3 + 1;  // j+1 (cyclic)
      const int b = a % 3 + 1;  // j+2 (cyclic)
      // |Phi><Phi| on (j, j+1) and identity on j+2, placed via a site relabelling.
      DenseOperator base = tensor_product(epr, id1);  // sites (1,2) entangled, 3 free
      // permutation sending sites 1,2,3 to j, a, b
      std::vector<int> images(3);
      images[0] = j - 1;
      images[1] = a - 1;
      images[2] = b - 1;
      const auto relabel = permutation_operator(Permutation(images), d);
      DenseOperator placed = relabel * base * DenseOperator(d, n, relabel.matrix().adjoint());
      const auto swap_ab = permutation_operator(Permutation::from_cycles(n, {{a, b}}), d);
      DenseOperator proj = DenseOperator::identity(d, n);
      proj += static_cast<double>(sign) * swap_ab;
      proj *= 0.5;
      DenseOperator inner = proj * placed * proj;
      const int site[] = {j};
      sum += (4.0 / 3.0) * partial_transpose(inner, site);
    }
    const auto set = shared_projectors(d, n);
    DenseOperator target(d, n);
    auto add = [&](const char* lam, double c) {
      if (const auto* p = set->find(parse_partition(lam))) target += c * (*p);
    };
    if (sign > 0) {
      add("3", 4.0);
      add("2,1", -1.0);
    } else {
      add("2,1", 1.0);
      add("1,1,1", -4.0);
    }
    const double res = max_abs_diff(sum.matrix(), target.matrix());
    (sign > 0 ? report.residual_plus : report.residual_minus) = res;
  }
  return report;
}

SevenQubitReport seven_qubit_consistency(int samples, std::uint64_t seed) {
  const int n = 7, d = 2;
  SevenQubitReport r;
  r.alpha = 24.0 / static_cast<double>(binomial(33, 5));
  r.samples = samples;
  r.seed = seed;
  std::map<Partition, double> c7{{Partition({7}), 196.0}, {Partition({4, 3}), -1.0}};
  const DenseOperator w7 = witness_operator(make_witness(n, d, c7));
  c7[Partition({4, 3})] += r.alpha;
  const DenseOperator w7p = witness_operator(make_witness(n, d, c7));

  const SeparabilityPartition k511({5, 1, 1}), k331({3, 3, 1});
  std::vector<double> v511(static_cast<std::size_t>(samples)), v331(v511.size()), vsym(v511.size());
  parallel_for(v511.size(), [&](std::size_t i) {
    CounterRng rng(seed, 3 * i);
    v511[i] = expectation(w7p, random_product_state(k511, d, rng));
    CounterRng rng2(seed, 3 * i + 1);
    v331[i] = expectation(w7p, random_product_state(k331, d, rng2));
    CounterRng rng3(seed, 3 * i + 2);
    const VectorXc psi = haar_vector(d, rng3);
    ProductState sym{SeparabilityPartition(std::vector<int>(7, 1)), d, std::vector<VectorXc>(7, psi)};
    vsym[i] = expectation(w7, sym);
  });
  r.min_511 = samples ? *std::min_element(v511.begin(), v511.end()) : 0.0;
  r.min_331 = samples ? *std::min_element(v331.begin(), v331.end()) : 0.0;
  r.symmetric_product_min = samples ? *std::min_element(vsym.begin(), vsym.end()) : 0.0;
  r.violations_511 = static_cast<int>(std::count_if(v511.begin(), v511.end(), [](double v) { return v < -1e-6; }));
  r.violations_331 = static_cast<int>(std::count_if(v331.begin(), v331.end(), [](double v) { return v < -1e-6; }));
  return r;
}

}  // namespace pw
