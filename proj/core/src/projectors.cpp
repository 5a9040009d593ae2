#include "pw/projectors.hpp"

#include <mutex>
#include <stdexcept>

namespace pw {

ClassFunction projector_class_function(const std::vector<Partition>& lambdas,
                                       const std::vector<double>& coeffs, int d) {
  if (lambdas.size() != coeffs.size())
    throw std::invalid_argument("projector_class_function: size mismatch");
  if (lambdas.empty()) return {};
  const int n = lambdas.front().size();
  const double nfact = static_cast<double>(factorial(n));
  ClassFunction f;
  for (const auto& cls : enumerate_partitions(n)) {
    double value = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      if (lambdas[i].size() != n) throw std::invalid_argument("mixed partition sizes");
      if (lambdas[i].length() > d || coeffs[i] == 0.0) continue;
      value += coeffs[i] * static_cast<double>(hook_dimension(lambdas[i]) *
                                               character(lambdas[i], CycleType(cls)));
    }
    f[cls] = value / nfact;
  }
  return f;
}

DenseOperator class_sum_operator(const ClassFunction& f, int d, int n) {
  const auto dim = checked_dimension(d, n);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& pi : all_permutations(n)) {
    const auto it = f.find(pi.cycle_type().lengths);
    if (it == f.end() || it->second == 0.0) continue;
    const double w = it->second;
    const auto map = permutation_index_map(pi, d);
    for (std::int64_t in = 0; in < dim; ++in) acc(map[in], in) += w;
  }
  return DenseOperator(d, n, acc.cast<Complex>());
}

DenseOperator young_projector(const Partition& lambda, int d, int n) {
  if (lambda.size() != n) throw std::invalid_argument("young_projector: lambda is not a partition of n");
  if (lambda.length() > d) return DenseOperator(d, n);
  return class_sum_operator(projector_class_function({lambda}, {1.0}, d), d, n);
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> young_projector_scaled_exact(
    const Partition& lambda, int d, int n) {
  if (n > 5 || d > 3) throw std::invalid_argument("exact projector mode supports n <= 5, d <= 3");
  if (lambda.size() != n) throw std::invalid_argument("young_projector: lambda is not a partition of n");
  const auto dim = ipow(d, n);
  using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  IMat acc = IMat::Zero(dim, dim);
  if (lambda.length() > d) return acc;
  const std::int64_t dl = hook_dimension(lambda);
  for (const auto& pi : all_permutations(n)) {
    const std::int64_t w = dl * character(lambda, pi.cycle_type());
    if (w == 0) continue;
    const auto map = permutation_index_map(pi, d);
    for (std::int64_t in = 0; in < dim; ++in) acc(map[in], in) += w;
  }
  return acc;
}

const DenseOperator* ProjectorSet::find(const Partition& lambda) const {
  const int idx = partition_index(partitions, lambda);
  return idx < 0 ? nullptr : &projectors[static_cast<std::size_t>(idx)];
}

ProjectorSet build_projector_set(int d, int n) {
  checked_dimension(d, n);
  ProjectorSet set;
  set.d = d;
  set.n = n;
  set.partitions = enumerate_partitions(n, d);
  for (const auto& lambda : set.partitions) set.projectors.push_back(young_projector(lambda, d, n));
  return set;
}

std::shared_ptr<const ProjectorSet> shared_projectors(int d, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ProjectorSet>> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({d, n});
    if (it != memo.end()) return it->second;
  }
  auto built = std::make_shared<const ProjectorSet>(build_projector_set(d, n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.try_emplace({d, n}, std::move(built));
  return it->second;
}

ProjectorSetReport check_projector_set(const ProjectorSet& set) {
  ProjectorSetReport r;
  const auto dim = ipow(set.d, set.n);
  MatrixXc sum = MatrixXc::Zero(dim, dim);
  for (std::size_t i = 0; i < set.projectors.size(); ++i) {
    const auto& p = set.projectors[i].matrix();
    sum += p;
    r.hermiticity = std::max(r.hermiticity, set.projectors[i].hermiticity_error());
    const MatrixXc sq = p * p;
    r.idempotence = std::max(r.idempotence, max_abs_diff(sq, p));
    const double expected = static_cast<double>(hook_dimension(set.partitions[i]) *
                                                weyl_dimension(set.partitions[i], set.d));
    r.trace = std::max(r.trace, std::abs(p.trace() - Complex(expected)));
    for (std::size_t j = i + 1; j < set.projectors.size(); ++j) {
      const MatrixXc prod = p * set.projectors[j].matrix();
      r.orthogonality = std::max(r.orthogonality, prod.cwiseAbs().maxCoeff());
    }
  }
  r.completeness = max_abs_diff(sum, MatrixXc::Identity(dim, dim));
  return r;
}

Eigen::MatrixXd CompressedBlocks::dense() const {
  const auto dim = sectors.dim();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  const auto& bases = sectors.blocks();
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (std::size_t j = 0; j < bases[b].size(); ++j)
      for (std::size_t i = 0; i < bases[b].size(); ++i)
        out(bases[b][i], bases[b][j]) = blocks[b](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

CompressedBlocks compress_class_sum(const ClassFunction& f, int d, int n) {
  if (n < 2) throw std::invalid_argument("compress_class_sum requires n >= 2");
  const int m = n - 1;
  const auto sub = ipow(d, m);
  if (sub > kMaxDimension) throw std::length_error("compressed dimension exceeds the size budget");
  CompressedBlocks out{d, n, SectorDecomposition(d, std::vector<int>(static_cast<std::size_t>(m), 1)), {}};
  for (const auto& basis : out.sectors.blocks()) {
    const auto k = static_cast<Eigen::Index>(basis.size());
    out.blocks.push_back(Eigen::MatrixXd::Zero(k, k));
  }
  // digits of every (n-1)-site index
  std::vector<int> digits(static_cast<std::size_t>(sub * m));
  for (std::int64_t idx = 0; idx < sub; ++idx) {
    std::int64_t rest = idx;
    for (int s = m - 1; s >= 0; --s) {
      digits[idx * m + s] = static_cast<int>(rest % d);
      rest /= d;
    }
  }
  std::vector<std::int64_t> stride(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) stride[s] = ipow(d, n - 1 - s);
  const std::int64_t top = d - 1;
  for (const auto& pi : all_permutations(n)) {
    const auto it = f.find(pi.cycle_type().lengths);
    if (it == f.end() || it->second == 0.0) continue;
    const double w = it->second;
    const std::int64_t base = top * stride[pi(0)];
    for (std::int64_t in = 0; in < sub; ++in) {
      std::int64_t target = base;
      const int* dg = &digits[in * m];
      for (int j = 0; j < m; ++j) target += dg[j] * stride[pi(j + 1)];
      if (target / sub != top) continue;
      const std::int64_t out_idx = target - top * sub;
      const int block = out.sectors.block_of(in);
      out.blocks[block](out.sectors.position_of(out_idx), out.sectors.position_of(in)) += w;
    }
  }
  return out;
}

}  // namespace pw
