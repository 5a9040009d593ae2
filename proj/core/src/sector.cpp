#include "pw/sector.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pw/dense_operator.hpp"

namespace pw {

SectorDecomposition::SectorDecomposition(int d, std::vector<int> signs)
    : d_(d), signs_(std::move(signs)) {
  const int m = sites();
  const auto dim = ipow(d, m);
  block_of_.assign(static_cast<std::size_t>(dim), -1);
  position_of_.assign(static_cast<std::size_t>(dim), -1);
  std::map<std::vector<int>, int> index_of_charge;
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  std::vector<int> charge(static_cast<std::size_t>(d), 0);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::fill(charge.begin(), charge.end(), 0);
    for (int s = 0; s < m; ++s) charge[digits[s]] += signs_[s];
    auto [it, inserted] = index_of_charge.try_emplace(charge, static_cast<int>(blocks_.size()));
    if (inserted) blocks_.emplace_back();
    block_of_[idx] = it->second;
    position_of_[idx] = static_cast<int>(blocks_[it->second].size());
    blocks_[it->second].push_back(idx);
    for (int s = m - 1; s >= 0; --s) {
      if (++digits[s] < d) break;
      digits[s] = 0;
    }
  }
}

Eigen::MatrixXd sector_block(const Eigen::MatrixXd& m, const std::vector<std::int64_t>& basis) {
  const auto k = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd b(k, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < k; ++i) b(i, j) = m(basis[i], basis[j]);
  return b;
}

namespace {

template <typename Mat>
std::vector<double> sector_eigs(const Mat& m, const SectorDecomposition& sectors, double* leak) {
  if (m.rows() != sectors.dim() || m.cols() != sectors.dim())
    throw std::invalid_argument("sector_eigenvalues: dimension mismatch");
  if (leak) {
    double worst = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (sectors.block_of(r) != sectors.block_of(c)) worst = std::max(worst, std::abs(m(r, c)));
    *leak = worst;
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (const auto& basis : sectors.blocks()) {
    const auto k = static_cast<Eigen::Index>(basis.size());
    Mat b(k, k);
    for (Eigen::Index j = 0; j < k; ++j)
      for (Eigen::Index i = 0; i < k; ++i) b(i, j) = m(basis[i], basis[j]);
    Eigen::SelfAdjointEigenSolver<Mat> es(b, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < k; ++i) out.push_back(es.eigenvalues()(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<double> sector_eigenvalues(const Eigen::MatrixXd& m, const SectorDecomposition& sectors,
                                       double* leak) {
  return sector_eigs(m, sectors, leak);
}

std::vector<double> sector_eigenvalues(const Eigen::MatrixXcd& m,
                                       const SectorDecomposition& sectors, double* leak) {
  return sector_eigs(m, sectors, leak);
}

}  // namespace pw
