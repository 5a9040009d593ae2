#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pw {

/// Splits the computational basis of (C^d)^{\otimes m} into sectors of a
/// conserved torus charge, sum_s sign_s * e_{i_s}. Operators commuting with
/// U^{\otimes p} \otimes \bar U^{\otimes q} (signs +1 then -1) are block diagonal
/// in this decomposition.
class SectorDecomposition {
 public:
  SectorDecomposition(int d, std::vector<int> signs);

  int local_dim() const { return d_; }
  int sites() const { return static_cast<int>(signs_.size()); }
  std::int64_t dim() const { return static_cast<std::int64_t>(block_of_.size()); }

  const std::vector<std::vector<std::int64_t>>& blocks() const { return blocks_; }
  int block_of(std::int64_t index) const { return block_of_[index]; }
  int position_of(std::int64_t index) const { return position_of_[index]; }

 private:
  int d_;
  std::vector<int> signs_;
  std::vector<std::vector<std::int64_t>> blocks_;
  std::vector<int> block_of_;
  std::vector<int> position_of_;
};

/// Ascending spectrum of a self-adjoint matrix that is block diagonal in `sectors`.
/// Entries coupling different sectors are ignored; `leak` (if given) receives
/// the largest such entry so callers can assert the symmetry.
std::vector<double> sector_eigenvalues(const Eigen::MatrixXd& m, const SectorDecomposition& sectors,
                                       double* leak = nullptr);
std::vector<double> sector_eigenvalues(const Eigen::MatrixXcd& m,
                                       const SectorDecomposition& sectors, double* leak = nullptr);

/// Restriction of m to one sector.
Eigen::MatrixXd sector_block(const Eigen::MatrixXd& m, const std::vector<std::int64_t>& basis);

}  // namespace pw
