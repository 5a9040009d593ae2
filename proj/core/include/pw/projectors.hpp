#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "pw/combinatorics.hpp"
#include "pw/dense_operator.hpp"
#include "pw/sector.hpp"

namespace pw {

/// Scalar weight per conjugacy class of S_n (keyed by cycle-type partition).
using ClassFunction = std::map<Partition, double>;

/// f(pi) = sum_lambda c_lambda * d_lambda * chi_lambda(pi) / n!, so that
/// sum_pi f(pi) eta_d(pi) = sum_lambda c_lambda Pi_lambda. Partitions longer
/// than d contribute nothing.
ClassFunction projector_class_function(const std::vector<Partition>& lambdas,
                                       const std::vector<double>& coeffs, int d);

/// sum_pi f(cycle type of pi) eta_d(pi), accumulated through index maps.
DenseOperator class_sum_operator(const ClassFunction& f, int d, int n);

/// Pi_lambda = (d_lambda / n!) sum_pi chi_lambda(pi) eta_d(pi); zero when length(lambda) > d.
DenseOperator young_projector(const Partition& lambda, int d, int n);

/// n! * Pi_lambda as an exact integer matrix. Validation only: n <= 5, d <= 3.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> young_projector_scaled_exact(
    const Partition& lambda, int d, int n);

/// Young projectors for all lambda |-_d n, canonical order.
struct ProjectorSet {
  int d = 0;
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<DenseOperator> projectors;

  /// Projector for lambda; nullptr if length(lambda) > d.
  const DenseOperator* find(const Partition& lambda) const;
};

ProjectorSet build_projector_set(int d, int n);

/// Process-wide memo of build_projector_set (thread-safe, never evicted).
std::shared_ptr<const ProjectorSet> shared_projectors(int d, int n);

struct ProjectorSetReport {
  double orthogonality = 0.0;  // max_{lambda != mu} |Pi_lambda Pi_mu|_max
  double idempotence = 0.0;    // max |Pi^2 - Pi|_max
  double completeness = 0.0;   // |sum Pi - I|_max
  double trace = 0.0;          // max |tr Pi_lambda - d_lambda m_lambda(d)|
  double hermiticity = 0.0;
};
ProjectorSetReport check_projector_set(const ProjectorSet& set);

/// First-site compression (<d| x I) (sum_pi f eta_d(pi)) (|d> x I) assembled
/// directly in content sectors of the remaining n-1 sites.
struct CompressedBlocks {
  int d = 0;
  int n = 0;
  SectorDecomposition sectors;
  std::vector<Eigen::MatrixXd> blocks;

  Eigen::MatrixXd dense() const;
};
CompressedBlocks compress_class_sum(const ClassFunction& f, int d, int n);

}  // namespace pw
