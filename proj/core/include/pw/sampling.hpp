#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pw/alpha.hpp"
#include "pw/dense_operator.hpp"
#include "pw/witness.hpp"

namespace pw {

/// p_lambda = tr(Pi_lambda rho) over all lambda |- n. Throws std::invalid_argument
/// if rho is not Hermitian, has |tr rho - 1| > 1e-8, or is not PSD.
SchurDistribution schur_probabilities(const DenseOperator& rho);

struct ShotRecord {
  int n = 0;
  int d = 0;
  std::vector<Partition> partitions;
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;
  std::uint64_t seed = 0;
};

/// Multinomial draw of N outcomes. Shots are split into fixed blocks, each with
/// its own stream, so the record does not depend on the thread count.
ShotRecord sample(const SchurDistribution& p, std::int64_t shots, std::uint64_t seed);

struct EstimateReport {
  double estimate = 0.0;  // sum (c_lambda - alpha) counts_lambda / N
  double radius = 0.0;    // R sqrt(ln(2/delta) / (2N))
  double range = 0.0;     // R
  double delta = 0.0;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  bool detected = false;  // estimate + radius < 0
};

EstimateReport estimate_and_decide(const ShotRecord& rec, const Witness& w, double alpha, double delta);

/// Coefficient range R = max |c - alpha| - min (c - alpha) over lambda with length <= d.
double coefficient_range(const Witness& w, double alpha);

struct PipelineReport {
  std::string state;
  SeparabilityPartition kappa;
  Witness witness;
  AlphaResult alpha;
  std::string alpha_provenance;  // "closed-form" or "seesaw-heuristic"
  SchurDistribution exact;
  ShotRecord shots;
  EstimateReport estimate;
  std::vector<std::string> warnings;
};

/// State specifications:
///   werner:P              p Pi_(3)/tr + (1-p) Pi_(2,1)/tr (n = 3)
///   symmetric:q1,q2,...   sum q_lambda Pi_lambda / tr Pi_lambda
///   basis:0123            computational basis product state
///   optimal               the [n-1|1] minimizer of the witness (closed-form certificate)
DenseOperator state_from_spec(const std::string& spec, const Witness& w);

PipelineReport pipeline(const std::string& state_spec, const Witness& w, const SeparabilityPartition& kappa,
                        std::int64_t shots, double delta, std::uint64_t seed, const SeesawOptions& seesaw = {});

nlohmann::json to_json(const PipelineReport& report);

}  // namespace pw
