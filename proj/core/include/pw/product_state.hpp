#pragma once

#include <string>
#include <vector>

#include "pw/dense_operator.hpp"
#include "pw/random.hpp"

namespace pw {

/// Separability structure kappa = [k_1|...|k_m], k_1 >= ... >= k_m >= 1.
class SeparabilityPartition {
 public:
  SeparabilityPartition() = default;
  /// Parts are sorted descending; throws std::invalid_argument on non-positive parts.
  explicit SeparabilityPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const;
  int factors() const { return static_cast<int>(parts_.size()); }
  int depth() const { return parts_.empty() ? 0 : parts_.front(); }

  /// "3|1"
  std::string to_string() const;

  friend bool operator==(const SeparabilityPartition&, const SeparabilityPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Accepts "1|3", "[1|1|2]", "2,2" and "1^4".
SeparabilityPartition parse_kappa(const std::string& text);

/// One unit vector per factor; factor r occupies the next k_r sites.
struct ProductState {
  SeparabilityPartition kappa;
  int d = 0;
  std::vector<VectorXc> factors;

  /// Kronecker product of the factors (site 1 most significant).
  VectorXc vector() const;
  DenseOperator density() const;
};

ProductState random_product_state(const SeparabilityPartition& kappa, int d, CounterRng& rng);

/// <psi|A|psi>, real part.
double expectation(const DenseOperator& a, const VectorXc& psi);
double expectation(const DenseOperator& a, const ProductState& s);

}  // namespace pw
