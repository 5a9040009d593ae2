#include "pw/random.hpp"

#include <cmath>
#include <numbers>

namespace pw {

double CounterRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXcd haar_vector(Eigen::Index dim, CounterRng& rng) {
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = {re, im};
  }
  return v / v.norm();
}

}  // namespace pw
