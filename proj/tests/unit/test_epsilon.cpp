#include "pw/epsilon_certify.hpp"

#include <gtest/gtest.h>

#include "pw/immanant.hpp"
#include "pw/projectors.hpp"
#include "pw/separability.hpp"

using namespace pw;

TEST(Epsilon, DualBasisWitness) {
  const auto w = dual_basis_witness(4, 4, {35, 135, 40, 45, 1});
  for (double c : w.coeffs) EXPECT_NEAR(c, 1.0, 1e-14);
  EXPECT_THROW(dual_basis_witness(4, 4, {1, 2}), std::invalid_argument);
}

TEST(Epsilon, BoundsBracketFeasibleValues) {
  const auto& rows = indecomposable_rows();
  const auto w = dual_basis_witness(4, 4, rows[0]);
  const auto c = epsilon_certify(w);
  EXPECT_TRUE(c.weak_duality);
  EXPECT_LE(c.lower_bound, c.upper_bound + 1e-12);
  EXPECT_TRUE(c.certified);
  EXPECT_NEAR(c.epsilon, -c.lower_bound, 0.0);
  EXPECT_EQ(c.shift, std::max(0.0, c.epsilon));

  // |0> x X for X the maximally mixed state on 3 ququarts is FPPT, so its
  // value bounds the minimum from above.
  const auto op = witness_operator(w);
  const double mixed = op.matrix().topLeftCorner(64, 64).trace().real() / 64.0;
  EXPECT_LE(c.lower_bound, mixed + 1e-12);
  // so does any product basis state |0 i j k>
  for (int i = 0; i < 64; ++i) EXPECT_LE(c.lower_bound, op.matrix()(i, i).real() + 1e-12);
}

TEST(Epsilon, PositiveOperatorHasNoShift) {
  // all coefficients positive: the minimum is positive and nothing is shifted
  const auto w = dual_basis_witness(4, 4, {1, 1, 1, 1, 1});
  const auto c = epsilon_certify(w);
  EXPECT_GT(c.lower_bound, 0.0);
  EXPECT_EQ(c.shift, 0.0);
}
