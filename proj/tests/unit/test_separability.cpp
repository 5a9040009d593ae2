#include "pw/separability.hpp"

#include <gtest/gtest.h>

#include "pw/projectors.hpp"

using namespace pw;

TEST(SymmetricState, TraceAndWeights) {
  const auto rho = symmetric_state(3, 3, {0.2, 0.5, 0.3});
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  const MatrixXc p21 = young_projector(Partition({2, 1}), 3, 3).matrix();
  EXPECT_NEAR((rho.matrix() * p21).trace().real(), 0.5, 1e-12);
  EXPECT_THROW(symmetric_state(3, 2, {0.2, 0.5, 0.3}), std::invalid_argument);
  EXPECT_THROW(symmetric_state(3, 3, {0.2, 0.5, 0.4}), std::invalid_argument);
}

TEST(Fppt, ProductAndAntisymmetricStates) {
  VectorXc psi = VectorXc::Zero(27);
  psi(5) = 1.0;  // |012>
  EXPECT_TRUE(fppt_check(DenseOperator::projector_onto(3, 3, psi)).pass);
  // the antisymmetric state of three qutrits is NPT on every cut
  const auto anti = symmetric_state(3, 3, {0.0, 0.0, 1.0});
  const auto r = fppt_check(anti, {1});
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.min_eigenvalues[0], -0.1);
}

TEST(Fppt, MatchesExplicitPartialTranspose) {
  const auto rho = symmetric_state(4, 2, {0.1, 0.6, 0.3});
  const auto r = fppt_check(rho);
  ASSERT_EQ(r.cut_sizes, (std::vector<int>{1, 2}));
  const int one[] = {1};
  const int two[] = {1, 2};
  EXPECT_NEAR(r.min_eigenvalues[0], min_eigenvalue(partial_transpose(rho, one)), 1e-12);
  EXPECT_NEAR(r.min_eigenvalues[1], min_eigenvalue(partial_transpose(rho, two)), 1e-12);
}

TEST(Tripartite, Labels) {
  EXPECT_EQ(classify_tripartite(werner_weights(0.5), 3).label, TripartiteLabel::FullSep);
  EXPECT_EQ(classify_tripartite(werner_weights(0.22), 3).label, TripartiteLabel::BoundEntangled);
  EXPECT_EQ(classify_tripartite(werner_weights(0.1), 3).label, TripartiteLabel::BisepNotFull);
  EXPECT_EQ(classify_tripartite({0.0, 0.0, 1.0}, 3).label, TripartiteLabel::Gme);
  EXPECT_EQ(to_string(TripartiteLabel::BoundEntangled), "BOUND-ENTANGLED");
}

TEST(Werner, Boundaries) {
  const auto r = classify_werner_family(50, 3);
  EXPECT_NEAR(r.sep_boundary, 0.25, 1e-8);
  EXPECT_NEAR(r.ppt_boundary, 0.2, 1e-8);
  EXPECT_NEAR(r.bound_entangled_low, 0.2, 1e-8);
  EXPECT_NEAR(r.bound_entangled_high, 0.25, 1e-8);
  EXPECT_TRUE(r.bisep_everywhere);
  EXPECT_EQ(r.scan.size(), 51u);
}

TEST(Werner, PptThresholdFromPartialTranspose) {
  // independent route: lambda_min of rho_p^{T_1} is affine in p
  const int cut[] = {1};
  auto f = [&](double p) { return min_eigenvalue(partial_transpose(symmetric_state(3, 3, werner_weights(p)), cut)); };
  EXPECT_GT(f(0.21), 0.0);
  EXPECT_LT(f(0.19), 0.0);
}

TEST(Decomposability, Residuals) {
  for (int d = 2; d <= 3; ++d) {
    const auto r = decomposability_identity_check(d);
    EXPECT_LT(r.residual_plus, 1e-12);
    EXPECT_LT(r.residual_minus, 1e-12);
  }
}

TEST(SevenQubit, ShiftedWitnessNonnegative) {
  const auto r = seven_qubit_consistency(20, 4);
  EXPECT_NEAR(r.alpha, 24.0 / 237336.0, 1e-18);
  EXPECT_EQ(r.violations_511, 0);
  EXPECT_EQ(r.violations_331, 0);
  EXPECT_GE(r.min_511, -1e-6);
  EXPECT_GE(r.min_331, -1e-6);
}
