#include "pw/seesaw.hpp"

#include <gtest/gtest.h>

#include "pw/projectors.hpp"
#include "pw/witness.hpp"

using namespace pw;

TEST(Seesaw, AntisymmetricProjectorOnProducts) {
  // <ab| Pi_(1,1) |ab> = (1 - |<a|b>|^2) / 2, so the product minimum of -Pi_(1,1) is -1/2.
  for (int d = 2; d <= 4; ++d) {
    const auto w = -1.0 * young_projector(Partition({1, 1}), d, 2);
    const auto r = seesaw_minimize(w, SeparabilityPartition({1, 1}));
    EXPECT_NEAR(r.value, -0.5, 1e-9);
    EXPECT_TRUE(r.monotone);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(expectation(w, r.state), r.value, 1e-12);
  }
}

TEST(Seesaw, SymmetricProjectorOnProducts) {
  // max over products of <abc| Pi_(3) |abc> is 1 (a = b = c)
  const auto w = -1.0 * young_projector(Partition({3}), 2, 3);
  EXPECT_NEAR(seesaw_minimize(w, SeparabilityPartition({1, 1, 1})).value, -1.0, 1e-9);
}

TEST(Seesaw, TrivialPartitionIsMinimumEigenvalue) {
  const auto w = witness_operator(make_witness(3, 3, std::vector<double>{1.0, -0.7, 2.0}));
  EXPECT_NEAR(seesaw_minimize(w, SeparabilityPartition({3})).value, min_eigenvalue(w), 1e-9);
}

TEST(Seesaw, EffectiveOperatorReproducesExpectation) {
  CounterRng rng(2);
  const auto w = witness_operator(make_witness(4, 2, std::vector<double>{1.0, -3.0, 0.5}));
  const SeparabilityPartition kappa({2, 1, 1});
  const auto s = random_product_state(kappa, 2, rng);
  const double full = expectation(w, s);
  for (std::size_t r = 0; r < s.factors.size(); ++r) {
    const MatrixXc eff = effective_operator(w, s, r);
    EXPECT_NEAR((s.factors[r].adjoint() * eff * s.factors[r])(0, 0).real(), full, 1e-12);
  }
}

TEST(Seesaw, DeterministicForSeed) {
  const auto w = witness_operator(make_witness(4, 3, std::vector<double>{0.0, 1.0, 0.0, -1.0, 0.0}));
  SeesawOptions opt;
  opt.restarts = 8;
  opt.seed = 77;
  const auto a = seesaw_minimize(w, SeparabilityPartition({2, 2}), opt);
  const auto b = seesaw_minimize(w, SeparabilityPartition({2, 2}), opt);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.seed, 77u);
  EXPECT_NEAR(a.value, -0.5, 1e-8);
}

TEST(SeparabilityPartition, Parsing) {
  EXPECT_EQ(parse_kappa("1|3").parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(parse_kappa("[1|1|2]").to_string(), "2|1|1");
  EXPECT_EQ(parse_kappa("2,2").n(), 4);
  EXPECT_EQ(parse_kappa("1^4").factors(), 4);
  EXPECT_THROW(parse_kappa("0|2"), std::invalid_argument);
}
