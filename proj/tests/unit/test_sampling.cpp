#include "pw/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "pw/parallel.hpp"
#include "pw/separability.hpp"

using namespace pw;

TEST(Sampling, SchurProbabilitiesOfWernerState) {
  const auto p = schur_probabilities(symmetric_state(3, 3, werner_weights(0.3)));
  ASSERT_EQ(p.probs.size(), 3u);
  EXPECT_NEAR(p.probs[0], 0.3, 1e-12);
  EXPECT_NEAR(p.probs[1], 0.7, 1e-12);
  EXPECT_NEAR(p.probs[2], 0.0, 1e-12);
}

TEST(Sampling, SchurProbabilitiesOfBasisState) {
  // |01> = (|01> + |10>)/2 + (|01> - |10>)/2 splits evenly
  VectorXc psi = VectorXc::Zero(4);
  psi(1) = 1.0;
  const auto p = schur_probabilities(DenseOperator::projector_onto(2, 2, psi));
  EXPECT_NEAR(p.probs[0], 0.5, 1e-12);
  EXPECT_NEAR(p.probs[1], 0.5, 1e-12);
}

TEST(Sampling, RejectsInvalidStates) {
  DenseOperator bad(2, 2, MatrixXc::Identity(4, 4));
  EXPECT_THROW(schur_probabilities(bad), std::invalid_argument);  // trace 4
  MatrixXc m = MatrixXc::Zero(4, 4);
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_THROW(schur_probabilities(DenseOperator(2, 2, m)), std::invalid_argument);
  m(1, 1) = -0.0;
  m(0, 0) = 1.0;
  m(0, 1) = 0.3;
  EXPECT_THROW(schur_probabilities(DenseOperator(2, 2, m)), std::invalid_argument);
}

TEST(Sampling, CountsAreReproducibleAndThreadIndependent) {
  const auto p = make_distribution(3, 3, {0.2, 0.5, 0.3});
  set_thread_limit(1);
  const auto a = sample(p, 300000, 12);
  set_thread_limit(4);
  const auto b = sample(p, 300000, 12);
  set_thread_limit(0);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.total, 300000);
  std::int64_t s = 0;
  for (auto c : a.counts) s += c;
  EXPECT_EQ(s, 300000);
  EXPECT_NE(sample(p, 300000, 13).counts, a.counts);
  // Pearson chi-square with 2 degrees of freedom; 13.8 is the 0.1% quantile
  double chi2 = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double e = 300000 * p.probs[i];
    chi2 += (a.counts[i] - e) * (a.counts[i] - e) / e;
  }
  EXPECT_LT(chi2, 13.8);
}

TEST(Sampling, EstimateAndRadius) {
  const auto w = make_witness(3, 3, std::vector<double>{4.0, -1.0, 0.0});
  EXPECT_DOUBLE_EQ(coefficient_range(w, 0.0), 4.0 - (-1.0));
  ShotRecord rec;
  rec.n = 3;
  rec.d = 3;
  rec.partitions = w.partitions;
  rec.counts = {10, 90, 0};
  rec.total = 100;
  const auto e = estimate_and_decide(rec, w, 0.0, 0.05);
  EXPECT_NEAR(e.estimate, (4.0 * 10 - 90) / 100.0, 1e-15);
  EXPECT_NEAR(e.radius, 5.0 * std::sqrt(std::log(2 / 0.05) / 200.0), 1e-15);
  EXPECT_EQ(e.detected, e.estimate + e.radius < 0);
}

TEST(Sampling, HoeffdingCoverage) {
  // with delta = 0.1 the interval should miss the truth in at most ~10% of runs
  const auto w = make_witness(3, 3, std::vector<double>{4.0, -1.0, 0.0});
  const auto p = make_distribution(3, 3, {0.2, 0.8, 0.0});
  const double truth = 4.0 * 0.2 - 0.8;
  int misses = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto e = estimate_and_decide(sample(p, 500, seed), w, 0.0, 0.1);
    misses += std::abs(e.estimate - truth) > e.radius;
  }
  EXPECT_LE(misses, 20);
}

TEST(Sampling, StateSpecs) {
  const auto w3 = make_witness(3, 3, std::vector<double>{4.0, -1.0, 0.0});
  EXPECT_NEAR(schur_probabilities(state_from_spec("werner:0.25", w3)).probs[0], 0.25, 1e-12);
  EXPECT_NEAR(schur_probabilities(state_from_spec("symmetric:0.1,0.2,0.7", w3)).probs[2], 0.7, 1e-12);
  EXPECT_NEAR(schur_probabilities(state_from_spec("basis:000", w3)).probs[0], 1.0, 1e-12);
  EXPECT_THROW(state_from_spec("basis:0a0", w3), std::invalid_argument);
  EXPECT_THROW(state_from_spec("werner:1.5", w3), std::invalid_argument);
  EXPECT_THROW(state_from_spec("nonsense", w3), std::invalid_argument);
}

TEST(Sampling, PipelineOptimalStateIsNotDetected) {
  const auto w = make_witness(4, 2, std::vector<double>{9.0, -1.0, 0.0});
  const auto r = pipeline("optimal", w, parse_kappa("3|1"), 20000, 0.05, 1);
  EXPECT_FALSE(r.estimate.detected);
  EXPECT_EQ(r.alpha_provenance, "closed-form");
  const auto j = to_json(r);
  for (const char* key : {"witness", "alpha_provenance", "N", "delta", "estimate", "radius", "detected", "seed"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Sampling, PipelineDetectsWernerEntanglement) {
  const auto w = make_witness(3, 3, std::vector<double>{4.0, -1.0, 0.0});
  const auto r = pipeline("werner:0", w, parse_kappa("1|1|1"), 20000, 0.05, 2);
  EXPECT_NEAR(r.alpha.value, 0.0, 1e-12);
  EXPECT_TRUE(r.estimate.detected);
  const auto w4 = make_witness(4, 3, std::vector<double>{0.0, 1.0, 0.0, -1.0, 0.0});
  const auto s = pipeline("symmetric:0,0,0,1,0", w4, parse_kappa("2|2"), 1000, 0.05, 2);
  EXPECT_EQ(s.alpha_provenance, "seesaw-heuristic");
  EXPECT_FALSE(s.warnings.empty());
}
