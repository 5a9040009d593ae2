#include "pw/witness.hpp"

#include <gtest/gtest.h>

#include "pw/projectors.hpp"
#include "pw/seesaw.hpp"

using namespace pw;

namespace {

// min over |phi> on the last site of lambda_min(<phi| W |phi>); by unitary
// invariance |phi> = |0> suffices.
double last_site_minimum(const Witness& w) {
  const auto op = witness_operator(w);
  const Eigen::Index sub = op.dim() / w.d;
  MatrixXc m(sub, sub);
  for (Eigen::Index i = 0; i < sub; ++i)
    for (Eigen::Index j = 0; j < sub; ++j) m(i, j) = op.matrix()(i * w.d, j * w.d);
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

std::vector<double> random_row(std::size_t len, CounterRng& rng) {
  std::vector<double> row(len);
  for (auto& x : row) x = std::round(8.0 * rng.normal()) / 4.0;
  row[0] += 0.5;
  return row;
}

}  // namespace

TEST(Witness, ConstructionAndValidation) {
  const auto w = make_witness(4, 2, std::vector<double>{1.0, -2.0, 3.0});  // p(4, 2) = 3
  ASSERT_EQ(w.coeffs.size(), 5u);
  EXPECT_EQ(w.coeff(Partition({2, 2})), 3.0);
  EXPECT_EQ(w.coeff(Partition({1, 1, 1, 1})), 0.0);
  EXPECT_THROW(make_witness(4, 2, std::vector<double>{1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(make_witness(3, 3, std::vector<double>{0.0, 0.0, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW(make_witness(3, 3, std::vector<double>{NAN, 0.0, 1.0}).validate(), std::invalid_argument);
  EXPECT_THROW(make_distribution(3, 3, {0.5, 0.6, 0.0}).validate(), std::invalid_argument);
}

TEST(Witness, OperatorIsLinearCombination) {
  const auto w = make_witness(3, 3, std::vector<double>{2.0, -1.0, 0.5});
  MatrixXc want = MatrixXc::Zero(27, 27);
  for (std::size_t i = 0; i < 3; ++i) want += w.coeffs[i] * young_projector(w.partitions[i], 3, 3).matrix();
  EXPECT_LT(max_abs_diff(witness_operator(w).matrix(), want), 1e-12);
}

TEST(Witness, Detection) {
  const auto w = make_witness(3, 3, std::vector<double>{4.0, -1.0, 0.0});
  const auto p = make_distribution(3, 3, {0.1, 0.9, 0.0});
  const auto det = detect_inseparability(p, w, 0.0);
  EXPECT_NEAR(det.value, 0.4 - 0.9, 1e-15);
  EXPECT_TRUE(det.detected);
  EXPECT_FALSE(detect_inseparability(p, w, -1.0).detected);
}

TEST(WignerWeights, SumToOneOverAddableRows) {
  for (int d = 2; d <= 4; ++d)
    for (int m = 1; m <= 4; ++m)
      for (const auto& mu : enumerate_partitions(m, d))
        for (const auto& nu : interlacings(mu, d)) {
          double s = 0.0;
          for (const auto& c : addable_corners(mu, d)) {
            const auto x = wigner_weight(mu, Partition(nu), c.row, d);
            EXPECT_GE(x.w, -1e-12);
            s += x.w;
          }
          EXPECT_NEAR(s, 1.0, 1e-12) << mu << " d=" << d;
        }
  EXPECT_THROW(wigner_weight(Partition({2}), Partition({3}), 1, 2), std::invalid_argument);
}

TEST(WignerWeights, ProjectedSpectrum) {
  for (const auto& [d, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}, std::pair{2, 5}})
    for (const auto& l : enumerate_partitions(n, d)) {
      const auto compressed = compress_first_site(young_projector(l, d, n));
      Eigen::SelfAdjointEigenSolver<MatrixXc> es(compressed.matrix, Eigen::EigenvaluesOnly);
      const auto closed = projected_spectrum(l, d, n);
      ASSERT_EQ(closed.size(), static_cast<std::size_t>(es.eigenvalues().size())) << l;
      for (std::size_t i = 0; i < closed.size(); ++i) EXPECT_NEAR(closed[i], es.eigenvalues()(i), 1e-10) << l;
    }
}

TEST(Semisep, ClosedFormMatchesContraction) {
  CounterRng rng(5);
  for (const auto& [d, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}, std::pair{3, 4}, std::pair{4, 4},
                             std::pair{2, 5}, std::pair{3, 5}}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto w = make_witness(n, d, random_row(enumerate_partitions(n).size(), rng));
      const double oracle = last_site_minimum(w);
      const auto closed = alpha_semisep_closed(w);
      EXPECT_NEAR(closed.value, oracle, 1e-9) << "d=" << d << " n=" << n;
      const auto numeric = alpha_semisep_numeric(w);
      EXPECT_NEAR(numeric.value, oracle, 1e-9);
      ASSERT_TRUE(numeric.state.has_value());
      EXPECT_NEAR(expectation(witness_operator(w), *numeric.state), oracle, 1e-9);
      EXPECT_NEAR(alpha_semisep(w).value, oracle, 1e-9);
    }
  }
}

TEST(Tripartite, ClosedFormsMatchSeesaw) {
  CounterRng rng(9);
  SeesawOptions opt;
  opt.restarts = 30;
  for (int d = 2; d <= 3; ++d)
    for (int trial = 0; trial < 6; ++trial) {
      const auto row = random_row(3, rng);
      const auto w = make_witness(3, d, row);
      const auto op = witness_operator(w);
      const double bisep = alpha_tripartite_bisep(row[0], row[1], row[2], d);
      const double full = alpha_tripartite_fullsep(row[0], row[1], row[2], d);
      EXPECT_NEAR(bisep, last_site_minimum(w), 1e-9);
      const auto s2 = seesaw_minimize(op, SeparabilityPartition({2, 1}), opt);
      const auto s3 = seesaw_minimize(op, SeparabilityPartition({1, 1, 1}), opt);
      EXPECT_GE(s2.value, bisep - 1e-9);
      EXPECT_NEAR(s2.value, bisep, 1e-6);
      EXPECT_GE(s3.value, full - 1e-9);
      EXPECT_NEAR(s3.value, full, 1e-6) << "d=" << d << " row " << row[0] << ' ' << row[1] << ' ' << row[2];
    }
}

TEST(Families, HookAndTwoRowAlphas) {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      const int d = std::min(n, 4);
      if (k + 2 > d) continue;
      const auto m = hook_family_witness(k, n, d);
      EXPECT_NEAR(alpha_semisep(m.witness).value, m.alpha, 1e-10) << "k=" << k << " n=" << n;
    }
  for (const auto& [a, b, k] : {std::tuple{3, 1, 1}, std::tuple{4, 1, 1}, std::tuple{4, 2, 1}, std::tuple{5, 0, 2}}) {
    const auto m = two_row_qubit_witness(a, b, k);
    EXPECT_NEAR(alpha_semisep(m.witness).value, m.alpha, 1e-10) << a << ',' << b << ',' << k;
  }
}
