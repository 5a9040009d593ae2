#include "pw/projectors.hpp"

#include <gtest/gtest.h>

#include "pw/random.hpp"

using namespace pw;

namespace {

int sign_of(const Permutation& p) {
  int inv = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) inv += p(i) > p(j);
  return inv % 2 ? -1 : 1;
}

MatrixXc random_unitary(int d, CounterRng& rng) {
  MatrixXc g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<MatrixXc> qr(g);
  return qr.householderQ();
}

MatrixXc tensor_power(const MatrixXc& u, int n) {
  MatrixXc out = MatrixXc::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    MatrixXc next(out.rows() * u.rows(), out.cols() * u.cols());
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(a * u.rows(), b * u.cols(), u.rows(), u.cols()) = out(a, b) * u;
    out = next;
  }
  return out;
}

}  // namespace

class ProjectorSetTest : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(ProjectorSetTest, AlgebraicIdentities) {
  const auto [d, n] = GetParam();
  const auto set = build_projector_set(d, n);
  const auto r = check_projector_set(set);
  EXPECT_LT(r.orthogonality, 1e-10);
  EXPECT_LT(r.idempotence, 1e-10);
  EXPECT_LT(r.completeness, 1e-10);
  EXPECT_LT(r.trace, 1e-8);
  EXPECT_LT(r.hermiticity, 1e-12);
  for (const auto& l : set.partitions) {
    const auto* p = set.find(l);
    if (l.length() > d) {
      EXPECT_EQ(p, nullptr);
      continue;
    }
    ASSERT_NE(p, nullptr);
    EXPECT_NEAR(p->trace().real(), double(hook_dimension(l) * weyl_dimension(l, d)), 1e-9);
  }
}

TEST_P(ProjectorSetTest, CommutesWithUnitariesAndPermutations) {
  const auto [d, n] = GetParam();
  CounterRng rng(11, static_cast<std::uint64_t>(d * 10 + n));
  const MatrixXc u = tensor_power(random_unitary(d, rng), n);
  const auto perms = all_permutations(n);
  for (const auto& l : enumerate_partitions(n, d)) {
    const MatrixXc p = young_projector(l, d, n).matrix();
    EXPECT_LT(max_abs_diff(u * p, p * u), 1e-10) << l;
    const MatrixXc s = permutation_operator(perms[perms.size() / 2], d).matrix();
    EXPECT_LT(max_abs_diff(s * p, p * s), 1e-12) << l;
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, ProjectorSetTest,
                         ::testing::Values(std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4},
                                           std::pair{3, 4}, std::pair{2, 5}));

TEST(Projectors, SymmetrizerAndAntisymmetrizer) {
  for (int n = 2; n <= 4; ++n) {
    const int d = 3;
    const auto dim = ipow(d, n);
    MatrixXc sym = MatrixXc::Zero(dim, dim), anti = MatrixXc::Zero(dim, dim);
    for (const auto& pi : all_permutations(n)) {
      const MatrixXc e = permutation_operator(pi, d).matrix();
      sym += e;
      anti += double(sign_of(pi)) * e;
    }
    sym /= double(factorial(n));
    anti /= double(factorial(n));
    EXPECT_LT(max_abs_diff(young_projector(Partition({n}), d, n).matrix(), sym), 1e-12);
    if (n <= d)
      EXPECT_LT(max_abs_diff(young_projector(Partition(std::vector<int>(n, 1)), d, n).matrix(), anti), 1e-12);
    else
      EXPECT_LT(anti.cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Projectors, ExactIntegerForm) {
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 4; ++n)
      for (const auto& l : enumerate_partitions(n, d)) {
        const auto exact = young_projector_scaled_exact(l, d, n);
        const MatrixXc scaled = exact.cast<double>().cast<Complex>() / double(factorial(n));
        EXPECT_LT(max_abs_diff(scaled, young_projector(l, d, n).matrix()), 1e-12) << l;
      }
}

TEST(Projectors, ClassSumMatchesLinearCombination) {
  const int d = 3, n = 4;
  const auto parts = enumerate_partitions(n);
  const std::vector<double> c{0.5, -1.0, 2.0, 0.25, 7.0};
  const auto op = class_sum_operator(projector_class_function(parts, c, d), d, n);
  MatrixXc want = MatrixXc::Zero(op.dim(), op.dim());
  for (std::size_t i = 0; i < parts.size(); ++i) want += c[i] * young_projector(parts[i], d, n).matrix();
  EXPECT_LT(max_abs_diff(op.matrix(), want), 1e-11);
}

TEST(Projectors, CompressedBlocksMatchFirstSiteCompression) {
  const int d = 3, n = 4;
  const auto parts = enumerate_partitions(n);
  const std::vector<double> c{1.0, -2.0, 0.5, 3.0, 0.0};
  const auto f = projector_class_function(parts, c, d);
  const auto blocks = compress_class_sum(f, d, n);
  const auto full = compress_first_site(class_sum_operator(f, d, n));
  EXPECT_LT((blocks.dense() - full.matrix.real()).cwiseAbs().maxCoeff(), 1e-11);
  EXPECT_LT(full.matrix.imag().cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Projectors, SharedSetIsMemoized) {
  const auto a = shared_projectors(2, 3);
  const auto b = shared_projectors(2, 3);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(a->partitions.size(), 2u);  // (1,1,1) vanishes on qubits
}
