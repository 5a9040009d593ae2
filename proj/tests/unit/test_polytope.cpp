#include "pw/polytope.hpp"

#include <gtest/gtest.h>

#include "pw/combinatorics.hpp"

using namespace pw;

namespace {

// q_lambda of a product basis state from characters of its stabilizer in S_4.
QPoint oracle_coordinates(const std::array<int, 4>& digits) {
  QPoint q{};
  const auto parts = enumerate_partitions(4);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // <ii..| Pi_lambda |ii..> = (d_lambda / n!) sum_{pi in stabilizer} chi_lambda(pi)
    double s = 0.0;
    for (const auto& pi : all_permutations(4)) {
      bool fixes = true;
      for (int k = 0; k < 4; ++k) fixes = fixes && digits[pi(k)] == digits[k];
      if (fixes) s += double(character(parts[i], pi.cycle_type()));
    }
    q[i] = double(hook_dimension(parts[i])) * s / 24.0;
  }
  return q;
}

}  // namespace

TEST(Polytope, TablesVerify) {
  const auto r = verify_polytope_tables();
  EXPECT_TRUE(r.pass);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
  EXPECT_EQ(r.vertices.size(), 7u);
  EXPECT_EQ(r.facets.size(), 6u);
  for (const auto& v : fppt_vertex_table()) {
    double s = 0.0;
    for (double x : v.point()) s += x;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(Polytope, BasisStateCoordinates) {
  for (const auto& digits : {std::array{0, 0, 0, 0}, std::array{0, 0, 0, 1}, std::array{0, 0, 1, 1},
                             std::array{0, 0, 1, 2}, std::array{0, 1, 2, 3}, std::array{3, 1, 3, 0}}) {
    const auto got = basis_state_coordinates(digits);
    const auto want = oracle_coordinates(digits);
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
  }
  const auto all_distinct = basis_state_coordinates({0, 1, 2, 3});
  EXPECT_NEAR(all_distinct[1], 9.0 / 24.0, 1e-12);
}

TEST(Polytope, CuttingPlaneSingleCoordinates) {
  FpptCuttingPlane cp;
  // q_(4) is maximized by |0000>
  const auto top = cp.maximize({1, 0, 0, 0, 0});
  ASSERT_TRUE(top.converged);
  EXPECT_NEAR(top.value, 1.0, 1e-9);
  // every table vertex is feasible
  for (const auto& v : fppt_vertex_table()) EXPECT_GE(cp.min_pt_eigenvalue(v.point()), -1e-10) << v.label;
  // q_(1,1,1,1) cannot exceed its value at the last vertex over FPPT states
  const auto anti = cp.maximize({0, 0, 0, 0, 1});
  ASSERT_TRUE(anti.converged);
  EXPECT_NEAR(anti.value, 1.0 / 24.0, 1e-8);
  EXPECT_LE(anti.violation, 1e-9);
  EXPECT_GT(cp.cut_count(), 0u);
}

TEST(Polytope, ExtremePointSearchFindsTable) {
  const auto r = extreme_point_search(0, 120);
  EXPECT_TRUE(r.matches_table);
  EXPECT_EQ(r.clusters.size(), 7u);
  EXPECT_EQ(r.unconverged, 0);
  EXPECT_LE(r.max_violation, 1e-9);
}
