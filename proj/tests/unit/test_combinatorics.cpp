#include "pw/combinatorics.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <numeric>

using namespace pw;

namespace {

// Standard Young tableaux by removing the largest entry.
std::int64_t count_syt(std::vector<int> shape) {
  static std::map<std::vector<int>, std::int64_t> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const int next = i + 1 < shape.size() ? shape[i + 1] : 0;
    if (shape[i] > next) {
      auto smaller = shape;
      --smaller[i];
      total += count_syt(smaller);
    }
  }
  return memo[shape] = total;
}

// Semistandard tableaux with entries <= d: peel the horizontal strip of d's.
std::int64_t count_ssyt(const std::vector<int>& shape, int d) {
  if (shape.empty() || shape[0] == 0) return 1;
  if (d == 0) return 0;
  if (static_cast<int>(std::count_if(shape.begin(), shape.end(), [](int x) { return x > 0; })) > d) return 0;
  std::int64_t total = 0;
  std::vector<int> inner(shape.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == shape.size()) {
      total += count_ssyt(inner, d - 1);
      return;
    }
    const int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int v = lo; v <= shape[i]; ++v) {
      inner[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

int sign_of(const Permutation& p) {
  int inv = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) inv += p(i) > p(j);
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST(Partitions, Counts) {
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_partitions(n).size(), p[n - 1]) << n;
  EXPECT_EQ(enumerate_partitions(6, 2).size(), 4u);
}

TEST(Partitions, CanonicalOrder) {
  const auto list = enumerate_partitions(4);
  const std::vector<std::vector<int>> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  ASSERT_EQ(list.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(list[i].parts(), want[i]);
  EXPECT_EQ(partition_index(list, Partition({2, 2})), 2);
  EXPECT_EQ(partition_index(list, Partition({5})), -1);
}

TEST(Partitions, ParseAndValidate) {
  EXPECT_EQ(parse_partition("(2,1,1)"), Partition({2, 1, 1}));
  EXPECT_EQ(parse_partition("[3,1]"), Partition({3, 1}));
  EXPECT_EQ(parse_partition("1^3"), Partition({1, 1, 1}));
  EXPECT_EQ(Partition({2, 1, 0, 0}).parts(), (std::vector<int>{2, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0, 1}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({3, 1}).padded(3), (std::vector<int>{3, 1, 0}));
}

TEST(Partitions, HookDimensionMatchesTableauCount) {
  for (int n = 1; n <= 9; ++n) {
    std::int64_t squares = 0;
    for (const auto& l : enumerate_partitions(n)) {
      EXPECT_EQ(hook_dimension(l), count_syt(l.parts())) << l;
      squares += hook_dimension(l) * hook_dimension(l);
    }
    EXPECT_EQ(squares, factorial(n));
  }
}

TEST(Partitions, WeylDimensionMatchesTableauCount) {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 6; ++n) {
      std::int64_t total = 0;
      for (const auto& l : enumerate_partitions(n, d)) {
        EXPECT_EQ(weyl_dimension(l, d), count_ssyt(l.parts(), d)) << l << " d=" << d;
        total += hook_dimension(l) * weyl_dimension(l, d);
      }
      std::int64_t dn = 1;
      for (int i = 0; i < n; ++i) dn *= d;
      EXPECT_EQ(total, dn);
    }
  EXPECT_THROW(weyl_dimension(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST(Characters, IdentityAndSign) {
  for (int n = 1; n <= 7; ++n) {
    const CycleType id(Partition(std::vector<int>(n, 1)));
    for (const auto& l : enumerate_partitions(n)) EXPECT_EQ(character(l, id), hook_dimension(l));
    for (const auto& pi : all_permutations(n)) {
      EXPECT_EQ(character(Partition({n}), pi.cycle_type()), 1);
      EXPECT_EQ(character(Partition(std::vector<int>(n, 1)), pi.cycle_type()), sign_of(pi));
    }
  }
}

TEST(Characters, Orthogonality) {
  for (int n = 2; n <= 7; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        std::int64_t s = 0;
        for (const auto& c : parts) s += class_size(CycleType(c)) * character(a, CycleType(c)) * character(b, CycleType(c));
        EXPECT_EQ(s, a == b ? factorial(n) : 0) << a << ' ' << b;
      }
  }
}

TEST(Characters, ThreeByThree) {
  // rows (3), (2,1), (1,1,1); columns e, transposition, 3-cycle
  const std::vector<std::vector<int>> table{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
  const std::vector<Partition> classes{Partition({1, 1, 1}), Partition({2, 1}), Partition({3})};
  const auto rows = enumerate_partitions(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(character(rows[i], CycleType(classes[j])), table[i][j]);
  EXPECT_THROW(character(Partition({2, 1}), CycleType(Partition({2, 2}))), std::invalid_argument);
}

TEST(Permutations, GroupStructure) {
  const auto perms = all_permutations(4);
  ASSERT_EQ(perms.size(), 24u);
  std::map<Partition, std::int64_t> sizes;
  for (const auto& p : perms) {
    EXPECT_EQ(p * p.inverse(), Permutation(4));
    ++sizes[p.cycle_type().lengths];
  }
  for (const auto& [c, k] : sizes) EXPECT_EQ(class_size(CycleType(c)), k) << c;
  const auto c = Permutation::from_cycles(4, {{1, 2, 3}});
  EXPECT_EQ(c.images(), (std::vector<int>{1, 2, 0, 3}));
  EXPECT_EQ(c.cycle_count(), 2);
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  EXPECT_EQ((a * b)(1), a(b(1)));
  EXPECT_EQ(binomial(33, 5), 237336);
}

TEST(Corners, AddRemove) {
  const auto add = addable_corners(Partition({2, 1}), 3);
  ASSERT_EQ(add.size(), 3u);
  EXPECT_EQ(add[0].partition, Partition({3, 1}));
  EXPECT_EQ(add[1].partition, Partition({2, 2}));
  EXPECT_EQ(add[2].partition, Partition({2, 1, 1}));
  EXPECT_EQ(addable_corners(Partition({2, 1}), 2).size(), 2u);
  const auto rem = removable_corners(Partition({2, 2, 1}));
  ASSERT_EQ(rem.size(), 2u);
  EXPECT_EQ(rem[0].row, 2);
  EXPECT_EQ(rem[1].partition, Partition({2, 2}));
}

TEST(Interlacing, EnumerationMatchesPredicate) {
  const Partition mu({3, 1});
  const auto nus = interlacings(mu, 3);
  // nu_1 in [1,3], nu_2 in [0,1]
  EXPECT_EQ(nus.size(), 6u);
  const auto padded = mu.padded(3);
  for (const auto& nu : nus) EXPECT_TRUE(interlaces(nu, padded));
  const std::vector<int> bad{0, 0};
  EXPECT_FALSE(interlaces(bad, padded));
  EXPECT_TRUE(std::is_sorted(nus.begin(), nus.end()));
}
