#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pw {

/// Integer partition lambda of n: strictly positive, non-increasing parts.
/// Stored without trailing zeros; use padded() at d-length API boundaries.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are stripped. Throws std::invalid_argument when the parts
  /// are negative, increasing, or contain an interior zero.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// Row i (0-based); zero past the last row.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  std::vector<int> padded(int d) const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "(2,1,1)", "2,1,1" or "[2,1,1]"; "1^3" style exponents are accepted.
Partition parse_partition(const std::string& text);

/// Conjugacy class of S_n labelled by its cycle lengths.
struct CycleType {
  Partition lengths;
  explicit CycleType(Partition p) : lengths(std::move(p)) {}
  int n() const { return lengths.size(); }
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Permutation of {0..n-1} in one-line notation: image[i] = pi(i).
class Permutation {
 public:
  explicit Permutation(int n);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  CycleType cycle_type() const;
  int cycle_count() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Builds a permutation from 1-based disjoint cycles, e.g. {{1,2,3}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

 private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int n);

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);

/// All lambda |- n with length <= d, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n, int d);
inline std::vector<Partition> enumerate_partitions(int n) { return enumerate_partitions(n, n); }

/// Position of lambda in enumerate_partitions(lambda.size()), or -1.
int partition_index(const std::vector<Partition>& list, const Partition& lambda);

/// Dimension of the S_n irrep (number of standard Young tableaux).
std::int64_t hook_dimension(const Partition& lambda);

/// Dimension of the U(d) irrep (number of semistandard tableaux with entries <= d).
/// Throws std::invalid_argument if length(lambda) > d.
std::int64_t weyl_dimension(const Partition& lambda, int d);

/// chi_lambda on the class with the given cycle type (Murnaghan-Nakayama).
/// Throws std::invalid_argument on mismatched sizes.
std::int64_t character(const Partition& lambda, const CycleType& cls);

/// Number of permutations with this cycle type.
std::int64_t class_size(const CycleType& cls);

struct Corner {
  int row;              // 1-based row index k
  Partition partition;  // shape after adding/removing the box
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Rows where a box can be added keeping length <= d (ascending rows).
std::vector<Corner> addable_corners(const Partition& mu, int d);

/// Rows whose last box can be removed (ascending rows).
std::vector<Corner> removable_corners(const Partition& lambda);

/// Interlacing pair mu (d parts) and nu (d-1 parts), both zero padded.
struct InterlacingPattern {
  std::vector<int> mu;
  std::vector<int> nu;
};

/// All nu with mu_1 >= nu_1 >= mu_2 >= ... >= nu_{d-1} >= mu_d.
/// nu is returned with d-1 entries (zero padded), lexicographically increasing.
std::vector<std::vector<int>> interlacings(const Partition& mu, int d);

bool interlaces(std::span<const int> nu, std::span<const int> mu_padded);

}  // namespace pw
