#include "pw/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int d) const {
  if (length() > d) throw std::invalid_argument("partition longer than padding length");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(d), 0);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
  for (int row : parts_)
    for (int c = 0; c < row; ++c) ++out[c];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto caret = token.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(token));
      } else {
        int value = std::stoi(token.substr(0, caret));
        int reps = std::stoi(token.substr(caret + 1));
        parts.insert(parts.end(), static_cast<std::size_t>(reps), value);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse partition '" + text + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') continue;
    if (ch == ',' || ch == '|') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------- permutations

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

CycleType Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return CycleType(Partition(std::move(lengths)));
}

int Permutation::cycle_count() const { return cycle_type().lengths.length(); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(a.images_.size());
  for (int i = 0; i < a.size(); ++i) out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      images.at(static_cast<std::size_t>(from)) = to;
    }
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------- counting

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial out of range");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("enumerate_partitions requires n >= 1, d >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, d, cur, out);
  return out;
}

int partition_index(const std::vector<Partition>& list, const Partition& lambda) {
  auto it = std::find(list.begin(), list.end(), lambda);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

std::int64_t hook_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::int64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

std::int64_t weyl_dimension(const Partition& lambda, int d) {
  if (lambda.length() > d) throw std::invalid_argument("weyl_dimension: length(lambda) > d");
  // Hook-content formula: prod (d + j - i) / hook(i, j).
  const Partition conj = lambda.conjugate();
  __int128 num = 1;
  __int128 den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      num *= d + j - i;
      den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return static_cast<std::int64_t>(num / den);
}

namespace {

// Murnaghan-Nakayama over beta-sets. beta is a strictly decreasing list of
// first-column hook lengths; removing a rim hook of length r moves one bead
// from b to b - r, with sign (-1)^(beads jumped over).
std::int64_t mn_rec(std::vector<int>& beta, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return 1;
  const int r = cycles[next];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int other : beta)
      if (other > target && other < b) ++jumped;
    std::vector<int> moved(beta);
    moved[i] = target;
    std::sort(moved.rbegin(), moved.rend());
    const std::int64_t sub = mn_rec(moved, cycles, next + 1);
    total += (jumped % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const CycleType& cls) {
  if (lambda.size() != cls.n())
    throw std::invalid_argument("character: partition and class sizes differ");
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  // Largest cycles first keeps the branching small.
  std::vector<int> cycles = cls.lengths.parts();
  return mn_rec(beta, cycles, 0);
}

std::int64_t class_size(const CycleType& cls) {
  // n! / z_mu with z_mu = prod_k k^{m_k} m_k!
  const auto& parts = cls.lengths.parts();
  std::int64_t z = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int m = 0; m < mult; ++m) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  return factorial(cls.n()) / z;
}

std::vector<Corner> addable_corners(const Partition& mu, int d) {
  std::vector<Corner> out;
  const int len = mu.length();
  for (int k = 0; k <= len && k < d; ++k) {
    if (k > 0 && mu[k - 1] == mu[k]) continue;
    std::vector<int> parts = mu.parts();
    if (k == len) {
      parts.push_back(1);
    } else {
      ++parts[k];
    }
    out.push_back({k + 1, Partition(std::move(parts))});
  }
  return out;
}

std::vector<Corner> removable_corners(const Partition& lambda) {
  std::vector<Corner> out;
  for (int k = 0; k < lambda.length(); ++k) {
    if (lambda[k] == lambda[k + 1]) continue;
    std::vector<int> parts = lambda.parts();
    --parts[k];
    out.push_back({k + 1, Partition(std::move(parts))});
  }
  return out;
}

bool interlaces(std::span<const int> nu, std::span<const int> mu) {
  if (mu.empty() || nu.size() + 1 != mu.size()) return false;
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] > mu[i] || nu[i] < mu[i + 1]) return false;
  return true;
}

std::vector<std::vector<int>> interlacings(const Partition& mu, int d) {
  const std::vector<int> m = mu.padded(d);
  std::vector<std::vector<int>> out;
  std::vector<int> nu(static_cast<std::size_t>(d - 1), 0);
  // Odometer over the independent ranges mu_{i+1} <= nu_i <= mu_i.
  for (int i = 0; i < d - 1; ++i) nu[i] = m[i + 1];
  while (true) {
    out.push_back(nu);
    int i = d - 2;
    while (i >= 0 && nu[i] == m[i]) {
      nu[i] = m[i + 1];
      --i;
    }
    if (i < 0) break;
    ++nu[i];
  }
  return out;
}

}  // namespace pw
