#include "sparsetrig/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparsetrig {

namespace {

void check_guard(std::size_t base, int exponent, const char* who) {
  std::uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && total > kOracleTupleLimit / base) {
      throw std::invalid_argument(std::string(who) + ": |T|^size exceeds the exhaustive-search limit");
    }
    total *= base;
  }
}

int common_dim(std::span<const FrequencyIndex> T) {
  if (T.empty()) return 0;
  const int d = T.front().dim();
  for (const auto& k : T) {
    if (k.dim() != d) throw std::invalid_argument("oracle: indices of different dimensions");
  }
  return d;
}

// Advances a base-|T| odometer; returns false after the last tuple.
bool next_tuple(std::vector<std::size_t>& digits, std::size_t base) {
  for (auto& digit : digits) {
    if (++digit < base) return true;
    digit = 0;
  }
  return false;
}

bool blocks_balanced(const Partition& A, const std::vector<const FrequencyIndex*>& k, int d) {
  const int n = A.n;
  for (const auto& block : A.blocks) {
    for (int c = 0; c < d; ++c) {
      long long sum = 0;
      for (int r : block) sum += (*k[static_cast<std::size_t>(r % n)])[c] - (*k[static_cast<std::size_t>(r - 1)])[c];
      if (sum != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t brute_force_C(const Partition& A, std::span<const FrequencyIndex> T) {
  validate(A);
  const int n = A.n;
  if (T.empty() || n == 0) return 0;
  check_guard(T.size(), n, "brute_force_C");
  const int d = common_dim(T);
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<const FrequencyIndex*> k(static_cast<std::size_t>(n));
  std::uint64_t count = 0;
  do {
    bool distinct_neighbours = true;
    for (int j = 0; j < n && distinct_neighbours; ++j) {
      distinct_neighbours = digits[static_cast<std::size_t>(j)] != digits[static_cast<std::size_t>((j + 1) % n)];
    }
    if (!distinct_neighbours) continue;
    for (int j = 0; j < n; ++j) k[static_cast<std::size_t>(j)] = &T[digits[static_cast<std::size_t>(j)]];
    if (blocks_balanced(A, k, d)) ++count;
  } while (next_tuple(digits, T.size()));
  return count;
}

std::uint64_t count_C_by_patterns(const Partition& A, std::span<const FrequencyIndex> T) {
  validate(A);
  const int n = A.n;
  if (T.empty() || n < 2) return 0;
  check_guard(T.size(), n, "count_C_by_patterns");
  const int d = common_dim(T);
  std::uint64_t count = 0;
  std::vector<const FrequencyIndex*> k(static_cast<std::size_t>(n));
  for (int s = 2; s <= n && static_cast<std::size_t>(s) <= T.size(); ++s) {
    for (const auto& B : enumerate_U(n, s)) {
      const auto labels = block_labels(B);
      // Injective assignment block -> element of T, enumerated as an odometer
      // with a distinctness filter.
      std::vector<std::size_t> value(static_cast<std::size_t>(s), 0);
      do {
        bool injective = true;
        for (int i = 0; i < s && injective; ++i) {
          for (int j = i + 1; j < s && injective; ++j) injective = value[static_cast<std::size_t>(i)] != value[static_cast<std::size_t>(j)];
        }
        if (!injective) continue;
        for (int e = 0; e < n; ++e) k[static_cast<std::size_t>(e)] = &T[value[static_cast<std::size_t>(labels[static_cast<std::size_t>(e)])]];
        if (blocks_balanced(A, k, d)) ++count;
      } while (next_tuple(value, T.size()));
    }
  }
  return count;
}

std::uint64_t brute_force_B(const GridPartition& A, std::span<const FrequencyIndex> T,
                            const FrequencyIndex& k0) {
  validate(A);
  const int K = A.K;
  const int m = A.m;
  const int cells = K * m;
  if (T.empty()) return 0;
  check_guard(T.size(), cells, "brute_force_B");
  const int d = common_dim(T);
  if (k0.dim() != d) throw std::invalid_argument("brute_force_B: k0 has the wrong dimension");
  const auto labels = block_labels(A);
  std::vector<std::size_t> digits(static_cast<std::size_t>(cells), 0);
  std::uint64_t count = 0;
  auto value = [&](int p, int r) -> const FrequencyIndex& {
    return r == 0 ? k0 : T[digits[static_cast<std::size_t>((p - 1) * m + (r - 1))]];
  };
  std::vector<long long> sums(static_cast<std::size_t>(A.size()) * d);
  do {
    bool ok = true;
    for (int p = 1; p <= K && ok; ++p) {
      for (int r = 1; r <= m && ok; ++r) ok = value(p, r) != value(p, r - 1);
    }
    if (!ok) continue;
    std::fill(sums.begin(), sums.end(), 0);
    for (int p = 1; p <= K; ++p) {
      const int sign = p % 2 == 0 ? 1 : -1;
      for (int r = 1; r <= m; ++r) {
        const auto block = static_cast<std::size_t>(labels[static_cast<std::size_t>((p - 1) * m + (r - 1))]);
        for (int c = 0; c < d; ++c) sums[block * d + c] += sign * (value(p, r)[c] - value(p, r - 1)[c]);
      }
    }
    for (long long v : sums) ok = ok && v == 0;
    if (ok) ++count;
  } while (next_tuple(digits, T.size()));
  return count;
}

}  // namespace sparsetrig
