#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sparsetrig/model.hpp"
#include "sparsetrig/oracles.hpp"
#include "sparsetrig/partitions.hpp"

using namespace sparsetrig;

namespace {

std::vector<FrequencyIndex> line(std::initializer_list<int> ks) {
  std::vector<FrequencyIndex> out;
  for (int k : ks) out.push_back({k});
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("C oracle golden values") {
  const auto T = line({0, 1, 2});
  CHECK(brute_force_C(parse_partition("{{1,2},{3,4}}"), T) == 12);
  CHECK(brute_force_C(parse_partition("{{1,3},{2,4}}"), T) == 4);
  CHECK(brute_force_C(parse_partition("{{1,2,3,4,5,6}}"), T) == 66);
}

TEST_CASE("C vanishes on a single frequency") {
  const auto T = line({5});
  for (int t = 1; t <= 3; ++t) {
    for (const auto& A : enumerate_P(6, t)) CHECK(brute_force_C(A, T) == 0);
  }
}

TEST_CASE("C deterministic bound and pattern agreement") {
  const std::vector<std::vector<FrequencyIndex>> sets = {line({0, 1, 2}), line({-4, 0, 7}), line({1, 2, 3, 4}),
                                                          {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (const auto& T : sets) {
    for (int two_n : {2, 4, 6}) {
      for (int t = 1; 2 * t <= two_n; ++t) {
        for (const auto& A : enumerate_P(two_n, t)) {
          const auto c = brute_force_C(A, T);
          CHECK(c <= ipow(T.size(), two_n - t + 1));
          CHECK(c == count_C_by_patterns(A, T));
        }
      }
    }
  }
}

TEST_CASE("C guard") {
  std::vector<FrequencyIndex> T;
  for (int k = 0; k < 20; ++k) T.push_back({k});
  CHECK_THROWS_AS(brute_force_C(parse_partition("{{1,2,3,4,5,6}}"), T), std::invalid_argument);
}

TEST_CASE("B oracle golden values") {
  CHECK(brute_force_B(parse_grid_partition("{{(1,1),(2,1)}}", 2, 1), line({1, 2, 3}), {0}) == 3);
  CHECK(brute_force_B(parse_grid_partition("{{(1,1),(1,2),(2,1),(2,2)}}", 2, 2), line({0, 1, 2}), {0}) == 6);
  CHECK(brute_force_B(parse_grid_partition("{{(1,1),(2,1)},{(1,2),(2,2)}}", 2, 2), line({0, 1, 2}), {0}) == 4);
}

TEST_CASE("B vanishes for one frequency outside the start value") {
  const auto T = line({3});
  for (const auto& flat : enumerate_P(4, 1)) CHECK(brute_force_B(to_grid(flat, 2, 2), T, {0}) == 0);
  for (const auto& flat : enumerate_P(4, 2)) CHECK(brute_force_B(to_grid(flat, 1, 4), T, {0}) == 0);
}

TEST_CASE("B deterministic bound") {
  const auto T = line({-1, 0, 2});
  for (const auto& [K, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{4, 1}, std::pair{1, 4}}) {
    for (int t = 1; 2 * t <= K * m; ++t) {
      for (const auto& flat : enumerate_P(K * m, t)) {
        CHECK(brute_force_B(to_grid(flat, K, m), T, {0}) <= ipow(T.size(), K * m - t));
      }
    }
  }
}

TEST_CASE("oracle argument checks") {
  const auto T = line({0, 1});
  CHECK_THROWS_AS(brute_force_B(parse_grid_partition("{{(1,1),(2,1)}}", 2, 1), T, {0, 0}), std::invalid_argument);
  CHECK(brute_force_C(parse_partition("{{1,2}}"), {}) == 0);
}
