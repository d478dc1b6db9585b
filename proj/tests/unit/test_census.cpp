#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sparsetrig/census.hpp"
#include "sparsetrig/partitions.hpp"
#include "sparsetrig/stirling.hpp"

using namespace sparsetrig;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SPARSETRIG_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("Q(4) and Q(6) match the reference tables") {
  CHECK(compute_Q(4).entries == parse_qtable_csv(golden("Q4.csv"), CensusKind::Q, 4).entries);
  const QTable Q6 = compute_Q(6);
  const QTable reference = parse_qtable_csv(golden("Q6.csv"), CensusKind::Q, 6);
  for (const auto& [key, count] : reference.entries) {
    const auto [t, s, R] = key;
    CHECK(Q6.at(t, s, R) == count);
  }
  CHECK(Q6.at(2, 3, 0) == 46);
  CHECK(Q6.at(2, 3, 1) == 204);
}

TEST_CASE("Q(8) single entries") {
  CensusOptions options;
  options.only = {{4, 4}, {2, 2}, {3, 3}};
  const QTable Q8 = compute_Q(8, options);
  CHECK(Q8.at(4, 4, 3) == 10209);
  CHECK(Q8.at(2, 2, 1) == 85);
  CHECK(Q8.at(3, 3, 0) + Q8.at(3, 3, 1) + Q8.at(3, 3, 2) == 490 * 42);
}

TEST_CASE("Q(4,1,s,0) is |U(4,s)|") {
  const QTable Q4 = compute_Q(4);
  CHECK(Q4.at(1, 2, 0) == 1);
  CHECK(Q4.at(1, 3, 0) == 2);
  CHECK(Q4.at(1, 4, 0) == 1);
}

TEST_CASE("Q invariants") {
  for (int n : {4, 6, 8}) {
    const QTable Q = compute_Q(n);
    const auto p = p_n(n).convert_to<std::uint64_t>();
    CHECK(Q.total() == p * p);
    for (const auto& [key, count] : Q.entries) {
      const auto [t, s, R] = key;
      CHECK(R < std::min(s, t));
      CHECK(s >= 2);
      CHECK(2 * t <= n);
    }
    for (int t = 1; 2 * t <= n; ++t) {
      for (int s = 2; s <= n; ++s) {
        CHECK(Q.row_total(t, s) == enumerate_P(n, t).size() * enumerate_U(n, s).size());
      }
    }
  }
}

TEST_CASE("Q is independent of the thread count") {
  CensusOptions one;
  one.threads = 1;
  CensusOptions three;
  three.threads = 3;
  CHECK(compute_Q(6, one).entries == compute_Q(6, three).entries);
  CHECK(compute_Q_star(2, 2, one).entries == compute_Q_star(2, 2, three).entries);
}

TEST_CASE("Q star examples") {
  CHECK(compute_Q_star(8, 1).at(1, 2, 0) == 34);
  CHECK(compute_Q_star(8, 1).at(1, 2, 1) == 93);
  const QTable Q42 = compute_Q_star(4, 2);
  for (int t = 1; t <= 4; ++t) {
    for (int s = 1; s <= 8; ++s) {
      CHECK(Q42.row_total(t, s) == enumerate_P(8, t).size() * enumerate_U_star(4, 2, s).size());
    }
  }
}

TEST_CASE("Q star t = 1 rows match the reference tables") {
  for (const auto& [file, K, m] : {std::tuple{"Qstar_4_2.csv", 4, 2}, std::tuple{"Qstar_2_3.csv", 2, 3},
                                   std::tuple{"Qstar_2_4.csv", 2, 4}}) {
    const QTable reference = parse_qtable_csv(golden(file), CensusKind::QStar, 0, K, m);
    const QTable computed = compute_Q_star(K, m);
    for (const auto& [key, count] : reference.entries) {
      const auto [t, s, R] = key;
      if (t == 1) CHECK(computed.at(t, s, R) == count);
      CHECK(computed.row_total(t, s) == reference.row_total(t, s));
    }
  }
  CHECK(compute_Q_star(8, 1).entries == parse_qtable_csv(golden("Qstar_8_1.csv"), CensusKind::QStar, 0, 8, 1).entries);
}

TEST_CASE("capacity and argument errors") {
  CHECK_THROWS_AS(compute_Q(5), std::invalid_argument);
  CHECK_THROWS_AS(compute_Q(12), CapacityError);
  CHECK_THROWS_AS(compute_Q_star(3, 3), CapacityError);
  CHECK_THROWS_AS(compute_Q_star(0, 2), std::invalid_argument);
}

TEST_CASE("CSV round trip") {
  const QTable Q = compute_Q(6);
  const std::string csv = emit_qtable_csv(Q);
  CHECK(csv.rfind("t,s,R,count\n", 0) == 0);
  CHECK(parse_qtable_csv(csv, CensusKind::Q, 6).entries == Q.entries);
  CHECK_THROWS_AS(parse_qtable_csv("a,b\n1,2\n", CensusKind::Q, 6), std::invalid_argument);
}

TEST_CASE("closed forms") {
  for (int two_n : {4, 6, 8}) {
    for (const auto& c : closed_form_checks(two_n)) {
      INFO(two_n, " ", c.name, " ", c.detail);
      CHECK(c.pass);
    }
  }
  const QTable Q6 = compute_Q(6);
  CHECK(Q6.at(2, 2, 0) == 9);
  CensusOptions options;
  options.only = {{2, 2}, {2, 8}, {3, 8}, {4, 8}};
  const QTable Q8 = compute_Q(8, options);
  CHECK(Q8.at(2, 2, 1) == 128 - 8 - 35);
  CHECK(Q8.at(2, 8, 0) == 0);
  CHECK(Q8.at(3, 8, 0) == 0);
  CHECK(Q8.at(4, 8, 0) == 0);
}

TEST_CASE("expected C polynomial") {
  using Poly = std::map<std::pair<int, int>, std::uint64_t>;
  auto nonzero = [](Poly p) {
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    return p;
  };
  const Poly first = nonzero(expected_C_polynomial(parse_partition("{{1,2,3,5},{4,6}}")));
  CHECK(first == Poly{{{2, 1}, 1}, {{3, 1}, 10}, {{4, 1}, 20}, {{5, 1}, 9}, {{6, 1}, 1}});

  const Poly second = nonzero(expected_C_polynomial(parse_partition("{{1,2,3},{4,5,6}}")));
  CHECK(second == Poly{{{2, 1}, 1}, {{3, 0}, 2}, {{3, 1}, 8}, {{4, 0}, 4}, {{4, 1}, 16},
                       {{5, 0}, 1}, {{5, 1}, 8}, {{6, 1}, 1}});
  std::map<int, std::uint64_t> by_s;
  for (const auto& [key, count] : second) by_s[key.first] += count;
  CHECK(by_s == std::map<int, std::uint64_t>{{2, 1}, {3, 10}, {4, 20}, {5, 9}, {6, 1}});

  const Poly whole = nonzero(expected_C_polynomial(parse_partition("{{1,2,3,4,5,6}}")));
  for (const auto& [key, count] : whole) CHECK(key.second == 0);
  CHECK_THROWS_AS(expected_C_polynomial(parse_partition("{{1,2},{3}}")), std::invalid_argument);
}
