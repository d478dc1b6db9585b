#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "sparsetrig/partitions.hpp"

namespace sparsetrig {

/// Raised when a request exceeds the sizes the census code accepts.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CensusKind { Q, QStar };

/// Rank census Q(n,t,s,R) or Q*(K,m,t,s,R), keyed by (t,s,R).
struct QTable {
  CensusKind kind = CensusKind::Q;
  int n = 0;  // Q: ground set size; Q*: K*m
  int K = 0;
  int m = 0;
  std::map<std::tuple<int, int, int>, std::uint64_t> entries;

  std::uint64_t at(int t, int s, int R) const;
  /// Adds with overflow checking (throws std::overflow_error).
  void add(int t, int s, int R, std::uint64_t count);
  std::uint64_t total() const;
  std::uint64_t row_total(int t, int s) const;
};

struct CensusOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// When nonempty, only these (t,s) pairs are counted.
  std::set<std::pair<int, int>> only;
};

/// Full census over P(n,t) x U(n,s). Even n in [2,10]; odd n throws
/// std::invalid_argument, larger n throws CapacityError.
QTable compute_Q(int n, const CensusOptions& options = {});
/// Full census over P(Km,t) x U*(K,m,s) for K*m <= 8.
QTable compute_Q_star(int K, int m, const CensusOptions& options = {});

inline constexpr int kMaxCensusN = 10;
inline constexpr int kMaxCensusStarCells = 8;

/// CSV `t,s,R,count` over the full index box: t in [1, floor(n/2)], s from 2
/// (1 for Q* with m = 1) to n, R in [0, t-1] for Q and [0, t] for Q*.
std::string emit_qtable_csv(const QTable& table);
/// Reads the CSV back; kind and sizes are supplied by the caller.
QTable parse_qtable_csv(std::string_view csv, CensusKind kind, int n, int K = 0, int m = 0);

struct ClosedFormCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Checks the closed forms and vanishing statements for Q(two_n, ...):
/// Q(2n,1,s,0) = |U(2n,s)|, the two Q(2n,2,2,.) formulas, and the zero
/// entries for (t = n, 2s >= 3n), (s = 2n, t != 1), (s = 2n-1, 3t >= 2n).
std::vector<ClosedFormCheck> closed_form_checks(int two_n);

/// For fixed A in P(n,t): number of B in U(n,s) with rank M(A,B) = R, keyed
/// by (s,R). Throws std::invalid_argument if A has a singleton block.
std::map<std::pair<int, int>, std::uint64_t> expected_C_polynomial(const Partition& A);

}  // namespace sparsetrig
