#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sparsetrig {

using BigInt = boost::multiprecision::cpp_int;

/// Exact associated Stirling numbers of the second kind S2(n,k) (partitions
/// of [n] into k blocks of size >= 2) for 0 <= n <= max_n, built once by
/// S2(n,k) = k S2(n-1,k) + (n-1) S2(n-2,k-1). Immutable after construction.
class StirlingCache {
 public:
  explicit StirlingCache(int max_n);

  int max_n() const { return max_n_; }
  /// Zero outside 0 <= k <= n/2. Throws std::out_of_range for n > max_n.
  const BigInt& assoc(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> table_;
};

/// S2(n,k) by the recursion (fresh cache sized to n).
BigInt stirling2_assoc(int n, int k);
/// S2(n,k) by the closed alternating-sum formula; zero when n < 2k.
BigInt stirling2_assoc_explicit(int n, int k);
/// Ordinary Stirling numbers of the second kind S(n,k).
BigInt stirling2(int n, int k);
/// p_n = sum_k S2(n,k).
BigInt p_n(int n);
/// Bell number b_n = sum_k S(n,k).
BigInt bell(int n);

/// Coefficients of F_n(y) = sum_k S2(n,k) y^k, index k = 0..floor(n/2).
std::vector<BigInt> F_poly(int n);

inline constexpr int kMaxGOrder = 600;

/// F_n(theta) from the exact coefficients, in double.
double F_value(int n, double theta);
/// G_n(theta) = theta^{-n} F_n(theta), evaluated in log space from a table of
/// log S2 so that large n neither overflows nor loses small terms.
/// Throws std::invalid_argument for theta <= 0, n < 1 or n > kMaxGOrder.
double G_value(int n, double theta);

}  // namespace sparsetrig
