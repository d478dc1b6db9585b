#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sparsetrig/census.hpp"

namespace sparsetrig {

struct Thm1Params {
  std::int64_t M = 1;  // sparsity
  std::int64_t N = 1;  // samples
  double D = 1.0;      // (2q+1)^d
  int n = 1;
  double beta = 0.5;
  double kappa = 0.0;
  std::vector<int> K;  // K_1..K_n
};

struct Thm2Params {
  double ET = 1.0;  // expected support size
  std::int64_t N = 1;
  double D = 1.0;
  int n = 1;
  double alpha = 1.0;
  double beta = 0.5;
  double kappa = 0.0;
  std::vector<int> K;
};

struct BoundReport {
  int theorem = 1;
  /// Sum of the terms; 1 when the parameters are invalid. Never clamped.
  double failure_bound = 1.0;
  std::vector<std::pair<std::string, double>> terms;
  bool params_valid = false;
  std::string reason;  // why params_valid is false
  int n = 0;
  double beta = 0.0;
  double kappa = 0.0;
  double alpha = 0.0;  // theorem 2 only
  std::vector<int> K;
};

/// K_m = max(1, round(n/m)) with halves rounded up, m = 1..n.
std::vector<int> default_K(int n);
/// a = sum_m beta^{n/K_m}.
double a_value(int n, double beta, const std::vector<int>& K);
/// The kappa with kappa/(1-kappa) = ((1-a)/(1+a)) * scale^{-3/2}; scale is M
/// for theorem 1 and (alpha+1) E|T| for theorem 2.
double kappa_at_equality(double a, double scale);

/// D beta^{-2n} sum_m G_{2m K_m}(theta) + M kappa^{-2} G_{2n}(theta), theta = N/M.
BoundReport thm1_bound(const Thm1Params& params);

/// W(n,N,E|T|,D) from the census Q(2n,.,.,.).
double thm2_W(int n, std::int64_t N, double ET, double D, const QTable& Q2n);
/// Z(K,m,N,E|T|,D) from the census Q*(2K,m,.,.,.).
double thm2_Z(int K, int m, std::int64_t N, double ET, double D, const QTable& Qstar);

/// Computes censuses on first use and keeps them. Thread safe.
class CensusCache {
 public:
  explicit CensusCache(unsigned threads = 0) : threads_(threads) {}
  const QTable& Q(int n);
  const QTable& Qstar(int K, int m);

 private:
  unsigned threads_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<QTable>> q_;
  std::map<std::pair<int, int>, std::unique_ptr<QTable>> qstar_;
};

inline constexpr int kMaxThm2Order = 4;

/// kappa^{-2} W + beta^{-2n} D sum_m Z(K_m, m) + exp(-3 alpha^2/(6 + 2 alpha) E|T|).
/// Throws CapacityError for n > kMaxThm2Order or censuses beyond capacity.
BoundReport thm2_bound(const Thm2Params& params, CensusCache& censuses);

struct OptimizeOptions {
  std::vector<int> n_values;  // empty: {3..7} for theorem 1, {2,3,4} for theorem 2
  double beta_lo = 0.40;
  double beta_hi = 0.60;
  double beta_step = 0.01;
  /// Theorem 2 only; empty: 161 points log-spaced over [0.1, 1000].
  std::vector<double> alphas;
};

/// Grid search with kappa at equality; returns the smallest bound found.
BoundReport optimize_thm1(std::int64_t M, std::int64_t N, double D, const OptimizeOptions& options = {});
BoundReport optimize_thm2(double ET, std::int64_t N, double D, CensusCache& censuses,
                          const OptimizeOptions& options = {});

/// floor(beta^3 theta / 8).
int corollary_n_of_theta(double theta, double beta);

/// Smallest C on the grid {C_step, 2 C_step, ...} up to C_max such that the
/// optimized theorem 1 bound is <= eps at N = ceil(C M (ln D + ln(1/eps))).
/// Returns C_max + C_step when no grid point qualifies.
double empirical_C(std::int64_t M, double D, double eps, const OptimizeOptions& options,
                   double C_step = 0.5, double C_max = 100.0);

}  // namespace sparsetrig
