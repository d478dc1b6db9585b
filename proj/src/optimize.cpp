#include <cmath>
#include <limits>
#include <stdexcept>

#include "sparsetrig/bounds.hpp"

namespace sparsetrig {

namespace {

std::vector<double> beta_grid(const OptimizeOptions& o) {
  if (!(o.beta_step > 0.0) || o.beta_hi < o.beta_lo) throw std::invalid_argument("optimize: bad beta grid");
  std::vector<double> betas;
  const int steps = static_cast<int>(std::floor((o.beta_hi - o.beta_lo) / o.beta_step + 1e-9));
  for (int i = 0; i <= steps; ++i) betas.push_back(o.beta_lo + i * o.beta_step);
  return betas;
}

std::vector<double> alpha_grid(const OptimizeOptions& o) {
  if (!o.alphas.empty()) return o.alphas;
  std::vector<double> alphas;
  for (int i = 0; i <= 160; ++i) alphas.push_back(std::pow(10.0, -1.0 + 4.0 * i / 160.0));
  return alphas;
}

std::vector<int> n_grid(const OptimizeOptions& o, int theorem) {
  if (!o.n_values.empty()) return o.n_values;
  if (theorem == 1) return {3, 4, 5, 6, 7};
  return {2, 3, 4};
}

BoundReport no_valid(int theorem) {
  BoundReport r;
  r.theorem = theorem;
  r.reason = "no valid parameter choice on the search grid";
  return r;
}

}  // namespace

BoundReport optimize_thm1(std::int64_t M, std::int64_t N, double D, const OptimizeOptions& options) {
  BoundReport best = no_valid(1);
  double best_value = std::numeric_limits<double>::infinity();
  for (int n : n_grid(options, 1)) {
    const auto K = default_K(n);
    for (double beta : beta_grid(options)) {
      const double a = a_value(n, beta, K);
      if (!(a < 1.0)) continue;
      Thm1Params p{M, N, D, n, beta, kappa_at_equality(a, static_cast<double>(M)), K};
      BoundReport r = thm1_bound(p);
      if (r.params_valid && r.failure_bound < best_value) {
        best_value = r.failure_bound;
        best = std::move(r);
      }
    }
  }
  return best;
}

BoundReport optimize_thm2(double ET, std::int64_t N, double D, CensusCache& censuses,
                          const OptimizeOptions& options) {
  BoundReport best = no_valid(2);
  double best_value = std::numeric_limits<double>::infinity();
  const auto alphas = alpha_grid(options);
  for (int n : n_grid(options, 2)) {
    const auto K = default_K(n);
    for (double beta : beta_grid(options)) {
      const double a = a_value(n, beta, K);
      if (!(a < 1.0)) continue;
      for (double alpha : alphas) {
        Thm2Params p{ET, N, D, n, alpha, beta, kappa_at_equality(a, (alpha + 1.0) * ET), K};
        BoundReport r = thm2_bound(p, censuses);
        if (r.params_valid && r.failure_bound < best_value) {
          best_value = r.failure_bound;
          best = std::move(r);
        }
      }
    }
  }
  return best;
}

int corollary_n_of_theta(double theta, double beta) {
  if (!(theta > 0.0)) throw std::invalid_argument("corollary_n_of_theta: theta must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("corollary_n_of_theta: beta must lie in (0,1)");
  return static_cast<int>(std::floor(beta * beta * beta * theta / 8.0));
}

double empirical_C(std::int64_t M, double D, double eps, const OptimizeOptions& options, double C_step,
                   double C_max) {
  if (M < 1 || !(D >= 1.0) || !(eps > 0.0 && eps < 1.0) || !(C_step > 0.0)) {
    throw std::invalid_argument("empirical_C: invalid arguments");
  }
  const double scale = static_cast<double>(M) * (std::log(D) + std::log(1.0 / eps));
  const int steps = static_cast<int>(std::floor(C_max / C_step + 1e-9));
  for (int i = 1; i <= steps; ++i) {
    const double C = i * C_step;
    const auto N = static_cast<std::int64_t>(std::ceil(C * scale));
    const BoundReport r = optimize_thm1(M, std::max<std::int64_t>(N, 1), D, options);
    if (r.params_valid && r.failure_bound <= eps) return C;
  }
  return C_max + C_step;
}

}  // namespace sparsetrig
