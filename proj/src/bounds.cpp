#include "sparsetrig/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sparsetrig/stirling.hpp"

namespace sparsetrig {

namespace {

// Relative slack when checking the kappa condition, so that kappa computed
// at equality is accepted despite rounding.
constexpr double kKappaSlack = 1e-12;

// N!/(N-t)! * N^{-power}, accumulated as a product of ratios.
double scaled_falling(std::int64_t N, int t, int power) {
  const double Nd = static_cast<double>(N);
  double v = 1.0;
  for (int i = 0; i < t; ++i) v *= (Nd - i) / Nd;
  return v * std::pow(Nd, t - power);
}

std::string check_common(int n, double beta, double kappa, const std::vector<int>& K, double& a) {
  if (n < 1) return "n must be positive";
  if (!(beta > 0.0 && beta < 1.0)) return "beta must lie in (0,1)";
  if (!(kappa > 0.0 && kappa < 1.0)) return "kappa must lie in (0,1)";
  if (static_cast<int>(K.size()) != n) return "K must have n entries";
  for (int k : K) {
    if (k < 1) return "every K_m must be positive";
  }
  a = a_value(n, beta, K);
  if (!(a < 1.0)) return "a = sum beta^{n/K_m} must be below 1";
  return {};
}

bool kappa_ok(double kappa, double a, double scale) {
  const double lhs = kappa / (1.0 - kappa);
  const double rhs = (1.0 - a) / (1.0 + a) * std::pow(scale, -1.5);
  return lhs <= rhs * (1.0 + kKappaSlack);
}

BoundReport invalid(BoundReport r, std::string reason) {
  r.params_valid = false;
  r.failure_bound = 1.0;
  r.terms.clear();
  r.reason = std::move(reason);
  return r;
}

}  // namespace

std::vector<int> default_K(int n) {
  std::vector<int> K;
  for (int m = 1; m <= n; ++m) {
    const int rounded = static_cast<int>(std::floor(static_cast<double>(n) / m + 0.5));
    K.push_back(std::max(1, rounded));
  }
  return K;
}

double a_value(int n, double beta, const std::vector<int>& K) {
  double a = 0.0;
  for (int k : K) a += std::pow(beta, static_cast<double>(n) / k);
  return a;
}

double kappa_at_equality(double a, double scale) {
  const double r = (1.0 - a) / (1.0 + a) * std::pow(scale, -1.5);
  return r / (1.0 + r);
}

BoundReport thm1_bound(const Thm1Params& p) {
  BoundReport r;
  r.theorem = 1;
  r.n = p.n;
  r.beta = p.beta;
  r.kappa = p.kappa;
  r.alpha = std::nan("");
  r.K = p.K;
  if (p.M < 1 || p.N < 1 || !(p.D >= 1.0)) return invalid(r, "M, N and D must be at least 1");
  double a = 0.0;
  if (auto why = check_common(p.n, p.beta, p.kappa, p.K, a); !why.empty()) return invalid(r, why);
  if (!kappa_ok(p.kappa, a, static_cast<double>(p.M))) return invalid(r, "kappa violates the sparsity condition");
  for (int m = 1; m <= p.n; ++m) {
    if (2 * m * p.K[static_cast<std::size_t>(m - 1)] > kMaxGOrder) {
      return invalid(r, "order 2 m K_m exceeds the supported maximum");
    }
  }

  const double theta = static_cast<double>(p.N) / static_cast<double>(p.M);
  double sum_G = 0.0;
  for (int m = 1; m <= p.n; ++m) sum_G += G_value(2 * m * p.K[static_cast<std::size_t>(m - 1)], theta);
  const double term1 = p.D * std::pow(p.beta, -2.0 * p.n) * sum_G;
  const double term2 = static_cast<double>(p.M) * std::pow(p.kappa, -2.0) * G_value(2 * p.n, theta);
  r.terms = {{"term1", term1}, {"term2", term2}};
  r.failure_bound = term1 + term2;
  r.params_valid = true;
  return r;
}

double thm2_W(int n, std::int64_t N, double ET, double D, const QTable& Q2n) {
  if (Q2n.kind != CensusKind::Q || Q2n.n != 2 * n) throw std::invalid_argument("thm2_W: census must be Q(2n)");
  if (N < 1) throw std::invalid_argument("thm2_W: N must be positive");
  double total = 0.0;
  const int t_hi = static_cast<int>(std::min<std::int64_t>(n, N));
  for (int t = 1; t <= t_hi; ++t) {
    double inner = 0.0;
    for (int s = 2; s <= 2 * n; ++s) {
      double by_rank = 0.0;
      for (int R = 0; R <= std::min(t, s) - 1; ++R) {
        by_rank += static_cast<double>(Q2n.at(t, s, R)) * std::pow(D, -R);
      }
      inner += std::pow(ET, s) * by_rank;
    }
    total += scaled_falling(N, t, 2 * n) * inner;
  }
  return total;
}

double thm2_Z(int K, int m, std::int64_t N, double ET, double D, const QTable& Qstar) {
  if (Qstar.kind != CensusKind::QStar || Qstar.K != 2 * K || Qstar.m != m) {
    throw std::invalid_argument("thm2_Z: census must be Q*(2K,m)");
  }
  if (N < 1) throw std::invalid_argument("thm2_Z: N must be positive");
  const int cells = K * m;
  double total = 0.0;
  const int t_hi = static_cast<int>(std::min<std::int64_t>(cells, N));
  for (int t = 1; t <= t_hi; ++t) {
    double inner = 0.0;
    for (int s = 1; s <= 2 * cells; ++s) {
      double by_rank = 0.0;
      for (int R = 0; R <= std::min(t, s); ++R) {
        by_rank += static_cast<double>(Qstar.at(t, s, R)) * std::pow(D, -R);
      }
      inner += std::pow(ET, s) * by_rank;
    }
    total += scaled_falling(N, t, 2 * cells) * inner;
  }
  return total;
}

const QTable& CensusCache::Q(int n) {
  std::lock_guard lock(mutex_);
  auto& slot = q_[n];
  if (!slot) {
    CensusOptions options;
    options.threads = threads_;
    slot = std::make_unique<QTable>(compute_Q(n, options));
  }
  return *slot;
}

const QTable& CensusCache::Qstar(int K, int m) {
  std::lock_guard lock(mutex_);
  auto& slot = qstar_[{K, m}];
  if (!slot) {
    CensusOptions options;
    options.threads = threads_;
    slot = std::make_unique<QTable>(compute_Q_star(K, m, options));
  }
  return *slot;
}

BoundReport thm2_bound(const Thm2Params& p, CensusCache& censuses) {
  BoundReport r;
  r.theorem = 2;
  r.n = p.n;
  r.beta = p.beta;
  r.kappa = p.kappa;
  r.alpha = p.alpha;
  r.K = p.K;
  if (p.n > kMaxThm2Order) {
    throw CapacityError("thm2_bound: n = " + std::to_string(p.n) + " exceeds the supported maximum " +
                        std::to_string(kMaxThm2Order));
  }
  if (!(p.ET >= 1.0) || p.N < 1 || !(p.D >= 1.0)) return invalid(r, "E|T| >= 1, N >= 1 and D >= 1 required");
  if (!(p.alpha > 0.0)) return invalid(r, "alpha must be positive");
  double a = 0.0;
  if (auto why = check_common(p.n, p.beta, p.kappa, p.K, a); !why.empty()) return invalid(r, why);
  if (!kappa_ok(p.kappa, a, (p.alpha + 1.0) * p.ET)) return invalid(r, "kappa violates the sparsity condition");

  const double W = thm2_W(p.n, p.N, p.ET, p.D, censuses.Q(2 * p.n));
  double sum_Z = 0.0;
  for (int m = 1; m <= p.n; ++m) {
    const int K = p.K[static_cast<std::size_t>(m - 1)];
    sum_Z += thm2_Z(K, m, p.N, p.ET, p.D, censuses.Qstar(2 * K, m));
  }
  const double term1 = std::pow(p.kappa, -2.0) * W;
  const double term2 = std::pow(p.beta, -2.0 * p.n) * p.D * sum_Z;
  const double term3 = std::exp(-3.0 * p.alpha * p.alpha / (6.0 + 2.0 * p.alpha) * p.ET);
  r.terms = {{"term1", term1}, {"term2", term2}, {"term3", term3}};
  r.failure_bound = term1 + term2 + term3;
  r.params_valid = true;
  return r;
}

}  // namespace sparsetrig
