#include "sparsetrig/stirling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sparsetrig {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt falling(int n, int l) {
  BigInt f = 1;
  for (int i = 0; i < l; ++i) f *= n - i;
  return f;
}

BigInt power(int base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log S2(n,k) for n <= kMaxGOrder by the same recursion as the exact table.
const std::vector<std::vector<double>>& log_table() {
  static const std::vector<std::vector<double>> table = [] {
    const double ninf = -std::numeric_limits<double>::infinity();
    const int N = kMaxGOrder;
    std::vector<std::vector<double>> t(static_cast<std::size_t>(N) + 1,
                                       std::vector<double>(static_cast<std::size_t>(N) / 2 + 2, ninf));
    t[0][0] = 0.0;
    for (int n = 2; n <= N; ++n) {
      for (int k = 1; 2 * k <= n; ++k) {
        double v = ninf;
        const double a = t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        const double b = t[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)];
        if (a != ninf) v = log_add(v, std::log(static_cast<double>(k)) + a);
        if (b != ninf) v = log_add(v, std::log(static_cast<double>(n - 1)) + b);
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = v;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

StirlingCache::StirlingCache(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("StirlingCache: max_n must be nonnegative");
  table_.assign(static_cast<std::size_t>(max_n) + 1, {});
  for (int n = 0; n <= max_n; ++n) {
    auto& row = table_[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) / 2 + 1, 0);
    if (n == 0) {
      row[0] = 1;
      continue;
    }
    for (int k = 1; 2 * k <= n; ++k) {
      BigInt v = 0;
      if (2 * k <= n - 1) v += k * table_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
      if (n >= 2) v += (n - 1) * table_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)];
      row[static_cast<std::size_t>(k)] = v;
    }
  }
}

const BigInt& StirlingCache::assoc(int n, int k) const {
  static const BigInt zero = 0;
  if (n < 0 || n > max_n_) throw std::out_of_range("StirlingCache: n outside the cached range");
  if (k < 0 || 2 * k > n) return zero;
  return table_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling2_assoc(int n, int k) {
  if (n < 0 || k < 0) return 0;
  return StirlingCache(n).assoc(n, k);
}

BigInt stirling2_assoc_explicit(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < 2 * k) return 0;
  BigInt sum = power(k, n);
  for (int j = 1; j <= k - 1; ++j) {
    BigInt inner = 0;
    for (int l = 0; l <= j; ++l) inner += binomial(j, l) * falling(n, l) * power(k - j, n - l);
    const BigInt term = binomial(k, j) * inner;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt k_factorial = 1;
  for (int i = 2; i <= k; ++i) k_factorial *= i;
  return sum / k_factorial;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt p_n(int n) {
  if (n < 0) throw std::invalid_argument("p_n: n must be nonnegative");
  const StirlingCache cache(n);
  BigInt sum = 0;
  for (int k = 0; 2 * k <= n; ++k) sum += cache.assoc(n, k);
  return sum;
}

BigInt bell(int n) {
  if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

std::vector<BigInt> F_poly(int n) {
  if (n < 1) throw std::invalid_argument("F_poly: n must be positive");
  const StirlingCache cache(n);
  std::vector<BigInt> coeffs;
  for (int k = 0; 2 * k <= n; ++k) coeffs.push_back(cache.assoc(n, k));
  return coeffs;
}

double F_value(int n, double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("F_value: theta must be positive");
  const auto coeffs = F_poly(n);
  double sum = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) sum = sum * theta + coeffs[k].convert_to<double>();
  return sum;
}

double G_value(int n, double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("G_value: theta must be positive");
  if (n < 1 || n > kMaxGOrder) throw std::invalid_argument("G_value: order outside [1, kMaxGOrder]");
  const auto& row = log_table()[static_cast<std::size_t>(n)];
  const double log_theta = std::log(theta);
  double acc = -std::numeric_limits<double>::infinity();
  for (int k = 1; 2 * k <= n; ++k) {
    acc = log_add(acc, row[static_cast<std::size_t>(k)] + (k - n) * log_theta);
  }
  return std::exp(acc);
}

}  // namespace sparsetrig
