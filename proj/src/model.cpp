#include "sparsetrig/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sparsetrig/rng.hpp"

namespace sparsetrig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

FrequencyGrid::FrequencyGrid(int q, int d) : q_(q), d_(d), size_(1) {
  if (q < 0) throw std::invalid_argument("FrequencyGrid: order q must be nonnegative");
  if (d < 1) throw std::invalid_argument("FrequencyGrid: dimension d must be positive");
  const std::int64_t side = 2 * static_cast<std::int64_t>(q) + 1;
  for (int i = 0; i < d; ++i) {
    if (size_ > std::numeric_limits<std::int64_t>::max() / side) {
      throw std::invalid_argument("FrequencyGrid: (2q+1)^d overflows 64 bits");
    }
    size_ *= side;
  }
}

bool FrequencyGrid::contains(const FrequencyIndex& k) const {
  if (k.dim() != d_) return false;
  for (int c : k.k) {
    if (c < -q_ || c > q_) return false;
  }
  return true;
}

std::int64_t FrequencyGrid::position(const FrequencyIndex& k) const {
  if (!contains(k)) throw std::out_of_range("FrequencyGrid: index outside [-q,q]^d");
  const std::int64_t side = 2 * static_cast<std::int64_t>(q_) + 1;
  std::int64_t pos = 0;
  for (int c : k.k) pos = pos * side + (c + q_);
  return pos;
}

FrequencyIndex FrequencyGrid::at(std::int64_t position) const {
  if (position < 0 || position >= size_) throw std::out_of_range("FrequencyGrid: position out of range");
  const std::int64_t side = 2 * static_cast<std::int64_t>(q_) + 1;
  std::vector<int> k(static_cast<std::size_t>(d_));
  for (int i = d_ - 1; i >= 0; --i) {
    k[static_cast<std::size_t>(i)] = static_cast<int>(position % side) - q_;
    position /= side;
  }
  return FrequencyIndex(std::move(k));
}

std::vector<FrequencyIndex> FrequencyGrid::enumerate() const {
  std::vector<FrequencyIndex> all;
  all.reserve(static_cast<std::size_t>(size_));
  for (std::int64_t p = 0; p < size_; ++p) all.push_back(at(p));
  return all;
}

void SparseTrigPoly::set(const FrequencyIndex& k, Complex value) {
  if (!grid_.contains(k)) throw std::out_of_range("SparseTrigPoly: index outside the grid");
  if (value == Complex(0.0, 0.0)) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = value;
  }
}

Complex SparseTrigPoly::coefficient(const FrequencyIndex& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

std::vector<FrequencyIndex> SparseTrigPoly::support() const {
  std::vector<FrequencyIndex> out;
  out.reserve(coeffs_.size());
  for (const auto& [k, c] : coeffs_) out.push_back(k);
  return out;
}

Eigen::VectorXcd SparseTrigPoly::dense() const {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(grid_.size());
  for (const auto& [k, value] : coeffs_) c(grid_.position(k)) = value;
  return c;
}

double SparseTrigPoly::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [k, value] : coeffs_) m = std::max(m, std::abs(value));
  return m;
}

SamplingSet::SamplingSet(int dim, std::vector<std::vector<double>> points, std::uint64_t seed)
    : dim_(dim), points_(std::move(points)), seed_(seed) {
  if (dim < 1) throw std::invalid_argument("SamplingSet: dimension must be positive");
  for (const auto& x : points_) {
    if (static_cast<int>(x.size()) != dim) {
      throw std::invalid_argument("SamplingSet: point has wrong dimension");
    }
    for (double c : x) {
      if (!(c >= 0.0 && c < kTwoPi)) {
        throw std::invalid_argument("SamplingSet: coordinate outside [0, 2pi)");
      }
    }
  }
}

double expected_support_size(const SupportModel& model, const FrequencyGrid& grid) {
  if (const auto* fixed = std::get_if<FixedSize>(&model)) return static_cast<double>(fixed->M);
  return std::get<Bernoulli>(model).tau * static_cast<double>(grid.size());
}

Complex evaluate(const SparseTrigPoly& poly, std::span<const double> x) {
  Complex sum(0.0, 0.0);
  for (const auto& [k, c] : poly.coefficients()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) phase += k[i] * x[i];
    sum += c * std::polar(1.0, phase);
  }
  return sum;
}

Eigen::VectorXcd sample_values(const SparseTrigPoly& poly, const SamplingSet& samples) {
  if (samples.dim() != poly.grid().dim()) {
    throw std::invalid_argument("sample_values: dimension mismatch");
  }
  Eigen::VectorXcd b(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t j = 0; j < samples.size(); ++j) {
    b(static_cast<Eigen::Index>(j)) = evaluate(poly, samples.point(j));
  }
  return b;
}

SamplingSet draw_sampling_set(const FrequencyGrid& grid, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("draw_sampling_set: N must be at least 1");
  Engine engine = make_engine(seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  std::vector<std::vector<double>> points(count, std::vector<double>(static_cast<std::size_t>(grid.dim())));
  for (auto& x : points) {
    for (double& c : x) {
      // uniform_real_distribution may round up to the right endpoint.
      do {
        c = uniform(engine);
      } while (c >= kTwoPi);
    }
  }
  return SamplingSet(grid.dim(), std::move(points), seed);
}

std::vector<FrequencyIndex> draw_support(const FrequencyGrid& grid, const SupportModel& model,
                                         std::uint64_t seed) {
  Engine engine = make_engine(seed);
  std::vector<std::int64_t> chosen;
  if (const auto* fixed = std::get_if<FixedSize>(&model)) {
    if (fixed->M < 0 || fixed->M > grid.size()) {
      throw std::invalid_argument("draw_support: FixedSize requires 0 <= M <= D");
    }
    // Fisher-Yates over the full enumeration; the first M entries are the support.
    std::vector<std::int64_t> perm(static_cast<std::size_t>(grid.size()));
    for (std::int64_t i = 0; i < grid.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
    for (std::int64_t i = grid.size() - 1; i > 0; --i) {
      std::uniform_int_distribution<std::int64_t> pick(0, i);
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(engine))]);
    }
    chosen.assign(perm.begin(), perm.begin() + fixed->M);
  } else {
    const double tau = std::get<Bernoulli>(model).tau;
    if (!(tau > 0.0 && tau < 1.0)) {
      throw std::invalid_argument("draw_support: Bernoulli requires 0 < tau < 1");
    }
    std::bernoulli_distribution coin(tau);
    for (std::int64_t i = 0; i < grid.size(); ++i) {
      if (coin(engine)) chosen.push_back(i);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<FrequencyIndex> support;
  support.reserve(chosen.size());
  for (std::int64_t p : chosen) support.push_back(grid.at(p));
  return support;
}

SparseTrigPoly draw_coefficients(const FrequencyGrid& grid,
                                 std::span<const FrequencyIndex> support, std::uint64_t seed) {
  Engine engine = make_engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SparseTrigPoly poly(grid);
  for (const auto& k : support) {
    const double re = normal(engine);
    const double im = normal(engine);
    poly.set(k, Complex(re, im));
  }
  return poly;
}

Eigen::MatrixXcd fourier_matrix(const SamplingSet& samples, std::span<const FrequencyIndex> indices) {
  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXcd F(rows, cols);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const auto x = samples.point(static_cast<std::size_t>(j));
    for (Eigen::Index col = 0; col < cols; ++col) {
      const auto& k = indices[static_cast<std::size_t>(col)];
      if (k.dim() != samples.dim()) throw std::invalid_argument("fourier_matrix: dimension mismatch");
      double phase = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) phase += k[i] * x[i];
      F(j, col) = std::polar(1.0, phase);
    }
  }
  return F;
}

}  // namespace sparsetrig
