#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace sparsetrig {

using Complex = std::complex<double>;

/// A multi-index k in [-q,q]^d. Ordered lexicographically, which coincides
/// with the enumeration order of FrequencyGrid.
struct FrequencyIndex {
  std::vector<int> k;

  FrequencyIndex() = default;
  FrequencyIndex(std::initializer_list<int> components) : k(components) {}
  explicit FrequencyIndex(std::vector<int> components) : k(std::move(components)) {}

  int dim() const { return static_cast<int>(k.size()); }
  int operator[](std::size_t i) const { return k[i]; }

  auto operator<=>(const FrequencyIndex&) const = default;
  bool operator==(const FrequencyIndex&) const = default;
};

/// The index set [-q,q]^d of trigonometric polynomials of maximal order q.
class FrequencyGrid {
 public:
  /// Throws std::invalid_argument for q < 0, d < 1, or when (2q+1)^d does not
  /// fit in a signed 64-bit integer.
  FrequencyGrid(int q, int d);

  int order() const { return q_; }
  int dim() const { return d_; }
  /// D = (2q+1)^d.
  std::int64_t size() const { return size_; }

  bool contains(const FrequencyIndex& k) const;

  /// Position of k in the lexicographic enumeration (first coordinate most
  /// significant, each coordinate ascending from -q to q).
  std::int64_t position(const FrequencyIndex& k) const;
  FrequencyIndex at(std::int64_t position) const;

  /// All D indices in enumeration order.
  std::vector<FrequencyIndex> enumerate() const;

  bool operator==(const FrequencyGrid&) const = default;

 private:
  int q_;
  int d_;
  std::int64_t size_;
};

/// f(x) = sum_{k in T} c_k exp(i k.x) with only the nonzero c_k stored.
class SparseTrigPoly {
 public:
  explicit SparseTrigPoly(FrequencyGrid grid) : grid_(grid) {}

  const FrequencyGrid& grid() const { return grid_; }

  /// Stores c_k; a zero value removes k from the support. Throws if k lies
  /// outside the grid.
  void set(const FrequencyIndex& k, Complex value);
  Complex coefficient(const FrequencyIndex& k) const;

  const std::map<FrequencyIndex, Complex>& coefficients() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }
  /// Support in enumeration order.
  std::vector<FrequencyIndex> support() const;

  /// Coefficient vector of length D in grid enumeration order.
  Eigen::VectorXcd dense() const;
  double max_abs_coefficient() const;

 private:
  FrequencyGrid grid_;
  std::map<FrequencyIndex, Complex> coeffs_;
};

/// N sampling points in [0, 2pi)^d together with the seed that produced them.
class SamplingSet {
 public:
  /// Throws std::invalid_argument if a point has the wrong dimension or a
  /// coordinate outside [0, 2pi).
  SamplingSet(int dim, std::vector<std::vector<double>> points, std::uint64_t seed);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  std::span<const double> point(std::size_t j) const { return points_[j]; }
  const std::vector<std::vector<double>>& points() const { return points_; }
  std::uint64_t seed() const { return seed_; }

 private:
  int dim_;
  std::vector<std::vector<double>> points_;
  std::uint64_t seed_;
};

struct FixedSize {
  std::int64_t M;
};
struct Bernoulli {
  double tau;
};
/// Either |T| = M drawn as a permutation prefix, or P(k in T) = tau independently.
using SupportModel = std::variant<FixedSize, Bernoulli>;

/// E|T| under the model for the given grid.
double expected_support_size(const SupportModel& model, const FrequencyGrid& grid);

Complex evaluate(const SparseTrigPoly& poly, std::span<const double> x);

/// Values f(x_j), j = 1..N.
Eigen::VectorXcd sample_values(const SparseTrigPoly& poly, const SamplingSet& samples);

SamplingSet draw_sampling_set(const FrequencyGrid& grid, std::size_t count, std::uint64_t seed);

/// Returns the support sorted in enumeration order.
std::vector<FrequencyIndex> draw_support(const FrequencyGrid& grid, const SupportModel& model,
                                         std::uint64_t seed);

/// Real and imaginary parts i.i.d. standard normal for each k in support.
SparseTrigPoly draw_coefficients(const FrequencyGrid& grid,
                                 std::span<const FrequencyIndex> support, std::uint64_t seed);

/// Entry (j, col) = exp(i k_col . x_j).
Eigen::MatrixXcd fourier_matrix(const SamplingSet& samples, std::span<const FrequencyIndex> indices);

}  // namespace sparsetrig
