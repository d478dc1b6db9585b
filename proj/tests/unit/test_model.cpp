#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "sparsetrig/model.hpp"
#include "sparsetrig/rng.hpp"

using namespace sparsetrig;

TEST_CASE("grid size and enumeration round trip") {
  const FrequencyGrid grid(2, 3);
  CHECK(grid.size() == 125);
  const auto all = grid.enumerate();
  REQUIRE(all.size() == 125);
  CHECK(all.front() == FrequencyIndex{-2, -2, -2});
  CHECK(all[1] == FrequencyIndex{-2, -2, -1});
  CHECK(all.back() == FrequencyIndex{2, 2, 2});
  for (std::int64_t p = 0; p < grid.size(); ++p) {
    CHECK(grid.position(grid.at(p)) == p);
    CHECK(all[static_cast<std::size_t>(p)] == grid.at(p));
  }
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("grid rejects invalid or overflowing sizes") {
  CHECK_THROWS_AS(FrequencyGrid(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyGrid(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyGrid(1000, 10), std::invalid_argument);
  CHECK(FrequencyGrid(0, 4).size() == 1);
}

TEST_CASE("evaluate") {
  const FrequencyGrid grid(3, 1);
  const std::vector<double> x = {1.234};
  SparseTrigPoly empty(grid);
  CHECK(evaluate(empty, x) == Complex(0.0, 0.0));

  SparseTrigPoly constant(grid);
  constant.set({0}, 1.0);
  CHECK(evaluate(constant, x) == Complex(1.0, 0.0));

  SparseTrigPoly one(grid);
  one.set({1}, 1.0);
  const std::vector<double> pi = {std::numbers::pi};
  const Complex v = evaluate(one, pi);
  CHECK(std::abs(v - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("coefficients outside the grid are rejected and zeros are not stored") {
  SparseTrigPoly poly(FrequencyGrid(2, 1));
  CHECK_THROWS_AS(poly.set({3}, 1.0), std::out_of_range);
  poly.set({1}, Complex(1.0, 2.0));
  CHECK(poly.support_size() == 1);
  poly.set({1}, 0.0);
  CHECK(poly.support_size() == 0);
}

TEST_CASE("sampling set is deterministic and in range") {
  const FrequencyGrid grid(3, 1);
  const SamplingSet a = draw_sampling_set(grid, 3, 42);
  const SamplingSet b = draw_sampling_set(grid, 3, 42);
  CHECK(a.points() == b.points());
  CHECK(a.seed() == 42);
  CHECK(draw_sampling_set(grid, 3, 43).points() != a.points());
  CHECK_THROWS_AS(draw_sampling_set(grid, 0, 1), std::invalid_argument);

  const SamplingSet one = draw_sampling_set(FrequencyGrid(1, 2), 1, 7);
  REQUIRE(one.size() == 1);
  for (double c : one.point(0)) {
    CHECK(c >= 0.0);
    CHECK(c < 2.0 * std::numbers::pi);
  }
}

TEST_CASE("sampling set mean is near pi") {
  const SamplingSet X = draw_sampling_set(FrequencyGrid(3, 1), 10000, 2024);
  double sum = 0.0;
  for (std::size_t j = 0; j < X.size(); ++j) sum += X.point(j)[0];
  const double mean = sum / static_cast<double>(X.size());
  CHECK(mean > std::numbers::pi - 0.1);
  CHECK(mean < std::numbers::pi + 0.1);
}

TEST_CASE("sampling set constructor validates points") {
  CHECK_THROWS_AS(SamplingSet(1, {{7.0}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(SamplingSet(2, {{1.0}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(SamplingSet(1, {{-0.1}}, 0), std::invalid_argument);
}

TEST_CASE("fixed size support") {
  const FrequencyGrid grid(2, 1);
  const auto full = draw_support(grid, FixedSize{5}, 3);
  CHECK(full == grid.enumerate());
  CHECK(draw_support(grid, FixedSize{0}, 3).empty());
  CHECK_THROWS_AS(draw_support(grid, FixedSize{6}, 3), std::invalid_argument);

  const FrequencyGrid big(40, 1);
  const auto T = draw_support(big, FixedSize{8}, 11);
  CHECK(T.size() == 8);
  CHECK(std::set<FrequencyIndex>(T.begin(), T.end()).size() == 8);
  CHECK(T == draw_support(big, FixedSize{8}, 11));
}

TEST_CASE("bernoulli support concentrates") {
  const FrequencyGrid grid(49, 2);
  REQUIRE(grid.size() == 9801);
  const double D = static_cast<double>(grid.size());
  const double sd = std::sqrt(D * 0.25);
  int inside = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto T = draw_support(grid, Bernoulli{0.5}, seed);
    if (std::abs(static_cast<double>(T.size()) - 0.5 * D) <= 3.0 * sd) ++inside;
  }
  CHECK(inside >= 990);
  CHECK(expected_support_size(Bernoulli{0.5}, grid) == doctest::Approx(0.5 * D));
  CHECK_THROWS_AS(draw_support(grid, Bernoulli{1.5}, 1), std::invalid_argument);
}

TEST_CASE("coefficients") {
  const FrequencyGrid grid(40, 1);
  CHECK(draw_coefficients(grid, {}, 5).support_size() == 0);
  const auto T = draw_support(grid, FixedSize{8}, 5);
  const SparseTrigPoly a = draw_coefficients(grid, T, 9);
  const SparseTrigPoly b = draw_coefficients(grid, T, 9);
  CHECK(a.support_size() == 8);
  CHECK(a.coefficients() == b.coefficients());

  const FrequencyGrid wide(50000, 1);
  std::vector<FrequencyIndex> many;
  for (int k = -50000; k < 50000; ++k) many.push_back({k});
  const SparseTrigPoly c = draw_coefficients(wide, many, 77);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& [k, v] : c.coefficients()) {
    sum += v.real();
    sum_sq += v.real() * v.real();
  }
  const double n = static_cast<double>(c.support_size());
  const double var = (sum_sq - sum * sum / n) / (n - 1.0);
  CHECK(var > 0.97);
  CHECK(var < 1.03);
}

TEST_CASE("fourier matrix") {
  const FrequencyGrid grid(1, 1);
  const auto all = grid.enumerate();
  const SamplingSet zero(1, {{0.0}}, 0);
  const auto F0 = fourier_matrix(zero, all);
  for (int c = 0; c < 3; ++c) CHECK(std::abs(F0(0, c) - Complex(1.0, 0.0)) < 1e-15);

  const SamplingSet quarter(1, {{std::numbers::pi / 2}}, 0);
  const auto F = fourier_matrix(quarter, all);
  CHECK(std::abs(F(0, 0) - Complex(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(F(0, 1) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(F(0, 2) - Complex(0.0, 1.0)) < 1e-12);

  const FrequencyGrid g2(3, 2);
  const SamplingSet X = draw_sampling_set(g2, 6, 4);
  const auto full = fourier_matrix(X, g2.enumerate());
  for (Eigen::Index j = 0; j < full.rows(); ++j) {
    for (Eigen::Index c = 0; c < full.cols(); ++c) CHECK(std::abs(std::abs(full(j, c)) - 1.0) < 1e-12);
  }
  const auto T = draw_support(g2, FixedSize{5}, 8);
  const auto FT = fourier_matrix(X, T);
  for (std::size_t c = 0; c < T.size(); ++c) {
    CHECK((FT.col(static_cast<Eigen::Index>(c)) - full.col(g2.position(T[c]))).norm() == 0.0);
  }
}

TEST_CASE("sample values agree with evaluate") {
  const FrequencyGrid grid(5, 1);
  const SparseTrigPoly poly = draw_coefficients(grid, draw_support(grid, FixedSize{3}, 1), 2);
  const SamplingSet X = draw_sampling_set(grid, 7, 3);
  const auto b = sample_values(poly, X);
  const Eigen::VectorXcd Fb = fourier_matrix(X, grid.enumerate()) * poly.dense();
  for (std::size_t j = 0; j < X.size(); ++j) {
    CHECK(std::abs(b(static_cast<Eigen::Index>(j)) - evaluate(poly, X.point(j))) < 1e-12);
    CHECK(std::abs(b(static_cast<Eigen::Index>(j)) - Fb(static_cast<Eigen::Index>(j))) < 1e-12);
  }
}

TEST_CASE("seed derivation separates roles and indices") {
  CHECK(derive_seed(1, StreamRole::Support) != derive_seed(1, StreamRole::Points));
  CHECK(derive_seed(1, StreamRole::Trial, 0) != derive_seed(1, StreamRole::Trial, 1));
  CHECK(derive_seed(1, StreamRole::Trial, 5) == derive_seed(1, StreamRole::Trial, 5));
}
