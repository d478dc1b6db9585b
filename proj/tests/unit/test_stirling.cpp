#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "sparsetrig/stirling.hpp"

using namespace sparsetrig;

TEST_CASE("associated Stirling values") {
  CHECK(stirling2_assoc(6, 2) == 25);
  CHECK(stirling2_assoc(6, 3) == 15);
  CHECK(stirling2_assoc(12, 6) == 10395);
  CHECK(stirling2_assoc(0, 0) == 1);
  CHECK(stirling2_assoc(1, 1) == 0);
  CHECK(stirling2_assoc(7, 4) == 0);
  for (int n = 3; n <= 16; ++n) {
    CHECK(stirling2_assoc(n, 2) == (BigInt(1) << (n - 1)) - n - 1);
  }
}

TEST_CASE("recursion agrees with the explicit formula") {
  const StirlingCache cache(16);
  for (int n = 2; n <= 16; ++n) {
    for (int k = 1; 2 * k <= n; ++k) CHECK(cache.assoc(n, k) == stirling2_assoc_explicit(n, k));
  }
  CHECK(cache.assoc(16, 8) == 2027025);
}

TEST_CASE("F polynomials") {
  CHECK(F_poly(4) == std::vector<BigInt>{0, 1, 3});
  CHECK(F_poly(10) == std::vector<BigInt>{0, 1, 501, 6825, 9450, 945});
  CHECK(F_value(2, 1.0) == 1.0);
  CHECK(G_value(2, 1.0) == 1.0);
  for (int n = 1; n <= 8; ++n) {
    const auto F = F_poly(2 * n);
    REQUIRE(F.size() == static_cast<std::size_t>(n + 1));
    BigInt lead = 1;
    for (int j = 2 * n - 1; j > 1; j -= 2) lead *= j;
    CHECK(F.back() == lead);
  }
}

TEST_CASE("G values") {
  CHECK(G_value(4, 2.0) == doctest::Approx((2.0 + 3.0 * 4.0) / 16.0));
  CHECK(F_value(6, 0.5) == doctest::Approx(0.5 + 25 * 0.25 + 15 * 0.125));
  CHECK(G_value(600, 1e4) >= 0.0);
  CHECK(std::isfinite(G_value(600, 1e4)));
  const auto F = F_poly(60);
  boost::multiprecision::cpp_dec_float_50 exact = 0;
  for (std::size_t k = 1; k < F.size(); ++k) {
    exact += boost::multiprecision::cpp_dec_float_50(F[k]) * boost::multiprecision::pow(boost::multiprecision::cpp_dec_float_50(7), static_cast<int>(k) - 60);
  }
  CHECK(G_value(60, 7.0) == doctest::Approx(exact.convert_to<double>()).epsilon(1e-12));
  CHECK_THROWS_AS(G_value(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(F_value(4, -1.0), std::invalid_argument);
}

TEST_CASE("p_n and Bell numbers") {
  CHECK(p_n(2) == 1);
  CHECK(p_n(6) == 41);
  CHECK(p_n(16) == 1216070380);
  CHECK(bell(8) == 4140);
  CHECK(bell(16) == BigInt("10480142147"));
  CHECK(stirling2(5, 2) == 15);
}
