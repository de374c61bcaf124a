// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pqml/gamma.hpp"

using namespace pqml;

TEST_CASE("gamma at classical points") {
  CHECK(pqml::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(pqml::gamma(0.5) == doctest::Approx(1.772453850905516).epsilon(1e-14));
  CHECK(pqml::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // reflection branch
  CHECK(pqml::gamma(-0.5) == doctest::Approx(-3.544907701811032).epsilon(1e-13));
  CHECK(pqml::gamma(-1.5) == doctest::Approx(2.363271801207355).epsilon(1e-13));
}

TEST_CASE("gamma poles and overflow") {
  CHECK_THROWS_AS(pqml::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(pqml::gamma(-1.0), std::domain_error);
  CHECK_THROWS_AS(pqml::gamma(-42.0), std::domain_error);
  CHECK(std::isinf(pqml::gamma(180.0)));
  CHECK(std::isfinite(pqml::gamma(171.0)));
}

TEST_CASE("gamma functional equation") {
  for (double x : {0.1, 0.5, 1.3, 4.7, 10.2}) {
    double lhs = pqml::gamma(x + 1.0);
    CHECK(std::fabs(lhs - x * pqml::gamma(x)) <= 1e-12 * std::fabs(lhs));
  }
}

TEST_CASE("log_gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(3.178053830347946).epsilon(1e-14));
  CHECK(log_gamma(150.0) == doctest::Approx(std::lgamma(150.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("rgamma is total with zeros at the poles") {
  CHECK(rgamma(0.0) == 0.0);
  CHECK(rgamma(-2.0) == 0.0);
  CHECK(rgamma(-177.0) == 0.0);
  CHECK(rgamma(3.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rgamma(-0.5) == doctest::Approx(1.0 / pqml::gamma(-0.5)).epsilon(1e-13));
  CHECK(rgamma(200.0) == 0.0);  // 1/Gamma underflows, which is the honest tail
}

TEST_CASE("rgamma * gamma == 1 at non-pole points") {
  for (double x : {-3.7, -0.9, 0.2, 0.5, 1.0, 2.5, 10.0, 50.0, 140.0}) {
    CHECK(rgamma(x) * pqml::gamma(x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pochhammer basic values") {
  CHECK(pochhammer(0.7, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75).epsilon(1e-14));
  // Gamma-ratio branch for large n
  CHECK(pochhammer(1.5, 100) ==
        doctest::Approx(std::exp(std::lgamma(101.5) - std::lgamma(1.5))).epsilon(1e-11));
}

TEST_CASE("pochhammer addition property") {
  std::mt19937_64 rng(20240817u);
  auto u01 = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 40; ++i) {
    double a = 5.0 * u01();
    unsigned m = unsigned(rng() % 11), n = unsigned(rng() % 11);
    double lhs = pochhammer(a, m + n);
    double rhs = pochhammer(a, m) * pochhammer(a + m, n);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(std::fabs(lhs), 1e-300));
  }
}

TEST_CASE("sin_pi has exact integer zeros") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(-7.0) == 0.0);
  CHECK(sin_pi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sin_pi(1.5) == doctest::Approx(-1.0).epsilon(1e-15));
}
