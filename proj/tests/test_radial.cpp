#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bcjack/radial.hpp"

using bcjack::MultiplicityVector;
using bcjack::Rational;
using bcjack::TwistParams;
using bcjack::Weight;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

}  // namespace

TEST_CASE("potential wells") {
  // n = 1, r = (1, 1, 1/2): short term (1)(1)(1)/sinh^2 x, long term
  // (1/2)(-1/2)(4)/sinh^2 2x.
  const double x = 0.7;
  const double expected = 1.0 / std::pow(std::sinh(x), 2) -
                          1.0 / std::pow(std::sinh(2 * x), 2);
  CHECK(static_cast<double>(bcjack::cm_potential({x}, {1, 1, frac(1, 2)})) ==
        doctest::Approx(expected).epsilon(1e-12));

  // r2 = 1 makes the medium coefficient r2 (r2 - 1) vanish identically.
  const double only_long = -1.0 / std::pow(std::sinh(1.6), 2) -
                           1.0 / std::pow(std::sinh(1.0), 2);
  CHECK(static_cast<double>(
            bcjack::cm_potential({0.8, 0.5}, {0, 1, frac(1, 2)})) ==
        doctest::Approx(only_long).epsilon(1e-12));
}

TEST_CASE("sinh product value") {
  const double x = 0.9;
  const double expected = std::sinh(x) * std::sqrt(std::sinh(2 * x));
  CHECK(static_cast<double>(
            bcjack::weyl_denominator_value({x}, {1, 1, frac(1, 2)})) ==
        doctest::Approx(expected).epsilon(1e-12));

  const double pair = std::sinh(1.2 - 0.5) * std::sinh(1.2 + 0.5);
  CHECK(static_cast<double>(
            bcjack::weyl_denominator_value({1.2, 0.5}, {0, 1, 0})) ==
        doctest::Approx(pair).epsilon(1e-12));
}

TEST_CASE("additive constant") {
  CHECK(bcjack::cm_constant({2, 2, 0, 0, 0, 0}) == -10);
  CHECK(bcjack::cm_constant({3, 2, 1, 0, 1, 0}) == -16);
}

TEST_CASE("radial eigenvalue closed form") {
  // r = (0, 1, 1/2), rho_r = (3/2, 1/2): 2[(5/2)^2 + (3/2)^2] - 5 = 12.
  CHECK(bcjack::radial_casimir_eigenvalue({1, 1}, {2, 2, 0, 0, 0, 0}) == 12);
}

TEST_CASE("harish-chandra eigenvalues") {
  CHECK(bcjack::gl_casimir_eigenvalue({2, 1}, 1) == 3);
  CHECK(bcjack::gl_casimir_eigenvalue({2, 1}, 2) == 6);
  CHECK(bcjack::gl_casimir_eigenvalue({0, 0, 0}, 2) == 0);
  // (lambda, lambda + 2 rho) for lambda = (1, 0, -1), L = 3.
  CHECK(bcjack::gl_casimir_eigenvalue({1, 0, -1}, 2) == Rational(6));
}

TEST_CASE("finite differences track the analytic operator") {
  const MultiplicityVector r{1, 1, frac(1, 2)};
  const std::vector<bcjack::Real> x{1.1L};
  const auto f = [](const std::vector<bcjack::Real>& p) {
    return std::exp(0.8L * p[0]);
  };
  const double expected = static_cast<double>(
      0.64L * f(x) - bcjack::cm_potential(x, r) * f(x));
  const double got = static_cast<double>(bcjack::apply_cm_fd(f, x, r, 1e-4L));
  CHECK(std::fabs(got - expected) / std::fabs(expected) < 1e-6);
}

TEST_CASE("explicit and conjugated radial forms agree") {
  const TwistParams p{2, 2, 1, 0, 1, 0};
  const auto f = [](const std::vector<bcjack::Real>& x) {
    return std::exp(0.8L * x[0] + 0.45L * x[1]) +
           std::exp(0.3L * x[0] - 0.2L * x[1]);
  };
  std::mt19937_64 rng(555);
  for (const auto& x : bcjack::sample_chamber_points(2, 10, rng)) {
    const double a =
        static_cast<double>(bcjack::apply_radial_casimir_fd(f, x, p, 1e-4L));
    const double b = static_cast<double>(
        bcjack::conjugated_radial_casimir_fd(f, x, p, 1e-4L));
    CHECK(std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-9}) <
          1e-6);
  }
}

TEST_CASE("chamber samples stay away from the walls") {
  std::mt19937_64 rng(777);
  const auto points = bcjack::sample_chamber_points(2, 50, rng);
  REQUIRE(points.size() == 50);
  for (const auto& x : points) {
    CHECK(x.size() == 2);
    CHECK(x[1] >= 0.3 - 1e-12);            // short root
    CHECK(x[0] - x[1] >= 0.3 - 1e-12);     // difference root
    CHECK(x[0] + x[1] >= 0.3 - 1e-12);     // sum root
    CHECK(2 * x[1] >= 0.3 - 1e-12);        // long root
  }

  std::mt19937_64 again(777);
  const auto replay = bcjack::sample_chamber_points(2, 50, again);
  CHECK(replay == points);  // deterministic for a fixed seed
}
