#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bcjack/jack.hpp"

using bcjack::MultiplicityVector;
using bcjack::Rational;
using bcjack::Weight;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

const MultiplicityVector kGeometric{1, 1, frac(1, 2)};

}  // namespace

TEST_CASE("rank-one solution at the geometric point") {
  const auto jack = bcjack::jack_polynomial({1}, kGeometric);
  CHECK(jack.coeff({1}) == 1);
  CHECK(jack.coeff({0}) == frac(2, 3));
  CHECK(jack.eigenvalue == 12);

  const auto poly = jack.to_laurent();
  CHECK(poly.coeff({2}) == 1);
  CHECK(poly.coeff({-2}) == 1);
  CHECK(poly.coeff({0}) == frac(2, 3));
  CHECK(poly.term_count() == 3);
}

TEST_CASE("degenerate multiplicities") {
  // Vanishing short multiplicity decouples the constant term.
  CHECK(bcjack::jack_polynomial({1}, {0, 1, frac(1, 2)}).coeff({0}) == 0);

  // r2 = 0 separates variables: the two-variable constant coefficient is
  // twice the one-variable one.
  const auto pair = bcjack::jack_polynomial({1, 0}, {1, 0, frac(1, 2)});
  const auto single = bcjack::jack_polynomial({1}, {1, 0, frac(1, 2)});
  CHECK(pair.coeff({0, 0}) == frac(4, 3));
  CHECK(pair.coeff({0, 0}) == Rational(2) * single.coeff({0}));
}

TEST_CASE("exact eigen-relation in rank two") {
  for (const Weight& mu : {Weight{2, 1}, Weight{2, 2}, Weight{3, 0}}) {
    const auto jack = bcjack::jack_polynomial(mu, kGeometric);
    CHECK(jack.coeff(mu) == 1);
    const auto poly = jack.to_laurent();
    CHECK(bcjack::apply_sutherland(poly, kGeometric) ==
          poly.scaled(jack.eigenvalue));
  }
}

TEST_CASE("parallel solve matches serial") {
  const auto serial = bcjack::jack_polynomial({3, 1}, kGeometric, 1);
  const auto parallel = bcjack::jack_polynomial({3, 1}, kGeometric, 4);
  CHECK(serial.cone == parallel.cone);
  CHECK(serial.coeffs == parallel.coeffs);
  CHECK(serial.eigenvalue == parallel.eigenvalue);
}

TEST_CASE("eigenvalue collisions are reported, not patched") {
  // rho = -3/2 puts E(2) == E(1) == -8.
  CHECK_THROWS_AS(bcjack::jack_polynomial({2}, {-3, 1, 0}),
                  bcjack::EigenvalueCollision);
}

TEST_CASE("spherical restriction endpoints") {
  // mu = 0: the restriction is the sinh-product factor itself.
  const bcjack::TwistParams twist{2, 1, 0, 0, 1, 0};
  CHECK(bcjack::spherical_restriction({0}, twist) ==
        bcjack::weyl_denominator(bcjack::kappa_of(twist), 1));

  // kappa = 0: the restriction is the bare Jack polynomial at r = s.
  const bcjack::TwistParams plain{2, 1, 1, 1, 1, 0};
  CHECK(bcjack::kappa_of(plain) == MultiplicityVector{0, 0, 0});
  CHECK(bcjack::spherical_restriction({1}, plain) ==
        bcjack::jack_polynomial({1}, bcjack::jack_multiplicities(plain))
            .to_laurent());

  // Strict twist: kappa1 = -1, so the short-root factor divides out:
  // sinh(2x)/sinh(x) = u + 1/u at mu = 0.
  const bcjack::TwistParams strict{1, 1, 1, 0, 1, 0};
  auto cosh2 = bcjack::LaurentPoly::monomial(1, {1}, Rational(1));
  cosh2.add_term({-1}, Rational(1));
  CHECK(bcjack::spherical_restriction({0}, strict) == cosh2);

  // Rank 2 with all three sinh powers active: the quotient times the divisor
  // must reproduce the unsplit product exactly.
  const bcjack::TwistParams wide{4, 2, 3, 1, 4, 1};  // kappa = (-2, 1, 3)
  const auto psi = bcjack::spherical_restriction({2, 1}, wide);
  const auto jack =
      bcjack::jack_polynomial({2, 1}, bcjack::jack_multiplicities(wide))
          .to_laurent();
  CHECK(psi * bcjack::weyl_denominator({2, 0, 0}, 2) ==
        bcjack::weyl_denominator({0, 1, 3}, 2) * jack);
}

TEST_CASE("quadrature on pinned one-dimensional integrals") {
  const auto one = bcjack::LaurentPoly::constant(1, Rational(1));

  // integral of |sin 2y| over [0, pi] is 2; the kinks at 0 and pi/2 give a
  // second-order error -2 h^2 / 3, about -4.1e-5 at grid 400.
  const double sin2 =
      bcjack::inner_product_quadrature(one, one, {0, 0, frac(1, 2)}, 400);
  CHECK(std::fabs(sin2 - 2.0) < 1e-4);

  // integral of sin^2 y |sin 2y| over [0, pi] is exactly 1.
  const double norm0 =
      bcjack::inner_product_quadrature(one, one, kGeometric, 400);
  CHECK(std::fabs(norm0 - 1.0) < 1e-4);

  CHECK_THROWS_AS(bcjack::inner_product_quadrature(one, one, kGeometric, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      bcjack::inner_product_quadrature(one, one, {-1, 0, frac(1, 2)}, 8),
      std::invalid_argument);
}

TEST_CASE("rank-one orthogonality converges at second order") {
  const auto j0 = bcjack::jack_polynomial({0}, kGeometric).to_laurent();
  const auto j1 = bcjack::jack_polynomial({1}, kGeometric).to_laurent();

  const double norm1 =
      bcjack::inner_product_quadrature(j1, j1, kGeometric, 400);
  CHECK(std::fabs(norm1 - 8.0 / 9.0) < 1e-4);

  // The exact product vanishes; the kink at pi/2 leaves + 4 h^2 / 9.
  const double cross400 =
      bcjack::inner_product_quadrature(j1, j0, kGeometric, 400);
  const double cross4000 =
      bcjack::inner_product_quadrature(j1, j0, kGeometric, 4000);
  CHECK(cross400 > 0.0);
  CHECK(cross400 < 6e-5);
  CHECK(std::fabs(cross4000) < 6e-7);
  CHECK(cross400 / cross4000 == doctest::Approx(100.0).epsilon(0.25));
}

TEST_CASE("quadrature is independent of the job count") {
  const auto f = bcjack::jack_polynomial({1, 0}, kGeometric).to_laurent();
  const auto g = bcjack::jack_polynomial({1, 1}, kGeometric).to_laurent();
  const double serial = bcjack::inner_product_quadrature(f, g, kGeometric,
                                                         60, 1);
  const double parallel = bcjack::inner_product_quadrature(f, g, kGeometric,
                                                           60, 4);
  CHECK(serial == parallel);  // fixed-order slice reduction
}
