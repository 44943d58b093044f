#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "bcjack/laurent.hpp"

using bcjack::Exponent;
using bcjack::LaurentPoly;
using bcjack::Rational;

namespace {

LaurentPoly x_power(int e, Rational c = 1) {
  return LaurentPoly::monomial(1, Exponent{e}, c);
}

}  // namespace

TEST_CASE("constants and term bookkeeping") {
  const auto zero = LaurentPoly(2);
  CHECK(zero.is_zero());
  CHECK(zero.term_count() == 0);
  CHECK(zero.constant_term() == 0);

  auto f = LaurentPoly::constant(2, Rational(3));
  CHECK(f.constant_term() == 3);
  CHECK(f.coeff({0, 0}) == 3);
  CHECK(f.coeff({1, 0}) == 0);

  f.add_term({1, -2}, Rational(5));
  CHECK(f.term_count() == 2);
  f.add_term({1, -2}, Rational(-5));
  CHECK(f.term_count() == 1);  // exact cancellation removes the term
}

TEST_CASE("ring operations") {
  const auto x = x_power(1);
  const auto xinv = x_power(-1);
  const auto sum = x + xinv;
  const auto square = sum * sum;
  CHECK(square.coeff({2}) == 1);
  CHECK(square.coeff({0}) == 2);
  CHECK(square.coeff({-2}) == 1);
  CHECK(square.term_count() == 3);

  CHECK((square - square).is_zero());
  CHECK((-sum) + sum == LaurentPoly(1));
  CHECK(sum.scaled(Rational(2)).coeff({1}) == 2);

  const auto half = sum.scaled(Rational(1) / Rational(2));
  CHECK(half.coeff({-1}) == Rational(1) / Rational(2));
}

TEST_CASE("directional derivative acts by exponent pairing") {
  auto f = LaurentPoly::monomial(2, {2, -1}, Rational(3));
  f.add_term({0, 0}, Rational(7));
  const auto df = f.directional_derivative({1, 1});
  CHECK(df.coeff({2, -1}) == 3);  // (2 - 1) * 3
  CHECK(df.coeff({0, 0}) == 0);
  CHECK(df.term_count() == 1);
}

TEST_CASE("variable negation flips odd exponents") {
  auto f = x_power(1) + x_power(2);
  const auto g = f.negate_variable(0);
  CHECK(g.coeff({1}) == -1);
  CHECK(g.coeff({2}) == 1);
  CHECK(g.negate_variable(0) == f);
}

TEST_CASE("evaluation") {
  const auto f = x_power(1) + x_power(-1);
  const auto value = f.evaluate({std::complex<double>(2.0, 0.0)});
  CHECK(value.real() == doctest::Approx(2.5));
  CHECK(value.imag() == doctest::Approx(0.0));
}

TEST_CASE("exact division recovers factors") {
  const auto g = x_power(1) + LaurentPoly::constant(1, Rational(3)) +
                 x_power(-1);
  const auto f = (x_power(2) - LaurentPoly::constant(1, Rational(1))) * g;
  CHECK(bcjack::exact_div(f, g) ==
        x_power(2) - LaurentPoly::constant(1, Rational(1)));
  CHECK(bcjack::exact_div(f, x_power(2) -
                                 LaurentPoly::constant(1, Rational(1))) == g);

  // Monomial units never obstruct: dividing by 2 u^{-3} rescales.
  const auto unit = x_power(-3, Rational(2));
  const auto q = bcjack::exact_div(f, unit);
  CHECK(q * unit == f);
}

TEST_CASE("non-exact division reports the remainder") {
  const auto f = x_power(2) + LaurentPoly::constant(1, Rational(1));
  const auto g = x_power(1) + LaurentPoly::constant(1, Rational(1));
  CHECK_THROWS_AS(bcjack::exact_div(f, g), bcjack::NonExactDivision);
  try {
    bcjack::exact_div(f, g);
  } catch (const bcjack::NonExactDivision& e) {
    CHECK(!e.remainder.is_zero());
  }
}

TEST_CASE("multivariate division") {
  const auto u = LaurentPoly::monomial(2, {2, 0}, Rational(1));
  const auto v = LaurentPoly::monomial(2, {0, 2}, Rational(1));
  const auto one = LaurentPoly::constant(2, Rational(1));
  const auto f = (u - one) * (v - one) * (u * v - one);
  const auto d = (u - one) * (v - one);
  CHECK(bcjack::exact_div(f, d) == u * v - one);
}
