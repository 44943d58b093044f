#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcjack/ho_operator.hpp"

using bcjack::MultiplicityVector;
using bcjack::Rational;
using bcjack::Weight;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

const MultiplicityVector kGeometric{1, 1, frac(1, 2)};

}  // namespace

TEST_CASE("constants are annihilated") {
  const auto one = bcjack::orbit_sum({0, 0});
  CHECK(bcjack::apply_sutherland(one, kGeometric).is_zero());
  CHECK(bcjack::sutherland_eigenvalue({0, 0}, kGeometric) == 0);
}

TEST_CASE("rank-one action is triangular with the pinned diagonal") {
  // rho = r1/2 + r3 = 1, so E(nu) = 4 [(nu + 1)^2 - 1].
  CHECK(bcjack::sutherland_eigenvalue({1}, kGeometric) == 12);
  CHECK(bcjack::sutherland_eigenvalue({2}, kGeometric) == 32);

  const auto image = bcjack::apply_sutherland(bcjack::orbit_sum({1}),
                                              kGeometric);
  const auto decomp = bcjack::orbit_decompose(image);
  REQUIRE(decomp.size() == 2);
  CHECK(decomp.at({1}) == 12);
  CHECK(decomp.at({0}) == 8);  // forced by J = m_(1) + 2/3
}

TEST_CASE("series evaluation agrees with the rational form") {
  for (const Weight& nu :
       {Weight{1}, Weight{2}, Weight{2, 1}, Weight{2, 2}, Weight{3, 1}}) {
    const auto f = bcjack::orbit_sum(nu);
    for (const MultiplicityVector& r :
         {kGeometric, MultiplicityVector{frac(5, 3), frac(1, 3), frac(7, 2)},
          MultiplicityVector{frac(1, 2), 2, frac(3, 2)}}) {
      CHECK(bcjack::apply_sutherland(f, r) ==
            bcjack::apply_sutherland_series(f, r, nu));
    }
  }
}

TEST_CASE("orbit decomposition rejects non-invariant input") {
  const auto skew = bcjack::LaurentPoly::monomial(1, {2}, Rational(1));
  CHECK_THROWS_AS(bcjack::orbit_decompose(skew), std::invalid_argument);
  const auto odd = bcjack::LaurentPoly::monomial(1, {1}, Rational(1));
  CHECK_THROWS_AS(bcjack::orbit_decompose(odd), std::invalid_argument);
}

TEST_CASE("operator matrix over the cone of (2)") {
  const auto matrix = bcjack::operator_matrix({2}, kGeometric);
  REQUIRE(matrix.cone == std::vector<Weight>{{2}, {1}, {0}});
  CHECK(matrix.diag[0] == 32);
  CHECK(matrix.diag[1] == 12);
  CHECK(matrix.diag[2] == 0);
  CHECK(matrix.index_of({1}) == 1);

  for (const auto& entry : matrix.off_diag) {
    CHECK(entry.row < entry.col);  // strictly lower degree targets here
    CHECK(bcjack::dominance_le(matrix.cone[entry.col],
                               matrix.cone[entry.row]));
    CHECK(matrix.cone[entry.col] != matrix.cone[entry.row]);
  }
}

TEST_CASE("operator matrix in rank two, parallel rows agree with serial") {
  const auto serial = bcjack::operator_matrix({2, 1}, kGeometric, 1);
  const auto parallel = bcjack::operator_matrix({2, 1}, kGeometric, 4);
  CHECK(serial.cone == parallel.cone);
  CHECK(serial.diag == parallel.diag);
  REQUIRE(serial.off_diag.size() == parallel.off_diag.size());
  for (std::size_t i = 0; i < serial.off_diag.size(); ++i) {
    CHECK(serial.off_diag[i].row == parallel.off_diag[i].row);
    CHECK(serial.off_diag[i].col == parallel.off_diag[i].col);
    CHECK(serial.off_diag[i].value == parallel.off_diag[i].value);
  }
  for (std::size_t k = 0; k < serial.cone.size(); ++k)
    CHECK(serial.diag[k] ==
          bcjack::sutherland_eigenvalue(serial.cone[k], kGeometric));
}
