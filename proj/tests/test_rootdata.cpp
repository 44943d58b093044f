#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bcjack/root_data.hpp"

using bcjack::LaurentPoly;
using bcjack::MultiplicityVector;
using bcjack::Rational;
using bcjack::RootLength;
using bcjack::Weight;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

long count_length(const bcjack::BCRootSystem& roots, RootLength length) {
  return std::count_if(roots.positive_roots.begin(),
                       roots.positive_roots.end(),
                       [&](const auto& r) { return r.length == length; });
}

}  // namespace

TEST_CASE("positive roots by length class") {
  const bcjack::BCRootSystem r2(2);
  CHECK(count_length(r2, RootLength::kShort) == 2);
  CHECK(count_length(r2, RootLength::kMedium) == 2);
  CHECK(count_length(r2, RootLength::kLong) == 2);

  const bcjack::BCRootSystem r3(3);
  CHECK(count_length(r3, RootLength::kShort) == 3);
  CHECK(count_length(r3, RootLength::kMedium) == 6);
  CHECK(count_length(r3, RootLength::kLong) == 3);
}

TEST_CASE("half multiplicities and rho") {
  const auto s = bcjack::half_multiplicities(3, 2);
  CHECK(s == MultiplicityVector{1, 1, frac(1, 2)});
  CHECK(bcjack::half_multiplicities(2, 2).p1 == 0);

  const auto rho = bcjack::rho_vector({1, 1, frac(1, 2)}, 2);
  REQUIRE(rho.size() == 2);
  CHECK(rho[0] == 2);
  CHECK(rho[1] == 1);
}

TEST_CASE("dominance and cones") {
  CHECK(bcjack::is_bc_dominant({2, 1}));
  CHECK(!bcjack::is_bc_dominant({1, 2}));
  CHECK(!bcjack::is_bc_dominant({1, -1}));
  CHECK(bcjack::is_gl_dominant({1, -1}));

  CHECK(bcjack::dominance_le({1, 1}, {2, 0}));
  CHECK(!bcjack::dominance_le({2, 0}, {1, 1}));
  CHECK(bcjack::dominance_le({1, 0}, {1, 1}));  // no total-sum equality

  CHECK(bcjack::lower_cone({2}) == std::vector<Weight>{{2}, {1}, {0}});
  CHECK(bcjack::lower_cone({1, 1}) ==
        std::vector<Weight>{{1, 1}, {1, 0}, {0, 0}});
  CHECK(bcjack::lower_cone({2, 1}) ==
        std::vector<Weight>{{2, 1}, {2, 0}, {1, 1}, {1, 0}, {0, 0}});

  // Linear extension: nothing appears before a weight that dominates it.
  const auto cone = bcjack::lower_cone({3, 2, 1});
  for (std::size_t i = 0; i < cone.size(); ++i)
    for (std::size_t j = i + 1; j < cone.size(); ++j)
      CHECK(!(bcjack::dominance_le(cone[i], cone[j]) && cone[i] != cone[j]));
}

TEST_CASE("weyl orbit and orbit sums") {
  CHECK(bcjack::weyl_orbit({1, 0}).size() == 4);
  CHECK(bcjack::weyl_orbit({1, 1}).size() == 4);
  CHECK(bcjack::weyl_orbit({0, 0}).size() == 1);

  const auto m10 = bcjack::orbit_sum({1, 0});
  CHECK(m10.term_count() == 4);
  CHECK(m10.coeff({2, 0}) == 1);
  CHECK(m10.coeff({-2, 0}) == 1);
  CHECK(m10.coeff({0, 2}) == 1);
  CHECK(m10.coeff({0, -2}) == 1);

  for (const auto& g : bcjack::weyl_generators(2))
    CHECK(bcjack::weyl_act(m10, g) == m10);
}

TEST_CASE("weyl action composes") {
  const auto gens = bcjack::weyl_generators(3);
  REQUIRE(gens.size() == 3);
  const auto f = bcjack::orbit_sum({2, 1, 0}) +
                 LaurentPoly::monomial(3, {1, 2, -1}, Rational(5));
  const auto w21 = bcjack::compose(gens[1], gens[0]);
  CHECK(bcjack::weyl_act(bcjack::weyl_act(f, gens[0]), gens[1]) ==
        bcjack::weyl_act(f, w21));
}

TEST_CASE("sinh product expansions") {
  const auto short1 = bcjack::weyl_denominator({1, 0, 0}, 1);
  CHECK(short1.term_count() == 2);
  CHECK(short1.coeff({1}) == frac(1, 2));
  CHECK(short1.coeff({-1}) == frac(-1, 2));

  const auto long1 = bcjack::weyl_denominator({0, 0, 1}, 1);
  CHECK(long1.coeff({2}) == frac(1, 2));
  CHECK(long1.coeff({-2}) == frac(-1, 2));

  CHECK(bcjack::weyl_denominator({0, 0, 0}, 2) ==
        LaurentPoly::constant(2, Rational(1)));

  CHECK_THROWS_AS(bcjack::weyl_denominator({-1, 0, 0}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(bcjack::weyl_denominator({frac(1, 2), 0, 0}, 1),
                  std::invalid_argument);
}

TEST_CASE("sign character of the sinh product") {
  const auto gens2 = bcjack::weyl_generators(2);
  const auto& swap12 = gens2[0];  // transposition
  const auto& flip = gens2[1];    // sign flip of the last coordinate

  CHECK(bcjack::weyl_sign_character(swap12, {0, 1, 0}) == -1);
  CHECK(bcjack::weyl_sign_character(swap12, {1, 0, 1}) == 1);
  CHECK(bcjack::weyl_sign_character(flip, {1, 0, 0}) == -1);
  CHECK(bcjack::weyl_sign_character(flip, {0, 0, 1}) == -1);
  CHECK(bcjack::weyl_sign_character(flip, {1, 0, 1}) == 1);
  CHECK(bcjack::weyl_sign_character(flip, {0, 1, 0}) == 1);

  // delta transforms by the character.
  for (int n = 1; n <= 2; ++n)
    for (const MultiplicityVector kappa :
         {MultiplicityVector{1, 0, 1}, MultiplicityVector{2, 1, 1}}) {
      const auto delta = bcjack::weyl_denominator(kappa, n);
      for (const auto& g : bcjack::weyl_generators(n)) {
        const int chi = bcjack::weyl_sign_character(g, kappa);
        CHECK(bcjack::weyl_act(delta, g) ==
              (chi == 1 ? delta : delta.scaled(-1)));
      }
    }
}
