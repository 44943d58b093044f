#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "bcjack/lr.hpp"

using bcjack::Integer;
using bcjack::Partition;
using bcjack::TwistParams;
using bcjack::Weight;

TEST_CASE("lattice words") {
  CHECK(bcjack::is_lattice_word({1, 1, 2, 1, 2, 3}));
  CHECK(!bcjack::is_lattice_word({2}));
  CHECK(!bcjack::is_lattice_word({1, 2, 2}));
  CHECK(bcjack::is_lattice_word({}));
}

TEST_CASE("small tableau counts") {
  CHECK(bcjack::lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(bcjack::lr_coefficient({2, 1}, {1}, {2}) == 1);
  CHECK(bcjack::lr_coefficient({2}, {1}, {1}) == 1);
  CHECK(bcjack::lr_coefficient({1, 1, 1}, {1}, {1}) == 0);
  CHECK(bcjack::lr_coefficient({2, 1}, {2, 1}, {}) == 1);
  CHECK(bcjack::lr_coefficient({2, 1}, {3}, {1}) == 0);  // not contained

  // The classical first multiplicity-two example.
  CHECK(bcjack::lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
}

TEST_CASE("tableaux carry their row contents") {
  const auto tabs = bcjack::lr_tableaux({2, 1}, {1}, {1, 1});
  REQUIRE(tabs.size() == 1);
  const auto row0 = tabs[0].row_content(0, 2);
  const auto row1 = tabs[0].row_content(1, 2);
  CHECK(row0 == std::vector<int>{1, 0});
  CHECK(row1 == std::vector<int>{0, 1});
  CHECK(tabs[0].row_content(7, 2) == std::vector<int>{0, 0});
}

TEST_CASE("shift invariance of branching coefficients") {
  // len(lambda) == len(mu) + len(nu) lets the determinant twist cancel.
  CHECK(bcjack::lr_coefficient_shifted({1, 0, -1}, {0, 0}, {0}) == 1);
  CHECK(bcjack::lr_coefficient_shifted({1, 0, -1}, {1, -1}, {0}) == 1);
  CHECK(bcjack::lr_coefficient_shifted({1, 0, -1}, {1, 0}, {-1}) == 1);
  CHECK(bcjack::lr_coefficient_shifted({2, 1, -2}, {0, 0}, {0}) == 0);

  for (int ell : {1, 2, 5}) {
    const Weight lambda{3, 1, 0};
    const Weight mu{2, 0};
    const Weight nu{2};
    const auto shift = [&](Weight w) {
      for (auto& v : w) v += ell;
      return w;
    };
    CHECK(bcjack::lr_coefficient_shifted(lambda, mu, nu) ==
          bcjack::lr_coefficient_shifted(shift(lambda), shift(mu), shift(nu)));
  }
}

TEST_CASE("block branching conserves dimension") {
  const auto terms = bcjack::branch_to_levi({1, 0, -1}, 2, 1);
  CHECK(terms.size() == 4);
  Integer total = 0;
  for (const auto& term : terms)
    total += Integer(term.mult) * bcjack::gl_dimension(term.zeta) *
             bcjack::gl_dimension(term.tau);
  CHECK(total == bcjack::gl_dimension({1, 0, -1}));
  CHECK(bcjack::gl_dimension({1, 0, -1}) == 8);

  const auto vector_rep = bcjack::branch_to_levi({1, 0}, 1, 1);
  CHECK(vector_rep.size() == 2);
  const auto det_rep = bcjack::branch_to_levi({1, 1}, 1, 1);
  REQUIRE(det_rep.size() == 1);
  CHECK(det_rep[0].zeta == Weight{1});
  CHECK(det_rep[0].tau == Weight{1});
  CHECK(det_rep[0].mult == 1);
}

TEST_CASE("interlacing restriction") {
  CHECK(bcjack::interlace_branch({2, 0}) ==
        std::vector<Weight>{{2}, {1}, {0}});
  CHECK(bcjack::interlace_branch({1, 1}) == std::vector<Weight>{{1}});
  CHECK(bcjack::interlace_branch({3, 1, 0}).size() == 6);
}

TEST_CASE("weyl dimension formula") {
  CHECK(bcjack::gl_dimension({0, 0, 0}) == 1);
  CHECK(bcjack::gl_dimension({1, 0, 0}) == 3);
  CHECK(bcjack::gl_dimension({1, 1, 0}) == 3);
  CHECK(bcjack::gl_dimension({2, 1, 0}) == 8);
  CHECK(bcjack::gl_dimension({3, 1}) == 3);
  CHECK(bcjack::gl_dimension({2}) == 1);
}

TEST_CASE("twist weights") {
  const TwistParams p{3, 2, 1, 0, 2, 1};
  CHECK(bcjack::gl_twist_weight(p) == Weight{2, 2, 1});
  CHECK(bcjack::symmetric_twist_weight(p) == Weight{0, -2});

  const TwistParams q{2, 1, 0, 0, 1, 0};
  CHECK(bcjack::gl_twist_weight(q) == Weight{1, 0});
  CHECK(bcjack::symmetric_twist_weight(q) == Weight{-1});
}

TEST_CASE("determinant pair membership needs the middle block") {
  // Pair sums hold but the middle entry breaks membership.
  CHECK(!bcjack::contains_det_pair({2, 1, -2}, 0, 0, 2, 1));
  CHECK(bcjack::lr_coefficient_shifted({2, 1, -2}, {0, 0}, {0}) == 0);

  CHECK(bcjack::contains_det_pair({2, 0, -2}, 0, 0, 2, 1));
  CHECK(bcjack::lr_coefficient_shifted({2, 0, -2}, {0, 0}, {0}) == 1);

  CHECK(bcjack::contains_det_pair({1, 1, 1}, 1, 1, 2, 1));
  CHECK(!bcjack::contains_det_pair({1, 1, 0}, 1, 1, 2, 1));
}

TEST_CASE("spherical classification on pinned examples") {
  const TwistParams p{2, 1, 0, 0, 1, 0};
  CHECK(bcjack::spherical_multiplicity({2, 1, -2}, p) == 0);
  CHECK(!bcjack::is_spherical_closed_form({2, 1, -2}, p));

  CHECK(bcjack::spherical_multiplicity({2, 0, -2}, p) == 1);
  CHECK(bcjack::is_spherical_closed_form({2, 0, -2}, p));

  // lambda_1 = kt1 is the smallest spherical head entry.
  CHECK(bcjack::is_spherical_closed_form({1, 0, -1}, p));
  CHECK(bcjack::spherical_multiplicity({1, 0, -1}, p) == 1);
  CHECK(!bcjack::is_spherical_closed_form({0, 0, 0}, p));
  CHECK(bcjack::spherical_multiplicity({0, 0, 0}, p) == 0);
}

TEST_CASE("chain map to GL weights") {
  const TwistParams p{2, 1, 0, 0, 1, 0};
  // kappa = (0, 0, 1), rho_kappa = (1); mu = (1) maps to (2, 0, -2).
  CHECK(bcjack::to_gl_weight({bcjack::Rational(2)}, p) ==
        Weight{2, 0, -2});
  CHECK_THROWS(bcjack::to_gl_weight(
      {bcjack::Rational(1) / bcjack::Rational(2)}, p));

  const TwistParams balanced{2, 2, 1, -1, 1, 0};
  // khat = 0, no middle block: nu = (2, 1) maps to (2, 1, -1, -2).
  CHECK(bcjack::to_gl_weight({bcjack::Rational(2), bcjack::Rational(1)},
                             balanced) == Weight{2, 1, -1, -2});
}
