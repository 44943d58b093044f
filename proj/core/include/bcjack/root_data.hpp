#pragma once

#include <vector>

#include "bcjack/laurent.hpp"
#include "bcjack/rational.hpp"

namespace bcjack {

// Integer weight in the standard coordinates of rank n. Also used for GL
// highest weights, where entries may be negative.
using Weight = std::vector<int>;

enum class RootLength { kShort, kMedium, kLong };

struct PositiveRoot {
  std::vector<int> alpha;  // coordinates in the epsilon basis
  RootLength length;
};

// Positive roots of BC_n: e_i (short), e_i +- e_j for i < j (medium),
// 2 e_i (long). Squared lengths 1, 2, 4.
struct BCRootSystem {
  explicit BCRootSystem(int rank);

  int rank;
  std::vector<PositiveRoot> positive_roots;
};

// One value per root length class, in the order (short, medium, long).
struct MultiplicityVector {
  Rational p1, p2, p3;

  const Rational& for_length(RootLength length) const;
  friend MultiplicityVector operator+(const MultiplicityVector& a,
                                      const MultiplicityVector& b) {
    return {a.p1 + b.p1, a.p2 + b.p2, a.p3 + b.p3};
  }
  friend bool operator==(const MultiplicityVector&,
                         const MultiplicityVector&) = default;
};

// Half-multiplicities of the symmetric-space root data indexed by m >= n >= 1:
// (m - n, 1, 1/2).
MultiplicityVector half_multiplicities(int m, int n);

// rho_p = (1/2) sum_{alpha > 0} p_alpha alpha; component i equals
// p1/2 + p3 + p2 (n - i).
std::vector<Rational> rho_vector(const MultiplicityVector& p, int rank);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Weakly decreasing and nonnegative.
bool is_bc_dominant(const Weight& w);
// Weakly decreasing; negative entries allowed.
bool is_gl_dominant(const Weight& w);

// Dominance order via partial sums only: sum_{i<=k} nu_i <= sum_{i<=k} mu_i
// for every k. No total-sum equality is required because e_i itself is a
// root. Both arguments must be dominant.
bool dominance_le(const Weight& nu, const Weight& mu);

// All dominant nu <= mu, ordered so that every nu appears after all kappa
// strictly above it (descending by degree, then by lex).
std::vector<Weight> lower_cone(const Weight& mu);

// Signed permutation: coordinate i is sent to slot perm[i] with sign[i].
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sign;

  static WeylElement identity(int rank);
};

// apply_first acts first: result sends e to second(first(e)).
WeylElement compose(const WeylElement& second, const WeylElement& first);

// Adjacent transpositions plus the sign flip of the last coordinate.
std::vector<WeylElement> weyl_generators(int rank);

// Action on exponent vectors extended linearly to polynomials; satisfies
// weyl_act(weyl_act(f, w1), w2) == weyl_act(f, compose(w2, w1)).
Weight weyl_apply(const WeylElement& w, const Weight& e);
LaurentPoly weyl_act(const LaurentPoly& f, const WeylElement& w);

// Full hyperoctahedral orbit of a dominant weight, deduplicated and sorted.
std::vector<Weight> weyl_orbit(const Weight& lambda);

// Orbit sum m_lambda = sum_{nu in W lambda} u^{2 nu}.
LaurentPoly orbit_sum(const Weight& lambda);

// Product over positive roots of sinh^{kappa_alpha}(alpha(x)) expanded in
// u_i = e^{x_i} with sinh y = (e^y - e^{-y})/2; kappa must have nonnegative
// integer entries.
LaurentPoly weyl_denominator(const MultiplicityVector& kappa, int rank);

// Character by which the sinh product transforms: det(w)^{k1 + k3} times
// sgn(underlying permutation)^{k1 + k2 + k3}. kappa must be integral.
int weyl_sign_character(const WeylElement& w, const MultiplicityVector& kappa);

}  // namespace bcjack
