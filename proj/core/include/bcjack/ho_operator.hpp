#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bcjack/root_data.hpp"

namespace bcjack {

// T = Delta + sum_{alpha > 0} 2 r_alpha coth(alpha(x)) d_alpha acting on
// Weyl-invariant Laurent polynomials in the even exponent lattice, with
// coth(y) = (e^{2y} + 1)/(e^{2y} - 1) and d_alpha = sum_i alpha_i d/dx_i.
// No additive constant: the zero weight is an eigenvector with eigenvalue 0.
//
// Assembled over the common denominator prod_{alpha > 0} (u^{2 alpha} - 1)
// and reduced by exact division; a nonzero remainder is an internal error
// surfaced as NonExactDivision.
LaurentPoly apply_sutherland(const LaurentPoly& f,
                             const MultiplicityVector& r);

// Independent evaluation of the same operator through the geometric
// expansion coth(y) = 1 + 2 sum_{k >= 1} e^{-2ky}, truncated once the
// shifted exponent leaves the convex hull of the orbit of 2 * support_bound
// (by convexity the walk never re-enters). Must agree with apply_sutherland
// exactly whenever supp(T f) stays inside the bound.
LaurentPoly apply_sutherland_series(const LaurentPoly& f,
                                    const MultiplicityVector& r,
                                    const Weight& support_bound);

// Shifted eigenvalue 4 [ (mu + rho_r, mu + rho_r) - (rho_r, rho_r) ].
Rational sutherland_eigenvalue(const Weight& mu, const MultiplicityVector& r);

// Writes an invariant polynomial as a combination of orbit sums; throws
// std::invalid_argument when the input is not invariant (odd exponents or a
// nonzero residue after peeling).
std::map<Weight, Rational> orbit_decompose(const LaurentPoly& f);

struct TriangularityViolation : ComputationError {
  using ComputationError::ComputationError;
};

// Action of T on the lower cone of mu in the orbit-sum basis:
// T m_nu = diag[nu] m_nu + sum_{kappa < nu} offdiag[(nu, kappa)] m_kappa.
struct OperatorMatrix {
  struct Entry {
    std::size_t row;  // source weight index in cone order
    std::size_t col;  // target weight index, strictly below in dominance
    Rational value;
  };

  int rank = 0;
  Weight mu;
  MultiplicityVector r;
  std::vector<Weight> cone;          // lower_cone(mu) order
  std::vector<Rational> diag;        // aligned with cone
  std::vector<Entry> off_diag;       // sorted by (row, col)

  std::size_t index_of(const Weight& nu) const;
};

// Applies T to every orbit sum of the cone (rows in parallel when jobs > 1)
// and checks triangularity and the closed-form diagonal.
OperatorMatrix operator_matrix(const Weight& mu, const MultiplicityVector& r,
                               unsigned jobs = 1);

}  // namespace bcjack
