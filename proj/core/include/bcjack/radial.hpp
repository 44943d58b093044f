#pragma once

#include <functional>
#include <random>
#include <vector>

#include "bcjack/root_data.hpp"
#include "bcjack/twist_params.hpp"

namespace bcjack {

// The finite-difference layer works in extended precision: the identities it
// measures hold exactly, so the reported gaps should sit at the stencil
// noise floor, and double-precision field evaluations at step 1e-4 would
// dominate that floor.
using Real = long double;

using ScalarField = std::function<Real(const std::vector<Real>&)>;

// sum_{alpha > 0} r_alpha (r_alpha + 2 r_{2alpha} - 1) (alpha, alpha)
// / sinh^2(alpha(x)), where r_{2alpha} = r3 for short alpha and 0 otherwise.
Real cm_potential(const std::vector<Real>& x, const MultiplicityVector& r);

// prod_{alpha > 0} sinh^{r_alpha}(alpha(x)); x must lie in the open chamber
// x_1 > ... > x_n > 0 so every factor is positive.
Real weyl_denominator_value(const std::vector<Real>& x,
                            const MultiplicityVector& r);

// Central differences (fourth order): (Delta f)(x) - u_r(x) f(x).
Real apply_cm_fd(const ScalarField& f, const std::vector<Real>& x,
                 const MultiplicityVector& r, Real h);

// Twice the radial second Casimir in explicit form: Laplacian, coth drift
// terms, the sinh/cosh potential wells and the additive constant, evaluated
// with the same central differences.
Real apply_radial_casimir_fd(const ScalarField& f, const std::vector<Real>& x,
                             const TwistParams& p, Real h);

// delta_s^{-1} (Delta - u_r + C) delta_s with r = kappa + s; equals
// apply_radial_casimir_fd up to discretization error.
Real conjugated_radial_casimir_fd(const ScalarField& f,
                                  const std::vector<Real>& x,
                                  const TwistParams& p, Real h);

// Additive constant of the radial second Casimir:
// (m+n - (m+n)^3)/6 + ((m-n)^3 - (m-n))/6 + (k1+k2)^2 n + 2(m-n) k1^2.
Rational cm_constant(const TwistParams& p);

// Eigenvalue of the radial second Casimir on the twisted spherical function
// labeled mu: 2 (mu + rho_r, mu + rho_r) + C/2 at r = kappa + s.
Rational radial_casimir_eigenvalue(const Weight& mu, const TwistParams& p);

// Harish-Chandra eigenvalue of the order-r Casimir on L_lambda:
// sum_j ((lambda_j + rho_j)^r - rho_j^r) with
// rho = (m+n-1, m+n-3, ..., 1-m-n)/2.
Rational gl_casimir_eigenvalue(const Weight& lambda, int order);

// Random points of the open chamber with every root value alpha(x) at least
// min_wall_distance.
std::vector<std::vector<Real>> sample_chamber_points(
    int rank, int count, std::mt19937_64& rng, double min_wall_distance = 0.3,
    double low = 0.4, double high = 2.6);

}  // namespace bcjack
