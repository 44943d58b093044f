#pragma once

#include <vector>

#include "bcjack/ho_operator.hpp"
#include "bcjack/twist_params.hpp"

namespace bcjack {

// Thrown when the triangular solve hits E(mu) == E(nu) for some nu < mu:
// the eigenvector in the orbit-sum basis is not defined at such parameters.
struct EigenvalueCollision : ComputationError {
  explicit EigenvalueCollision(Weight nu_in)
      : ComputationError("eigenvalue collision in triangular solve"),
        nu(std::move(nu_in)) {}
  Weight nu;
};

// Monic eigenvector J_mu = m_mu + sum_{nu < mu} c_nu m_nu of the triangular
// operator action, with T J_mu = eigenvalue * J_mu exactly.
struct JackPolynomial {
  int rank = 0;
  Weight mu;
  MultiplicityVector r;
  std::vector<Weight> cone;       // lower_cone(mu) order
  std::vector<Rational> coeffs;   // aligned with cone; leading entry is 1
  Rational eigenvalue;

  const Rational& coeff(const Weight& nu) const;
  LaurentPoly to_laurent() const;
};

JackPolynomial jack_polynomial(const Weight& mu, const MultiplicityVector& r,
                               unsigned jobs = 1);

// Torus restriction of the twisted spherical function, normalized so the
// leading orbit coefficient is 1: sinh-weight factor times the Jack
// polynomial at r = kappa + s. Requires integral nonnegative kappa.
LaurentPoly spherical_restriction(const Weight& mu, const TwistParams& p,
                                  unsigned jobs = 1);

// Tensor-product trapezoidal approximation of the torus inner product
//   integral over [0, pi]^n of w_r(y) f(e^{iy}) conj(g(e^{iy})) dy,
// with weight prod_i |sin y_i|^{2 r1} |sin 2 y_i|^{2 r3} times
// prod_{i<j} |sin(y_i - y_j) sin(y_i + y_j)|^{2 r2}.
double inner_product_quadrature(const LaurentPoly& f, const LaurentPoly& g,
                                const MultiplicityVector& r, int grid,
                                unsigned jobs = 1);

}  // namespace bcjack
