#pragma once

#include <complex>
#include <map>
#include <vector>

#include "bcjack/rational.hpp"

namespace bcjack {

// Integer exponent vector of a monomial u^e = u_1^{e_1} ... u_n^{e_n},
// entries may be negative.
using Exponent = std::vector<int>;

// Multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept in a map ordered lexicographically by exponent vector, so
// equality is structural and iteration order is canonical.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit LaurentPoly(int vars = 0) : vars_(vars) {}

  static LaurentPoly constant(int vars, const Rational& c);
  static LaurentPoly monomial(int vars, const Exponent& e, const Rational& c);

  int vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Zero when the monomial is absent.
  Rational coeff(const Exponent& e) const;
  Rational constant_term() const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  LaurentPoly scaled(const Rational& c) const;

  // d/dt f(u e^{t d}) at t = 0: sends u^e to (e . d) u^e.
  LaurentPoly directional_derivative(const std::vector<int>& direction) const;

  // Substitutes u_var -> -u_var.
  LaurentPoly negate_variable(int var) const;

  // Sum over terms in canonical order; point entries must be nonzero when
  // negative exponents occur.
  std::complex<double> evaluate(
      const std::vector<std::complex<double>>& point) const;

 private:
  void check_same_shape(const LaurentPoly& other) const;

  int vars_;
  TermMap terms_;
};

// Thrown by exact_div when the divisor does not divide the dividend; carries
// the nonzero remainder of the attempted division.
struct NonExactDivision : ComputationError {
  explicit NonExactDivision(LaurentPoly rem)
      : ComputationError("laurent division left a nonzero remainder"),
        remainder(std::move(rem)) {}
  LaurentPoly remainder;
};

// Exact quotient f / g in the Laurent ring. Monomial units are factored out
// of both operands, then ordinary multivariate division runs with respect to
// the lexicographic term order.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace bcjack
