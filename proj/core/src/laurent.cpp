#include "bcjack/laurent.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace bcjack {

namespace {

std::complex<double> int_pow(std::complex<double> base, int exp) {
  if (exp < 0) return 1.0 / int_pow(base, -exp);
  std::complex<double> acc = 1.0;
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int vars, const Rational& c) {
  return monomial(vars, Exponent(static_cast<std::size_t>(vars), 0), c);
}

LaurentPoly LaurentPoly::monomial(int vars, const Exponent& e,
                                  const Rational& c) {
  LaurentPoly p(vars);
  p.add_term(e, c);
  return p;
}

Rational LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const {
  return coeff(Exponent(static_cast<std::size_t>(vars_), 0));
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != vars_)
    throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_shape(const LaurentPoly& other) const {
  if (vars_ != other.vars_)
    throw std::invalid_argument("laurent arity mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_shape(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_shape(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.check_same_shape(rhs);
  LaurentPoly out(lhs.vars_);
  Exponent e(static_cast<std::size_t>(lhs.vars_));
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

LaurentPoly LaurentPoly::directional_derivative(
    const std::vector<int>& direction) const {
  if (static_cast<int>(direction.size()) != vars_)
    throw std::invalid_argument("direction arity mismatch");
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    long dot = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      dot += static_cast<long>(e[i]) * direction[i];
    if (dot != 0) out.terms_.emplace(e, c * Rational(dot));
  }
  return out;
}

LaurentPoly LaurentPoly::negate_variable(int var) const {
  if (var < 0 || var >= vars_) throw std::invalid_argument("variable index");
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(e, (e[static_cast<std::size_t>(var)] & 1) ? -c : c);
  return out;
}

std::complex<double> LaurentPoly::evaluate(
    const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw std::invalid_argument("point arity mismatch");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      term *= int_pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

namespace {

// Componentwise minimum of all exponent vectors: the monomial unit that
// normalizes a Laurent polynomial to an ordinary polynomial whose support
// touches exponent zero in every variable.
Exponent support_floor(const LaurentPoly& p) {
  Exponent floor(static_cast<std::size_t>(p.vars()),
                 std::numeric_limits<int>::max());
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < floor.size(); ++i)
      floor[i] = std::min(floor[i], e[i]);
  return floor;
}

LaurentPoly shift(const LaurentPoly& p, const Exponent& offset) {
  LaurentPoly out(p.vars());
  Exponent e(offset.size());
  for (const auto& [pe, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = pe[i] + offset[i];
    out.add_term(e, c);
  }
  return out;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.vars() != g.vars()) throw std::invalid_argument("arity mismatch");
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  LaurentPoly quotient(f.vars());
  if (f.is_zero()) return quotient;

  const Exponent f_floor = support_floor(f);
  const Exponent g_floor = support_floor(g);
  Exponent neg(f_floor.size());

  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -f_floor[i];
  LaurentPoly rem = shift(f, neg);
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -g_floor[i];
  const LaurentPoly divisor = shift(g, neg);

  // After normalization the divisor has no monomial factor, so an exact
  // Laurent quotient is an ordinary polynomial; single-divisor reduction with
  // the lex leading term decides divisibility by a zero remainder.
  const auto lead = divisor.terms().rbegin();
  LaurentPoly residue(f.vars());
  Exponent q(neg.size());
  while (!rem.is_zero()) {
    const auto top = rem.terms().rbegin();
    const Exponent top_e = top->first;
    const Rational top_c = top->second;
    if (divides(lead->first, top_e)) {
      for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = top_e[i] - lead->first[i];
      const Rational factor = top_c / lead->second;
      quotient.add_term(q, factor);
      rem -= shift(divisor, q).scaled(factor);
    } else {
      residue.add_term(top_e, top_c);
      rem.add_term(top_e, -top_c);
    }
  }
  if (!residue.is_zero()) {
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = f_floor[i];
    throw NonExactDivision(shift(residue, neg));
  }

  Exponent offset(neg.size());
  for (std::size_t i = 0; i < offset.size(); ++i)
    offset[i] = f_floor[i] - g_floor[i];
  return shift(quotient, offset);
}

}  // namespace bcjack
