#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcjack {

// Exact arithmetic everywhere: coefficients, eigenvalues and multiplicity
// parameters are arbitrary-precision rationals, kept canonical (reduced,
// positive denominator) by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" in base 10; q must be nonzero.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

// Requires an integral value that fits in long.
long to_long(const Rational& value);

struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bcjack
