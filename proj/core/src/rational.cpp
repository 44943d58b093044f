#include "bcjack/rational.hpp"

namespace bcjack {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational value;
  if (value.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (value.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(text));
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long to_long(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p())
    throw std::invalid_argument("rational is not a small integer: " +
                                to_string(value));
  return value.get_num().get_si();
}

}  // namespace bcjack
