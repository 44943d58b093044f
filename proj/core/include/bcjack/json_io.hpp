#pragma once

#include <string>

#include "bcjack/ho_operator.hpp"
#include "bcjack/jack.hpp"
#include "bcjack/laurent.hpp"

namespace bcjack {

inline constexpr const char* kSchemaTag = "bcjack/1";

// {"n": vars, "terms": [{"e": [...], "c": "p/q"}, ...]} with terms sorted
// lexicographically by exponent; serialize(parse(s)) == s for canonical s.
std::string laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const std::string& text);

std::string jack_to_json(const JackPolynomial& jack);
JackPolynomial jack_from_json(const std::string& text);

std::string operator_matrix_to_json(const OperatorMatrix& matrix);

}  // namespace bcjack
