#include "bcjack/json_io.hpp"

#include <json.hpp>

namespace bcjack {

namespace {

using nlohmann::json;

json rational_vector(const MultiplicityVector& r) {
  return json::array({to_string(r.p1), to_string(r.p2), to_string(r.p3)});
}

MultiplicityVector rational_vector_from(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("expected a multiplicity triple");
  return {parse_rational(j[0].get<std::string>()),
          parse_rational(j[1].get<std::string>()),
          parse_rational(j[2].get<std::string>())};
}

}  // namespace

std::string laurent_to_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(json{{"e", e}, {"c", to_string(c)}});
  return json{{"n", f.vars()}, {"terms", std::move(terms)}}.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  const json j = json::parse(text);
  LaurentPoly f(j.at("n").get<int>());
  for (const auto& term : j.at("terms"))
    f.add_term(term.at("e").get<Exponent>(),
               parse_rational(term.at("c").get<std::string>()));
  return f;
}

std::string jack_to_json(const JackPolynomial& jack) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < jack.cone.size(); ++i)
    coeffs.push_back(json{{"nu", jack.cone[i]}, {"c", to_string(jack.coeffs[i])}});
  const json j{{"schema", kSchemaTag},
               {"n", jack.rank},
               {"mu", jack.mu},
               {"r", rational_vector(jack.r)},
               {"coeffs", std::move(coeffs)},
               {"eigenvalue", to_string(jack.eigenvalue)}};
  return j.dump();
}

JackPolynomial jack_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema").get<std::string>() != kSchemaTag)
    throw std::invalid_argument("unknown schema tag");
  JackPolynomial jack;
  jack.rank = j.at("n").get<int>();
  jack.mu = j.at("mu").get<Weight>();
  jack.r = rational_vector_from(j.at("r"));
  for (const auto& entry : j.at("coeffs")) {
    jack.cone.push_back(entry.at("nu").get<Weight>());
    jack.coeffs.push_back(parse_rational(entry.at("c").get<std::string>()));
  }
  jack.eigenvalue = parse_rational(j.at("eigenvalue").get<std::string>());
  return jack;
}

std::string operator_matrix_to_json(const OperatorMatrix& matrix) {
  json cone = json::array();
  for (const auto& nu : matrix.cone) cone.push_back(nu);
  json diag = json::array();
  for (const auto& value : matrix.diag) diag.push_back(to_string(value));
  json off = json::array();
  for (const auto& entry : matrix.off_diag)
    off.push_back(json{{"row", entry.row},
                       {"col", entry.col},
                       {"c", to_string(entry.value)}});
  const json j{{"schema", kSchemaTag},
               {"n", matrix.rank},
               {"mu", matrix.mu},
               {"r", rational_vector(matrix.r)},
               {"cone", std::move(cone)},
               {"diag", std::move(diag)},
               {"offdiag", std::move(off)}};
  return j.dump();
}

}  // namespace bcjack
