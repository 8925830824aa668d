#ifndef SOLWAVE_JSONIO_HPP
#define SOLWAVE_JSONIO_HPP

// JSON forms for the public types.  Numbers are accepted wherever exact
// rationals live and are converted through their exact dyadic value; the
// string form "p/q" is accepted as well and is what gets emitted whenever the
// value is not exactly representable as a double.

#include <json.hpp>

#include "identity.hpp"
#include "symbol.hpp"

namespace solwave::jsonio {

using nlohmann::json;

json parse(const std::string& text);   // wraps nlohmann errors into Errc::parse_error

exact::Rat rat_from_json(const json& v, const char* what);
json rat_to_json(const exact::Rat& r);

// {"p0": number|string|[re, im], "terms": [{"coeff": number|string, "degree": number}, ...]}
MultiplierSymbol symbol_from_json(const json& j);
json symbol_to_json(const MultiplierSymbol& s);

json ellipticity_to_json(const EllipticityReport& r);

// {"coeff": number|string, "power": int}
exact::MonomialNonlinearity nonlinearity_from_json(const json& j);
json nonlinearity_to_json(const exact::MonomialNonlinearity& nl);

// {"amplitude": number|string, "lambda": int, "dim": int}
exact::PowerWeightAnsatz ansatz_from_json(const json& j);
json ansatz_to_json(const exact::PowerWeightAnsatz& a);

// {"scalar_rat": "p/q", "pi_half_pow": int, "poly": ["c0", "c1", ...]} ascending
json reduced_form_to_json(const exact::ReducedForm& rf);

json verification_to_json(const exact::VerificationResult& v);

} // namespace solwave::jsonio

#endif
