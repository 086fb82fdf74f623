#pragma once

#include <json.hpp>

#include "coincidence.hpp"
#include "eisenstein.hpp"
#include "multilattice.hpp"
#include "oracle.hpp"
#include "shifted.hpp"

namespace hexcsl {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& v);
Integer json_to_integer(const Json& j);

/// "p/q", "p", or a JSON number.
Rational parse_rational(const std::string& text);
Rational json_to_rational(const Json& j);
std::string rational_to_string(const Rational& r);

Json to_json(const EisensteinInt& g);       // {"m":., "n":.}
EisensteinInt json_to_eisenstein(const Json& j);

Json to_json(const EisensteinRational& y);  // {"num":{..}, "den":.}
EisensteinRational json_to_eisenstein_rational(const Json& j);

Json to_json(const CoincidenceIsometry& r);  // {"z":{..}, "eps":k, "reflect":b}
CoincidenceIsometry json_to_isometry(const Json& j);

Json to_json(const PrimeFactorization& f);

Json to_json(const OcDescription& d);

Json to_json(const Csml& c);  // {"z":.., "components":[{"shift":..}], "index_num":.., "index_den":..}

Json to_json(const SigmaSet& s);

Json to_json(const VerificationReport& r);
Json reports_to_json(const std::vector<VerificationReport>& reports);

/// {"kind": "rational"|"irrational-a"|"irrational-b"|"both-independent"|
///  "affinely-related", ...fields per kind}
ShiftSpec json_to_shift_spec(const Json& j);
Json to_json(const ShiftSpec& s);

/// Rows of the CSL table up to max_index plus per-index summary counts.
Json enumerate_to_json(const Integer& max_index);
std::string enumerate_to_csv(const Integer& max_index);

}  // namespace hexcsl
