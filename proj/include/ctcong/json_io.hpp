#ifndef CTCONG_JSON_IO_HPP
#define CTCONG_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "ctcong/verify.hpp"

namespace ctcong {

using Json = nlohmann::json;

// All exact values are serialized as decimal strings ("-3", "5/7") under a
// top-level "schema": 1; see the README for the field layout.

Json to_json(const TheoremG& T);
Json to_json(const CaseSplitTheorem& T);
Json to_json(const QuadraticTheorem& T);
Json to_json(const ResidueSetReport& R);
Json to_json(const VerificationReport& R);
Json to_json(const TheoremVariant& T);

/// Rebuilds a theorem object from its JSON (kinds theo-g, theo-qp, quad,
/// finite).  The inputs and construction parameters are replayed through
/// the engine and the stored fields are checked against the result, so a
/// loaded theorem is always internally consistent.
TheoremVariant theorem_from_json(const Json& j);

/// Attach a verification report to a theorem JSON.
void attach_verification(Json& j, const VerificationReport& R);

// Human-readable statements.
std::string describe(const TheoremG& T);
std::string describe(const CaseSplitTheorem& T);
std::string describe(const QuadraticTheorem& T);
std::string describe(const ResidueSetReport& R);
std::string describe(const VerificationReport& R, bool rows = true);

} // namespace ctcong

#endif
