#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "symdehn/symdehn.hpp"

namespace symdehn::cli {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "symdehn";
inline constexpr const char* kToolVersion = "1.0.0";

// Rationals are "p/q" (or "p"); quadratic values carry both the textual form
// "(x + y*sqrt(d))" and the parts {d, num: [X, Y], den} with value (X + Y sqrt d)/den.
Json to_json(const Rational& r);
Json to_json(const QuadElem& z);
Json to_json(const TowerElem& w);
Json to_json(const SurdLength& s);
Json to_json(const RationalAngle& a);
Json to_json(const Angle& a);
Json to_json(const DehnTensor& t);
Json to_json(const NormEquationSolution& s);
Json to_json(const EliminationCertificate& c);
Json to_json(const ComplexityBounds& c);
Json to_json(const TrivialityReport& r, bool verbose);

Rational rational_from_json(const Json& j);
// Rebuilds from the parts and checks the textual form agrees.
QuadElem quad_from_json(const Json& j);
SurdLength surd_from_json(const Json& j);
Angle angle_from_json(const Json& j);
DehnTensor tensor_from_json(const Json& j);

// {"header": {...}, "command": ..., "inputs": ..., "payload": ...}
Json make_document(const std::string& command, Json inputs, Json payload);

// Parses text back into a document and validates the header.
Json parse_document(const std::string& text);

}  // namespace symdehn::cli
