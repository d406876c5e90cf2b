#ifndef E7_SERIALIZE_HPP
#define E7_SERIALIZE_HPP

#include <optional>

#include <json.hpp>

#include "e7/classifier.hpp"
#include "e7/diagonalizer.hpp"

namespace e7 {

using nlohmann::json;

// Complex scalars: float mode [re, im] (numbers), exact mode ["p/q", "p/q"].
json to_json(const cd& z);
json to_json(const ExactComplex& z);
cd cd_from_json(const json& j);
ExactComplex exact_from_json(const json& j);

json to_json(const JordanElement<cd>& x);
json to_json(const JordanElement<ExactComplex>& x);

/// {"mode": ..., "X": ..., "Y": ..., "xi": ..., "eta": ...}
json element_to_json(const FreudenthalVector<cd>& p);
json element_to_json(const FreudenthalVector<ExactComplex>& p);

FreudenthalVector<cd> to_float(const FreudenthalVector<ExactComplex>& p);

/// A parsed element file: either mode, with the float view always available.
struct ParsedElement {
  bool exact = false;
  FreudenthalVector<cd> value;
  std::optional<FreudenthalVector<ExactComplex>> exact_value;
};

/// Accepts full vectors or the {"diag": [r1,r2,r3,r]} shorthand; throws
/// std::invalid_argument on malformed documents.
ParsedElement parse_element(const json& j);

json to_json(const InvariantSet<cd>& inv);
json to_json(const ClassificationReport& rep);
json to_json(const ReductionResult& res);
json to_json(const ReductionVerification& v);
json to_json(const GroupElement& a);

/// Basis export: version tag, label, rank certificate, Phi-tuples.
json to_json(const LieBasis& basis);

}  // namespace e7

#endif
