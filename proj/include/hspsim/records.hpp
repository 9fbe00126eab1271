#pragma once

#include <json.hpp>
#include <string>

#include "hspsim/algorithms.hpp"
#include "hspsim/labelings.hpp"

namespace hspsim {

using Json = nlohmann::json;

/// Probabilities print as 12-digit decimals in run records.
std::string format_probability(double p);

Json element_to_json(const GroupElement& g);
Json subgroup_to_json(const Subgroup& subgroup);
Json quotient_to_json(const QuotientType& type);

/// Machine-readable state record: basis mode, group spec, alphabet size when
/// present, amplitudes as re/im pairs (shortest round-trip decimals, up to 17
/// significant digits).
Json state_to_json(const StateVector& psi);
StateVector state_from_json(const Json& record);

/// Round-trips bit-exactly: group spec + subgroup generators + labeling.
Json hiding_function_to_json(const HidingFunction& f);
HidingFunction hiding_function_from_json(const Json& record);

Json distribution_to_json(const StateVector& reference_basis,
                          const std::vector<double>& probs);
Json decision_to_json(const DecisionResult& result);
Json identification_to_json(const IdentificationResult& result);
Json sk_sample_to_json(const SKSample& sample);
Json scan_row_to_json(const LabelingScanRow& row);

}  // namespace hspsim
