#pragma once

#include <json.hpp>

#include "pogroup/sigma.hpp"

namespace pogroup {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// FNV-1a over the input text, hex encoded; identifies the spec in reports.
std::string input_hash(const std::string& text);

// Report envelope: {tool_version, input_hash, command, result, caveats}.
// All numeric values inside results are exact strings (integers, rationals,
// radical expressions), never floats.
Json report_envelope(const std::string& command, const std::string& hash, Json result,
                     std::vector<std::string> caveats);

Json census_json(const OrderCensus& census);
Json sigma_json(const SigmaVerdict& verdict);
Json theorem_a_json(const TheoremAReport& report);
Json comparison_json(const Element& a, const Element& b, Comparison c);

}  // namespace pogroup
