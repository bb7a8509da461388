#pragma once

// JSON forms of families, codes, witnesses, certificates and bound reports.
// Parsing is strict; FormatError messages start with the offending field path.

#include <string>

#include "json.hpp"

#include "fplab/code.hpp"
#include "fplab/core.hpp"
#include "fplab/focal.hpp"
#include "fplab/matching.hpp"
#include "fplab/report.hpp"

namespace fplab {

using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as FormatError with `source` in the message.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// {"n": int, "sets": [[int, ...], ...]} with 1-based points.
SubsetFamily family_from_json(const Json& j);
Json family_to_json(const SubsetFamily& family);

/// {"q": int, "n": int, "words": [[int, ...], ...]} with symbols in 1..q.
Code code_from_json(const Json& j);
Json code_to_json(const Code& code);

/// {"kind", "critical", "focus", "coalition": [{"index", "multiplicity"}]}; 0-based indices.
Json witness_to_json(const FocalWitness& w);
FocalWitness witness_from_json(const Json& j);

/// {"value", "status", "family", "explored"}.
Json certificate_to_json(const MatchingCertificate& cert);

/// Exact values are written as integers when integral, otherwise as "p/q" strings.
Json report_to_json(const BoundReport& report);

}  // namespace fplab
