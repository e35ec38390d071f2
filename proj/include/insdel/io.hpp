#pragma once

// CodeFile ingestion/emission and JSON report building for every command.

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "insdel/bounds.hpp"
#include "insdel/constructions.hpp"
#include "insdel/search.hpp"

namespace insdel {

// CodeFile JSON:
//   { "field": {"p": int, "e": int, "modulus": [ints]?},
//     "generator": [[token, ...], ...],
//     "metadata": {...}? }
LinearCode load_code_json(const std::string& text);
LinearCode load_code_json(const nlohmann::json& j);
nlohmann::json emit_code_json(const LinearCode& c, const std::string& name = "");

// 64-bit FNV-1a digest of a canonical rendering of the input, hex-encoded.
std::string input_digest(const std::string& text);

std::vector<std::string> format_word(const Field& f, const Vec& w);

nlohmann::json to_json(const Field& f, const DistanceWitness& w);
nlohmann::json to_json(const LinearCode& c, const CertificateReport& r);
nlohmann::json to_json(const LinearCode& c, const StrictDirectWitness& w);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const DualPairReport& r);
nlohmann::json to_json(const SearchResult& r);

// Wraps a payload into the common report envelope with command echo, digest,
// summary line and timing.
nlohmann::json make_report(const std::string& command, const std::string& digest,
                           nlohmann::json payload, const std::string& summary,
                           double elapsed_ms, const std::vector<std::string>& notes = {});

}  // namespace insdel
