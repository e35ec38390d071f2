#include "insdel/io.hpp"

#include <nlohmann/json.hpp>

namespace insdel {

using nlohmann::json;

LinearCode load_code_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FieldError(std::string("invalid JSON: ") + e.what());
    }
    return load_code_json(j);
}

LinearCode load_code_json(const json& j) {
    if (!j.contains("field") || !j.contains("generator"))
        throw FieldError("code file needs 'field' and 'generator'");
    const json& jf = j["field"];
    uint32_t p = jf.at("p").get<uint32_t>();
    uint32_t e = jf.value("e", 1u);
    std::optional<std::vector<uint32_t>> modulus;
    if (jf.contains("modulus")) modulus = jf["modulus"].get<std::vector<uint32_t>>();
    FieldPtr field = Field::make(p, e, modulus);

    const json& rows = j["generator"];
    if (!rows.is_array() || rows.empty()) throw FieldError("generator must be a nonempty array");
    size_t k = rows.size();
    size_t n = rows[0].size();
    GfMatrix g(field, k, n);
    for (size_t r = 0; r < k; ++r) {
        if (rows[r].size() != n) throw FieldError("generator rows have unequal lengths");
        for (size_t c = 0; c < n; ++c) {
            const json& cell = rows[r][c];
            g.at(r, c) = cell.is_string() ? field->parse(cell.get<std::string>())
                                          : field->parse(std::to_string(cell.get<uint64_t>()));
        }
    }
    return LinearCode(field, g);
}

json emit_code_json(const LinearCode& c, const std::string& name) {
    const Field& f = *c.field();
    json jf{{"p", f.p()}, {"e", f.e()}};
    if (f.e() > 1) jf["modulus"] = f.modulus();
    json rows = json::array();
    for (size_t r = 0; r < c.k(); ++r) {
        json row = json::array();
        for (size_t j = 0; j < c.n(); ++j) row.push_back(f.format(c.generator().at(r, j)));
        rows.push_back(row);
    }
    json out{{"field", jf}, {"generator", rows}};
    if (!name.empty()) out["metadata"] = json{{"name", name}};
    return out;
}

std::string input_digest(const std::string& text) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> format_word(const Field& f, const Vec& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (uint32_t x : w) out.push_back(f.format(x));
    return out;
}

json to_json(const Field& f, const DistanceWitness& w) {
    return json{{"distance", w.distance},
                {"lcs_length", w.lcs_length},
                {"word_a", format_word(f, w.word_a)},
                {"word_b", format_word(f, w.word_b)},
                {"subsequence_indices_a", w.idx_a},
                {"subsequence_indices_b", w.idx_b}};
}

namespace {
json pair_to_json(const IncreasingPair& p) {
    return json{{"I", p.i}, {"J", p.j}, {"meet", p.meet()}};
}
}  // namespace

json to_json(const LinearCode&, const CertificateReport& r) {
    json j{{"verdict", r.pass ? "pass" : "fail"},
           {"pairs_examined", r.pairs_examined},
           {"qualifying_pair_count", r.qualifying_pairs.size()},
           {"pair_convention", CertificateReport::kPairConvention}};
    json quals = json::array();
    for (const auto& p : r.qualifying_pairs) quals.push_back(pair_to_json(p));
    j["qualifying_pairs"] = quals;
    if (r.pass) j["certified_distance"] = r.certified_distance;
    if (!r.failure_reason.empty()) j["failure_reason"] = r.failure_reason;
    if (r.failure_witness) j["failure_witness"] = pair_to_json(*r.failure_witness);
    return j;
}

json to_json(const LinearCode& c, const StrictDirectWitness& w) {
    const Field& f = *c.field();
    json pairs = json::array();
    for (auto [a, b] : w.pairs) pairs.push_back(json::array({a, b}));
    return json{{"min_weight_codeword", format_word(f, w.min_weight_codeword)},
                {"zero_positions", w.zero_positions},
                {"pairs", pairs},
                {"pair_count", w.pairs.size()},
                {"uses_sentinel_gap", w.uses_sentinel_gap},
                {"solution", format_word(f, w.solution)},
                {"word1", format_word(f, w.word1)},
                {"word2", format_word(f, w.word2)},
                {"common_length", w.common_length},
                {"bound", w.bound}};
}

json to_json(const BoundReport& r) {
    json bounds;
    for (const auto& [name, e] : r.bounds)
        bounds[name] = json{{"applicable", e.applicable}, {"value", e.value}, {"reason", e.reason}};
    json j{{"bounds", bounds}};
    if (r.envelope_valid) j["envelope"] = r.envelope;
    return j;
}

json to_json(const DualPairReport& r) {
    return json{{"distance", r.d_primal},
                {"dual_distance", r.d_dual},
                {"both_correcting", r.both_correcting},
                {"consequences_hold", r.consequences_hold},
                {"detail", r.detail}};
}

json to_json(const SearchResult& r) {
    json matches = json::array();
    for (const GfMatrix& m : r.matches) {
        json rows = json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
            rows.push_back(row);
        }
        matches.push_back(rows);
    }
    return json{{"n", r.n},
                {"k", r.k},
                {"bound", r.bound == BoundKind::Strict ? "strict" : "half"},
                {"ones_filter", r.filter == OnesFilter::None
                                    ? "none"
                                    : (r.filter == OnesFilter::RequireIn ? "require-in"
                                                                         : "require-out")},
                {"target_distance", r.target_distance},
                {"subspaces_examined", r.subspaces_examined},
                {"match_count", r.matches.size()},
                {"matches", matches}};
}

json make_report(const std::string& command, const std::string& digest, json payload,
                 const std::string& summary, double elapsed_ms,
                 const std::vector<std::string>& notes) {
    json j{{"command", command},
           {"input_digest", digest},
           {"result", std::move(payload)},
           {"summary", summary},
           {"elapsed_ms", elapsed_ms}};
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

}  // namespace insdel
