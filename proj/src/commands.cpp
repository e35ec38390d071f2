#include "insdel/commands.hpp"

#include <chrono>
#include <sstream>

#include "insdel/registry.hpp"

namespace insdel {

using nlohmann::json;

namespace {

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

CommandResult error_report(const std::string& command, int status, const std::string& message) {
    return {status, json{{"command", command}, {"error", message}, {"summary", message}}};
}

// Runs fn, mapping exceptions onto the status convention.
template <typename Fn>
CommandResult guarded(const std::string& command, Fn&& fn) {
    try {
        return fn();
    } catch (const BudgetError& e) {
        return error_report(command, 3, e.what());
    } catch (const FieldError& e) {
        return error_report(command, 2, e.what());
    } catch (const std::exception& e) {
        return error_report(command, 2, e.what());
    }
}

}  // namespace

CommandResult cmd_bounds(const std::string& code_json, const Budgets& b) {
    return guarded("bounds", [&]() -> CommandResult {
        Timer t;
        LinearCode code = load_code_json(code_json);
        BoundReport rep = bound_report(code, b.enumeration);
        std::string summary = rep.envelope_valid
                                  ? "envelope d_I <= " + std::to_string(rep.envelope)
                                  : "no applicable bound";
        return {0, make_report("bounds", input_digest(code_json), to_json(rep), summary, t.ms())};
    });
}

CommandResult cmd_distance(const std::string& code_json, const Budgets& b) {
    return guarded("distance", [&]() -> CommandResult {
        Timer t;
        LinearCode code = load_code_json(code_json);
        DistanceWitness w = insdel_distance(code, b.pairs, b.enumeration);
        return {0, make_report("distance", input_digest(code_json),
                               to_json(*code.field(), w),
                               "d_I = " + std::to_string(w.distance), t.ms())};
    });
}

CommandResult cmd_certify(const std::string& code_json) {
    return guarded("certify", [&]() -> CommandResult {
        Timer t;
        LinearCode code = load_code_json(code_json);
        CertificateReport rep = certify_strict_optimal(code);
        std::string summary =
            rep.pass ? "certified d_I = " + std::to_string(rep.certified_distance)
                     : "certificate failed: " + rep.failure_reason;
        return {rep.pass ? 0 : 1,
                make_report("certify", input_digest(code_json), to_json(code, rep), summary,
                            t.ms(), {CertificateReport::kPairConvention})};
    });
}

CommandResult cmd_strict_direct(const std::string& code_json, const Budgets& b) {
    return guarded("strict-direct", [&]() -> CommandResult {
        Timer t;
        LinearCode code = load_code_json(code_json);
        auto w = strict_direct_bound(code, b.enumeration);
        json payload = w ? to_json(code, *w) : json{{"witness", nullptr}};
        std::string summary = w ? "d_I <= " + std::to_string(w->bound) + " with t = " +
                                      std::to_string(w->pairs.size())
                                : "no gap pair witness";
        std::vector<std::string> notes;
        if (w && w->uses_sentinel_gap)
            notes.push_back("witness uses a gap before the first zero or after the last");
        return {0, make_report("strict-direct", input_digest(code_json), std::move(payload),
                               summary, t.ms(), notes)};
    });
}

CommandResult cmd_construct(const std::string& family, uint32_t p, uint32_t e, size_t k,
                            const std::string& a_tokens) {
    return guarded("construct", [&]() -> CommandResult {
        Timer t;
        std::optional<LinearCode> code;
        if (family == "palindrome") {
            code = palindrome_code(Field::make(p, e), k);
        } else if (family == "odd") {
            FieldPtr f = Field::make(p, e);
            if (a_tokens.empty()) {
                code = default_odd_length(f, k);
            } else {
                std::istringstream in(a_tokens);
                std::vector<uint32_t> a;
                std::string tok;
                while (in >> tok) a.push_back(f->parse(tok));
                code = odd_length_code(f, k, a);
            }
        } else if (family == "rs-example") {
            code = rs_two_dim_example(p, e, k);  // k doubles as the length here
        } else {
            return error_report("construct", 2, "unknown construction family '" + family + "'");
        }
        json code_file = emit_code_json(*code, family);
        json payload{{"n", code->n()}, {"k", code->k()}, {"code_file", code_file}};
        return {0, make_report("construct", input_digest(code_file.dump()), std::move(payload),
                               "[" + std::to_string(code->n()) + "," +
                                   std::to_string(code->k()) + "] code over GF(" +
                                   std::to_string(code->field()->q()) + ")",
                               t.ms())};
    });
}

CommandResult cmd_search(size_t n, size_t k, const std::string& bound,
                         const std::string& ones_filter, const Budgets& b) {
    return guarded("search", [&]() -> CommandResult {
        Timer t;
        BoundKind bk;
        if (bound == "strict")
            bk = BoundKind::Strict;
        else if (bound == "half")
            bk = BoundKind::Half;
        else
            return error_report("search", 2, "bound must be 'strict' or 'half'");
        OnesFilter of;
        if (ones_filter == "none")
            of = OnesFilter::None;
        else if (ones_filter == "require-in")
            of = OnesFilter::RequireIn;
        else if (ones_filter == "require-out")
            of = OnesFilter::RequireOut;
        else
            return error_report("search", 2,
                                "ones filter must be 'none', 'require-in' or 'require-out'");
        SearchResult res = find_optimal(n, k, bk, of, b.enumeration, b.pairs);
        std::string echo = "search " + std::to_string(n) + " " + std::to_string(k) + " " +
                           bound + " " + ones_filter;
        return {0, make_report("search", input_digest(echo), to_json(res),
                               std::to_string(res.matches.size()) + " optimal code(s)", t.ms())};
    });
}

CommandResult cmd_verify_example(const std::string& id, const Budgets& b) {
    return guarded("verify-example", [&]() -> CommandResult {
        Timer t;
        ExampleReport rep = verify_example(id, b.pairs, b.enumeration);
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json payload{{"id", rep.id},
                     {"representation_mismatch", rep.representation_mismatch},
                     {"all_pass", rep.all_pass},
                     {"checks", checks}};
        std::string summary =
            rep.representation_mismatch
                ? "REPRESENTATION MISMATCH: exhibited codeword not in the code"
                : (rep.all_pass ? "all claims verified" : "claim check failed");
        return {rep.all_pass ? 0 : 1,
                make_report("verify-example", input_digest(id), std::move(payload), summary,
                            t.ms())};
    });
}

}  // namespace insdel
