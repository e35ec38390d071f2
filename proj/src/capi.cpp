#include "insdel/insdel_c.h"

#include <cstring>
#include <new>

#include "insdel/commands.hpp"

using namespace insdel;

struct insdel_code {
    LinearCode code;
    std::string source_json;  // canonical code-file JSON
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** out, const std::string& s) {
    if (out) *out = dup_string(s);
}

insdel_status finish(const CommandResult& res, char** report_out) {
    set_out(report_out, res.report.dump(2));
    return res.status;
}

}  // namespace

extern "C" {

insdel_status insdel_code_load_json(const char* json_text, insdel_code** code_out,
                                    char** error_out) {
    if (!json_text || !code_out) {
        set_out(error_out, "null argument");
        return INSDEL_ERR_INPUT;
    }
    try {
        LinearCode code = load_code_json(std::string(json_text));
        std::string canonical = emit_code_json(code).dump();
        *code_out = new insdel_code{std::move(code), std::move(canonical)};
        return INSDEL_OK;
    } catch (const BudgetError& e) {
        set_out(error_out, e.what());
        return INSDEL_ERR_BUDGET;
    } catch (const std::exception& e) {
        set_out(error_out, e.what());
        return INSDEL_ERR_INPUT;
    }
}

insdel_status insdel_code_construct(const char* family, uint32_t p, uint32_t e, size_t k,
                                    const char* a_tokens, insdel_code** code_out,
                                    char** error_out) {
    if (!family || !code_out) {
        set_out(error_out, "null argument");
        return INSDEL_ERR_INPUT;
    }
    CommandResult res = cmd_construct(family, p, e, k, a_tokens ? a_tokens : "");
    if (res.status != 0) {
        set_out(error_out, res.report.value("error", "construction failed"));
        return res.status;
    }
    std::string code_file = res.report["result"]["code_file"].dump();
    return insdel_code_load_json(code_file.c_str(), code_out, error_out);
}

void insdel_code_free(insdel_code* code) { delete code; }

size_t insdel_code_length(const insdel_code* code) { return code ? code->code.n() : 0; }
size_t insdel_code_dimension(const insdel_code* code) { return code ? code->code.k() : 0; }

insdel_status insdel_code_emit_json(const insdel_code* code, char** json_out) {
    if (!code || !json_out) return INSDEL_ERR_INPUT;
    set_out(json_out, emit_code_json(code->code).dump(2));
    return INSDEL_OK;
}

insdel_status insdel_run_bounds(const insdel_code* code, uint64_t enum_budget,
                                char** report_out) {
    if (!code) return INSDEL_ERR_INPUT;
    Budgets b;
    if (enum_budget) b.enumeration = enum_budget;
    return finish(cmd_bounds(code->source_json, b), report_out);
}

insdel_status insdel_run_distance(const insdel_code* code, uint64_t pair_budget,
                                  uint64_t enum_budget, char** report_out) {
    if (!code) return INSDEL_ERR_INPUT;
    Budgets b;
    if (pair_budget) b.pairs = pair_budget;
    if (enum_budget) b.enumeration = enum_budget;
    return finish(cmd_distance(code->source_json, b), report_out);
}

insdel_status insdel_run_certify(const insdel_code* code, char** report_out) {
    if (!code) return INSDEL_ERR_INPUT;
    return finish(cmd_certify(code->source_json), report_out);
}

insdel_status insdel_run_strict_direct(const insdel_code* code, uint64_t enum_budget,
                                       char** report_out) {
    if (!code) return INSDEL_ERR_INPUT;
    Budgets b;
    if (enum_budget) b.enumeration = enum_budget;
    return finish(cmd_strict_direct(code->source_json, b), report_out);
}

insdel_status insdel_run_search(size_t n, size_t k, const char* bound, const char* ones_filter,
                                uint64_t enum_budget, uint64_t pair_budget, char** report_out) {
    if (!bound || !ones_filter) return INSDEL_ERR_INPUT;
    Budgets b;
    if (enum_budget) b.enumeration = enum_budget;
    if (pair_budget) b.pairs = pair_budget;
    return finish(cmd_search(n, k, bound, ones_filter, b), report_out);
}

insdel_status insdel_run_verify_example(const char* example_id, uint64_t pair_budget,
                                        uint64_t enum_budget, char** report_out) {
    if (!example_id) return INSDEL_ERR_INPUT;
    Budgets b;
    if (pair_budget) b.pairs = pair_budget;
    if (enum_budget) b.enumeration = enum_budget;
    return finish(cmd_verify_example(example_id, b), report_out);
}

insdel_status insdel_run_construct(const char* family, uint32_t p, uint32_t e, size_t k,
                                   const char* a_tokens, char** report_out) {
    if (!family) return INSDEL_ERR_INPUT;
    return finish(cmd_construct(family, p, e, k, a_tokens ? a_tokens : ""), report_out);
}

char* insdel_report_summary(const char* report_json) {
    if (!report_json) return nullptr;
    try {
        auto j = nlohmann::json::parse(report_json);
        return dup_string(j.value("summary", ""));
    } catch (const std::exception&) {
        return nullptr;
    }
}

void insdel_string_free(char* s) { delete[] s; }

const char* insdel_status_name(insdel_status status) {
    switch (status) {
        case INSDEL_OK: return "ok";
        case INSDEL_ERR_CLAIM: return "claim-failed";
        case INSDEL_ERR_INPUT: return "input-error";
        case INSDEL_ERR_BUDGET: return "budget-exceeded";
        default: return "unknown";
    }
}

}  // extern "C"
