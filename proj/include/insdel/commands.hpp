#pragma once

// Command runners shared by the C API and the test suites. Each returns a
// JSON report plus a status following the CLI exit-code convention:
// 0 success / claims verified, 1 claim failed, 2 input error, 3 budget
// exceeded.

#include <string>

#include <nlohmann/json.hpp>

#include "insdel/io.hpp"

namespace insdel {

struct CommandResult {
    int status = 0;
    nlohmann::json report;
};

struct Budgets {
    uint64_t pairs = kDefaultPairBudget;
    uint64_t enumeration = kDefaultEnumBudget;
};

CommandResult cmd_bounds(const std::string& code_json, const Budgets& b = {});
CommandResult cmd_distance(const std::string& code_json, const Budgets& b = {});
CommandResult cmd_certify(const std::string& code_json);
CommandResult cmd_strict_direct(const std::string& code_json, const Budgets& b = {});
// family in {"palindrome", "odd", "rs-example"}; a_tokens is a space-separated
// element token list for the odd family (empty selects the default choice).
CommandResult cmd_construct(const std::string& family, uint32_t p, uint32_t e, size_t k,
                            const std::string& a_tokens);
CommandResult cmd_search(size_t n, size_t k, const std::string& bound,
                         const std::string& ones_filter, const Budgets& b = {});
CommandResult cmd_verify_example(const std::string& id, const Budgets& b = {});

}  // namespace insdel
