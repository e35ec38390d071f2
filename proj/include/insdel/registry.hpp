#pragma once

// Built-in registry of the reference codes and word sets exercised by the
// verify-example command, with their designated checks.

#include <string>
#include <vector>

#include "insdel/insdel.hpp"

namespace insdel {

std::vector<std::string> example_ids();

// The registered linear code for ex1-gf49, ex2-gf121, ex3-gf169 and
// ex-11-4-binary; throws on unknown or non-code ids.
LinearCode example_code(const std::string& id);

struct ExampleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::string id;
    bool representation_mismatch = false;  // an exhibited codeword is not in the code
    bool all_pass = false;
    std::vector<ExampleCheck> checks;
};

ExampleReport verify_example(const std::string& id,
                             uint64_t pair_budget = kDefaultPairBudget,
                             uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace insdel
