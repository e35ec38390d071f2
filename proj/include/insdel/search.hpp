#pragma once

// Exhaustive enumeration of binary linear codes as canonical subspaces and
// the optimal-code searches over them.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "insdel/bounds.hpp"

namespace insdel {

enum class BoundKind { Half, Strict };
enum class OnesFilter { None, RequireIn, RequireOut };

// Number of k-dimensional subspaces of GF(2)^n.
uint64_t gaussian_binomial2(size_t n, size_t k);

// Streams every k-dimensional subspace of GF(2)^n exactly once as a canonical
// RREF generator matrix, enumerated by pivot set and free-entry pattern.
void for_each_subspace(size_t n, size_t k, uint64_t enum_budget,
                       const std::function<void(const LinearCode&)>& fn);

struct SearchResult {
    size_t n = 0, k = 0;
    BoundKind bound = BoundKind::Strict;
    OnesFilter filter = OnesFilter::None;
    size_t target_distance = 0;
    uint64_t subspaces_examined = 0;
    std::vector<GfMatrix> matches;  // canonical RREF generators, in stream order
};

// Brute-forces the insdel distance of every subspace passing the filter and
// keeps those attaining the selected bound value (strict additionally
// requires the all-ones word to be absent).
SearchResult find_optimal(size_t n, size_t k, BoundKind bound, OnesFilter filter,
                          uint64_t enum_budget = kDefaultEnumBudget,
                          uint64_t pair_budget = kDefaultPairBudget);

// True iff every k-dimensional subspace of GF(2)^(2k+3) contains two distinct
// codewords with a common subsequence of length >= 2k.
bool all_long_codes_have_close_pair(size_t k, uint64_t enum_budget = kDefaultEnumBudget,
                                    uint64_t pair_budget = kDefaultPairBudget);

struct ProbeRow {
    size_t k, n;
    BoundKind bound;
    uint64_t count;
    bool expected_zero;  // the length conjecture predicts no codes here
};

// For each k <= k_max, counts optimal codes at the boundary lengths; the
// conjecture predicts zero counts at n = 2k+2 (strict) and n = 2k+1 (half).
std::vector<ProbeRow> length_conjecture_probe(size_t k_max,
                                              uint64_t enum_budget = kDefaultEnumBudget,
                                              uint64_t pair_budget = kDefaultPairBudget);

}  // namespace insdel
