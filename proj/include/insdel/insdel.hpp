#pragma once

// Insdel metric: LCS, pairwise distance, exhaustive code-level distance with
// a witness pair, and the structural search for distance-2 codes.

#include <cstdint>
#include <optional>
#include <vector>

#include "insdel/code.hpp"

namespace insdel {

size_t lcs_len(const Vec& a, const Vec& b);

struct LcsEmbedding {
    size_t length;
    std::vector<size_t> idx_a;  // strictly increasing positions into a
    std::vector<size_t> idx_b;
};

LcsEmbedding lcs_embedding(const Vec& a, const Vec& b);

// d_I(a,b) = 2n - 2*lcs; requires equal lengths.
size_t insdel_distance_pair(const Vec& a, const Vec& b);

struct DistanceWitness {
    size_t distance;
    Vec word_a, word_b;
    size_t lcs_length;
    std::vector<size_t> idx_a, idx_b;  // one realized common subsequence
};

// Exact minimum over all unordered distinct pairs. Words are taken in the
// given order; the witness is the pair with the lexicographically least
// (i, j) index among minimal-distance pairs.
DistanceWitness insdel_distance(const std::vector<Vec>& words,
                                uint64_t pair_budget = kDefaultPairBudget,
                                unsigned threads = 0);

DistanceWitness insdel_distance(const LinearCode& c,
                                uint64_t pair_budget = kDefaultPairBudget,
                                uint64_t enum_budget = kDefaultEnumBudget,
                                unsigned threads = 0);

// Witness that d_I(C) = 2: a codeword c, indices u <= v (1-based) and a
// symbol alpha inducing a nonzero codeword x that shifts c by one position.
struct DistanceTwoCertificate {
    Vec codeword;
    size_t u, v;  // 1-based
    uint32_t alpha;
    Vec induced;  // the nonzero codeword x
};

std::optional<DistanceTwoCertificate> find_distance_two_certificate(
    const LinearCode& c, uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace insdel
