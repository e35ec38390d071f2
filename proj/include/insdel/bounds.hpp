#pragma once

// Upper-bound calculators for the insdel distance of a linear code, the
// determinant-based optimality certifier for the strict half-Singleton bound,
// the gap-pair witness search for the strict direct bound, and the dual-pair
// analyzer.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "insdel/insdel.hpp"

namespace insdel {

// A pair (I, J) of strictly increasing 1-based index vectors together with
// their meet: the coordinate values at componentwise-equal positions.
struct IncreasingPair {
    std::vector<size_t> i, j;
    std::vector<size_t> meet() const;  // values r with i[e] == j[e] == r, in order
};

struct CertificateReport {
    bool pass = false;
    std::string failure_reason;
    uint64_t pairs_examined = 0;
    std::vector<IncreasingPair> qualifying_pairs;  // rank(G at meet columns) < k
    std::optional<IncreasingPair> failure_witness;  // singular M_IJ among qualifying pairs
    size_t certified_distance = 0;                  // 2(n-2k+1) on pass
    // Resolved ambiguities, echoed into every report: pairs are unordered and
    // the I = J case is included.
    static constexpr const char* kPairConvention = "unordered pairs, equal pair included";
};

// Requires n > 2k. Confirms the all-ones word is not in the code, then checks
// det(M_IJ) != 0 for every unordered pair {I, J} of increasing vectors in
// [n]^{2k} whose meet columns have rank < k. On pass, d_I = 2(n-2k+1).
CertificateReport certify_strict_optimal(const LinearCode& c);

// Builds the stacked 2k x 2k matrix of generator columns selected by I over
// those selected by J (1-based index vectors).
GfMatrix stacked_column_matrix(const LinearCode& c, const std::vector<size_t>& i,
                               const std::vector<size_t>& j);

struct StrictDirectWitness {
    Vec min_weight_codeword;
    Vec message;                      // message of the minimum-weight codeword
    std::vector<size_t> zero_positions;  // 1-based, increasing
    std::vector<std::pair<size_t, size_t>> pairs;  // {j_u, w_u}, 1-based
    bool uses_sentinel_gap = false;   // a pair before the first zero or after the last
    Vec solution;                     // v with v*(G_j - G_w) = m*G_w for all pairs
    Vec word1, word2;                 // x1 = vG, x2 = x1 + x
    size_t common_length = 0;         // lcs(x1, x2) >= n - d_H + t
    size_t bound = 0;                 // 2(d_H - t)
};

// Best t >= 1 witness over all minimum-weight codewords, or nullopt.
std::optional<StrictDirectWitness> strict_direct_bound(
    const LinearCode& c, uint64_t enum_budget = kDefaultEnumBudget);

struct BoundEntry {
    bool applicable = false;
    size_t value = 0;
    std::string reason;  // why inapplicable, or the applicability condition met
};

struct BoundReport {
    std::map<std::string, BoundEntry> bounds;
    bool envelope_valid = false;
    size_t envelope = 0;  // min over applicable bounds
};

BoundReport bound_report(const LinearCode& c, uint64_t enum_budget = kDefaultEnumBudget);

struct DualPairReport {
    size_t d_primal = 0, d_dual = 0;
    bool both_correcting = false;  // both distances exceed 2
    // Checked consequences when both_correcting: n = 2k, all-ones word in the
    // code, both distances 4, and the characteristic divides n.
    bool consequences_hold = false;
    std::string detail;
};

DualPairReport dual_pair_analysis(const LinearCode& c,
                                  uint64_t pair_budget = kDefaultPairBudget,
                                  uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace insdel
