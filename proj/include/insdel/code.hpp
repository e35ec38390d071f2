#pragma once

// Linear [n,k] codes given by a full-rank generator matrix, codeword
// enumeration, Hamming metrics, duals and the structural predicates the
// distance bounds depend on.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "insdel/linalg.hpp"

namespace insdel {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultEnumBudget = uint64_t(1) << 22;
inline constexpr uint64_t kDefaultPairBudget = uint64_t(1) << 23;

class LinearCode {
public:
    // Rejects rank-deficient generators.
    LinearCode(FieldPtr field, GfMatrix generator);

    const FieldPtr& field() const { return field_; }
    size_t n() const { return g_.cols(); }
    size_t k() const { return g_.rows(); }
    const GfMatrix& generator() const { return g_; }

    // RREF canonical form; code identity is the row space.
    const GfMatrix& canonical() const { return canon_; }

    uint64_t codeword_count() const;  // q^k, throws BudgetError past 2^62
    Vec encode(const Vec& message) const { return row_times_matrix(field_, message, g_); }

private:
    FieldPtr field_;
    GfMatrix g_;
    GfMatrix canon_;
};

// Streams all q^k (message, codeword) pairs in lexicographic message order
// (last coordinate fastest). Throws BudgetError if q^k exceeds the budget.
void for_each_codeword(const LinearCode& c, uint64_t enum_budget,
                       const std::function<void(const Vec& message, const Vec& word)>& fn);

std::vector<Vec> all_codewords(const LinearCode& c, uint64_t enum_budget = kDefaultEnumBudget);

size_t hamming_weight(const Vec& w);

struct HammingResult {
    size_t distance;
    Vec witness;  // a minimum-weight nonzero codeword
    Vec witness_message;
};

HammingResult hamming_distance(const LinearCode& c, uint64_t enum_budget = kDefaultEnumBudget);

// Generator of the (n-k)-dimensional orthogonal complement; errors when k = n.
LinearCode dual(const LinearCode& c);

// The message x with xG = (1,...,1), when the all-ones word is a codeword.
std::optional<Vec> contains_all_ones(const LinearCode& c);

// All generator columns nonzero and pairwise linearly independent.
bool is_projective(const LinearCode& c);

// Projection onto the 0-based positions of s is surjective, i.e. the selected
// columns are linearly independent (forces |s| <= k).
bool is_information_free(const LinearCode& c, const std::vector<size_t>& s);

// Every (n - d_H + 1)-subset of generator columns has rank k.
bool full_rank_column_property(const LinearCode& c, uint64_t enum_budget = kDefaultEnumBudget);

}  // namespace insdel
