#pragma once

// Explicit code families: the palindromic [2k,k] construction, the odd-length
// [2k+1,k] construction with its parameter validator, and a two-dimensional
// Reed-Solomon example over a large extension field.

#include <cstdint>
#include <string>
#include <vector>

#include "insdel/code.hpp"

namespace insdel {

// All words with c_i = c_{2k-i+1}; contains the all-ones word.
LinearCode palindrome_code(const FieldPtr& field, size_t k);

struct OddConstructionCheck {
    bool valid = false;
    uint32_t total_sum = 0;            // sum of all a_i
    std::vector<uint32_t> per_t_value;  // indexed by t-1, the alternating gap sums
    std::vector<size_t> failing_t;      // t values whose condition equals 1 (1-based)
    bool total_sum_fails = false;
};

// Valid iff sum(a_i) != 1 and, for every t in 1..k, the difference between the
// sums of a_i over {i in [t,k] : k-i odd} and {i in [t,k] : k-i even} is != 1.
OddConstructionCheck check_odd_construction(const FieldPtr& field,
                                            const std::vector<uint32_t>& a);

// Generator [I_k | column a | reversed I_k] of length 2k+1; every codeword c
// satisfies c_{k+1} = sum a_i c_i and c_j = c_{n+1-j} for j >= k+2. Requires
// a valid parameter vector.
LinearCode odd_length_code(const FieldPtr& field, size_t k, const std::vector<uint32_t>& a);

// Deterministic default: a_{k-1} is the least element outside {0,1}, the rest
// zero. Requires q > 2 and k >= 2.
LinearCode default_odd_length(const FieldPtr& field, size_t k);

// Two-dimensional Reed-Solomon code with evaluation points theta^(2^(j-1)),
// j = 1..n, over GF(p^e) with 3*2^(n-2) < e. The field is built on the least
// monic irreducible modulus with a primitive root.
LinearCode rs_two_dim_example(uint32_t p, uint32_t e, size_t n);

}  // namespace insdel
