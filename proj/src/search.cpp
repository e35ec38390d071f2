#include "insdel/search.hpp"

namespace insdel {

uint64_t gaussian_binomial2(size_t n, size_t k) {
    if (k > n) return 0;
    // prod (2^n - 2^i) / (2^k - 2^i), computed as a product of integer ratios
    // (2^(n-i) - 1) / (2^(k-i) - 1) * 2^... ; use the recurrence instead.
    // [n k]_2 = [n-1 k-1]_2 + 2^k [n-1 k]_2
    std::vector<std::vector<uint64_t>> g(n + 1, std::vector<uint64_t>(k + 1, 0));
    for (size_t i = 0; i <= n; ++i) g[i][0] = 1;
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = 1; j <= std::min(i, k); ++j)
            g[i][j] = g[i - 1][j - 1] + (j <= i - 1 ? (uint64_t(1) << j) * g[i - 1][j] : 0);
    return g[n][k];
}

void for_each_subspace(size_t n, size_t k, uint64_t enum_budget,
                       const std::function<void(const LinearCode&)>& fn) {
    if (k < 1 || k > n) throw FieldError("need 1 <= k <= n");
    uint64_t total = gaussian_binomial2(n, k);
    if (total > enum_budget)
        throw BudgetError("subspace enumeration of " + std::to_string(total) +
                          " exceeds budget " + std::to_string(enum_budget));
    FieldPtr f2 = Field::make(2, 1);

    // Pivot sets shard the enumeration; free entries are the positions right
    // of each pivot that are not pivot columns themselves.
    std::vector<size_t> pivots(k);
    for (size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::pair<size_t, size_t>> free_cells;
        for (size_t r = 0; r < k; ++r)
            for (size_t c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);

        GfMatrix g(f2, k, n);
        for (size_t r = 0; r < k; ++r) g.at(r, pivots[r]) = 1;
        uint64_t patterns = uint64_t(1) << free_cells.size();
        for (uint64_t bits = 0; bits < patterns; ++bits) {
            for (size_t c = 0; c < free_cells.size(); ++c)
                g.at(free_cells[c].first, free_cells[c].second) = (bits >> c) & 1;
            fn(LinearCode(f2, g));
        }

        size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (pivots[i] + (k - i) < n) {
                ++pivots[i];
                for (size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

SearchResult find_optimal(size_t n, size_t k, BoundKind bound, OnesFilter filter,
                          uint64_t enum_budget, uint64_t pair_budget) {
    SearchResult res;
    res.n = n;
    res.k = k;
    res.bound = bound;
    res.filter = filter;
    size_t base = bound == BoundKind::Strict ? (n >= 2 * k ? 2 * (n - 2 * k + 1) : 0)
                                             : (n + 2 >= 2 * k ? 2 * (n - 2 * k + 2) : 0);
    res.target_distance = std::max<size_t>(base, 2);

    for_each_subspace(n, k, enum_budget, [&](const LinearCode& c) {
        ++res.subspaces_examined;
        bool has_ones = contains_all_ones(c).has_value();
        if (filter == OnesFilter::RequireIn && !has_ones) return;
        if (filter == OnesFilter::RequireOut && has_ones) return;
        if (bound == BoundKind::Strict && has_ones) return;  // bound needs 1 absent
        if (insdel_distance(c, pair_budget, enum_budget).distance == res.target_distance)
            res.matches.push_back(c.canonical());
    });
    return res;
}

bool all_long_codes_have_close_pair(size_t k, uint64_t enum_budget, uint64_t pair_budget) {
    size_t n = 2 * k + 3;
    bool ok = true;
    for_each_subspace(n, k, enum_budget, [&](const LinearCode& c) {
        if (!ok) return;
        // two distinct codewords with lcs >= 2k  <=>  d_I <= 2(n - 2k) = 6
        if (insdel_distance(c, pair_budget, enum_budget).lcs_length < 2 * k) ok = false;
    });
    return ok;
}

std::vector<ProbeRow> length_conjecture_probe(size_t k_max, uint64_t enum_budget,
                                              uint64_t pair_budget) {
    std::vector<ProbeRow> rows;
    for (size_t k = 1; k <= k_max; ++k) {
        auto count = [&](size_t n, BoundKind b) {
            OnesFilter filt = b == BoundKind::Strict ? OnesFilter::RequireOut : OnesFilter::None;
            return uint64_t(find_optimal(n, k, b, filt, enum_budget, pair_budget).matches.size());
        };
        rows.push_back({k, 2 * k + 1, BoundKind::Strict, count(2 * k + 1, BoundKind::Strict), false});
        rows.push_back({k, 2 * k + 2, BoundKind::Strict, count(2 * k + 2, BoundKind::Strict), true});
        rows.push_back({k, 2 * k, BoundKind::Half, count(2 * k, BoundKind::Half), false});
        rows.push_back({k, 2 * k + 1, BoundKind::Half, count(2 * k + 1, BoundKind::Half), true});
    }
    return rows;
}

}  // namespace insdel
