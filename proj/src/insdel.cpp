#include "insdel/insdel.hpp"

#include <algorithm>
#include <thread>

namespace insdel {

size_t lcs_len(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return 0;
    // Rolling single row over the (|a|+1) x (|b|+1) grid.
    std::vector<size_t> row(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        size_t diag = 0;  // row[j-1] from the previous iteration
        for (size_t j = 1; j <= b.size(); ++j) {
            size_t cur = row[j];
            if (a[i - 1] == b[j - 1])
                row[j] = diag + 1;
            else
                row[j] = std::max(row[j], row[j - 1]);
            diag = cur;
        }
    }
    return row[b.size()];
}

LcsEmbedding lcs_embedding(const Vec& a, const Vec& b) {
    size_t na = a.size(), nb = b.size();
    std::vector<std::vector<size_t>> dp(na + 1, std::vector<size_t>(nb + 1, 0));
    for (size_t i = 1; i <= na; ++i)
        for (size_t j = 1; j <= nb; ++j)
            dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1
                                            : std::max(dp[i - 1][j], dp[i][j - 1]);
    LcsEmbedding e{dp[na][nb], {}, {}};
    size_t i = na, j = nb;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1] && dp[i][j] == dp[i - 1][j - 1] + 1) {
            e.idx_a.push_back(i - 1);
            e.idx_b.push_back(j - 1);
            --i;
            --j;
        } else if (dp[i - 1][j] >= dp[i][j - 1]) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(e.idx_a.begin(), e.idx_a.end());
    std::reverse(e.idx_b.begin(), e.idx_b.end());
    return e;
}

size_t insdel_distance_pair(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw FieldError("insdel distance of unequal-length words");
    return 2 * (a.size() - lcs_len(a, b));
}

namespace {

struct PairBest {
    size_t lcs = 0;       // maximal lcs found = minimal distance
    uint64_t pair_index = 0;
    size_t i = 0, j = 0;
    bool found = false;

    void consider(size_t l, uint64_t idx, size_t i_, size_t j_) {
        if (!found || l > lcs || (l == lcs && idx < pair_index)) {
            found = true;
            lcs = l;
            pair_index = idx;
            i = i_;
            j = j_;
        }
    }
};

}  // namespace

DistanceWitness insdel_distance(const std::vector<Vec>& words, uint64_t pair_budget,
                                unsigned threads) {
    size_t m = words.size();
    if (m < 2) throw FieldError("insdel distance needs at least 2 words");
    size_t n = words[0].size();
    for (const Vec& w : words)
        if (w.size() != n) throw FieldError("words of unequal length");
    uint64_t pairs = uint64_t(m) * (m - 1) / 2;
    if (pairs > pair_budget)
        throw BudgetError("pair sweep of " + std::to_string(pairs) + " pairs exceeds budget " +
                          std::to_string(pair_budget));

    // Pairs are flattened in lexicographic (i, j) order; each worker scans a
    // contiguous range, so the merged result is schedule-independent.
    auto scan = [&](uint64_t begin, uint64_t end, PairBest& best) {
        uint64_t idx = 0;
        for (size_t i = 0; i + 1 < m && idx < end; ++i) {
            uint64_t row_len = m - 1 - i;
            if (idx + row_len <= begin) {
                idx += row_len;
                continue;
            }
            for (size_t j = i + 1; j < m && idx < end; ++j, ++idx) {
                if (idx < begin) continue;
                if (words[i] == words[j]) continue;
                best.consider(lcs_len(words[i], words[j]), idx, i, j);
                if (best.lcs == n - 1) return;  // distance 2: nothing beats this
            }
        }
    };

    unsigned nthreads = threads ? threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = unsigned(std::min<uint64_t>(nthreads, std::max<uint64_t>(1, pairs / 4096)));

    PairBest best;
    if (nthreads <= 1) {
        scan(0, pairs, best);
    } else {
        std::vector<PairBest> partial(nthreads);
        std::vector<std::thread> pool;
        uint64_t chunk = (pairs + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(scan, t * chunk, std::min<uint64_t>((t + 1) * chunk, pairs),
                              std::ref(partial[t]));
        for (auto& th : pool) th.join();
        for (const PairBest& p : partial)
            if (p.found) best.consider(p.lcs, p.pair_index, p.i, p.j);
    }

    if (!best.found) throw FieldError("fewer than 2 distinct words");
    auto emb = lcs_embedding(words[best.i], words[best.j]);
    return DistanceWitness{2 * (n - best.lcs), words[best.i], words[best.j],
                           best.lcs, emb.idx_a, emb.idx_b};
}

DistanceWitness insdel_distance(const LinearCode& c, uint64_t pair_budget, uint64_t enum_budget,
                                unsigned threads) {
    return insdel_distance(all_codewords(c, enum_budget), pair_budget, threads);
}

std::optional<DistanceTwoCertificate> find_distance_two_certificate(const LinearCode& c,
                                                                    uint64_t enum_budget) {
    const Field& f = *c.field();
    size_t n = c.n();
    std::optional<DistanceTwoCertificate> result;
    for_each_codeword(c, enum_budget, [&](const Vec&, const Vec& cw) {
        if (result) return;
        for (size_t u = 1; u <= n && !result; ++u)
            for (size_t v = u; v <= n && !result; ++v)
                for (uint64_t alpha = 0; alpha < f.q(); ++alpha) {
                    Vec x(n, 0);
                    for (size_t i = u; i < v; ++i) x[i - 1] = f.sub(cw[i], cw[i - 1]);
                    x[v - 1] = uint32_t(alpha);
                    if (hamming_weight(x) == 0) continue;
                    if (solve_left(c.generator(), x)) {
                        result = DistanceTwoCertificate{cw, u, v, uint32_t(alpha), x};
                        break;
                    }
                }
    });
    return result;
}

}  // namespace insdel
