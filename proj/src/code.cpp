#include "insdel/code.hpp"

namespace insdel {

LinearCode::LinearCode(FieldPtr field, GfMatrix generator)
    : field_(std::move(field)), g_(std::move(generator)), canon_(rref(g_).first) {
    if (g_.rows() == 0 || g_.cols() == 0) throw FieldError("empty generator matrix");
    if (g_.rows() > g_.cols()) throw FieldError("generator has more rows than columns");
    if (rank(g_) != g_.rows()) throw FieldError("generator matrix is rank deficient");
}

uint64_t LinearCode::codeword_count() const {
    uint64_t count = 1;
    for (size_t i = 0; i < k(); ++i) {
        if (count > (uint64_t(1) << 62) / field_->q())
            throw BudgetError("codeword count overflows enumeration budget");
        count *= field_->q();
    }
    return count;
}

void for_each_codeword(const LinearCode& c, uint64_t enum_budget,
                       const std::function<void(const Vec&, const Vec&)>& fn) {
    const Field& f = *c.field();
    uint64_t total = c.codeword_count();
    if (total > enum_budget)
        throw BudgetError("enumeration of " + std::to_string(total) +
                          " codewords exceeds budget " + std::to_string(enum_budget));
    Vec msg(c.k(), 0);
    Vec word(c.n(), 0);
    fn(msg, word);
    // Odometer over message values; each digit change contributes
    // (new - old) * row to the codeword.
    for (uint64_t it = 1; it < total; ++it) {
        size_t pos = c.k();
        while (pos-- > 0) {
            uint32_t oldv = msg[pos];
            bool done = uint64_t(oldv) + 1 < f.q();
            uint32_t newv = done ? oldv + 1 : 0;
            msg[pos] = newv;
            uint32_t delta = f.sub(newv, oldv);
            for (size_t j = 0; j < c.n(); ++j)
                word[j] = f.add(word[j], f.mul(delta, c.generator().at(pos, j)));
            if (done) break;
        }
        fn(msg, word);
    }
}

std::vector<Vec> all_codewords(const LinearCode& c, uint64_t enum_budget) {
    std::vector<Vec> words;
    words.reserve(size_t(c.codeword_count()));
    for_each_codeword(c, enum_budget, [&](const Vec&, const Vec& w) { words.push_back(w); });
    return words;
}

size_t hamming_weight(const Vec& w) {
    size_t s = 0;
    for (uint32_t x : w) s += x != 0;
    return s;
}

HammingResult hamming_distance(const LinearCode& c, uint64_t enum_budget) {
    HammingResult best{c.n() + 1, {}, {}};
    for_each_codeword(c, enum_budget, [&](const Vec& m, const Vec& w) {
        size_t wt = hamming_weight(w);
        if (wt > 0 && wt < best.distance) {
            best.distance = wt;
            best.witness = w;
            best.witness_message = m;
        }
    });
    return best;
}

LinearCode dual(const LinearCode& c) {
    if (c.k() == c.n()) throw FieldError("dual of the full space is the zero code");
    auto basis = left_kernel(c.generator().transpose());
    GfMatrix gd(c.field(), basis.size(), c.n());
    for (size_t r = 0; r < basis.size(); ++r)
        for (size_t j = 0; j < c.n(); ++j) gd.at(r, j) = basis[r][j];
    return LinearCode(c.field(), gd);
}

std::optional<Vec> contains_all_ones(const LinearCode& c) {
    return solve_left(c.generator(), Vec(c.n(), 1));
}

bool is_projective(const LinearCode& c) {
    const GfMatrix& g = c.generator();
    for (size_t i = 0; i < c.n(); ++i)
        for (size_t j = i; j < c.n(); ++j) {
            GfMatrix two = g.columns(i == j ? std::vector<size_t>{i} : std::vector<size_t>{i, j});
            if (rank(two) < two.cols()) return false;
        }
    return true;
}

bool is_information_free(const LinearCode& c, const std::vector<size_t>& s) {
    if (s.size() > c.k()) return false;
    if (s.empty()) return true;
    return rank(c.generator().columns(s)) == s.size();
}

namespace {

// Visits all size-r subsets of {0..n-1}.
bool for_each_subset(size_t n, size_t r, const std::function<bool(const std::vector<size_t>&)>& fn) {
    if (r > n) return true;
    if (r == 0) return fn({});
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        size_t i = r;
        while (i-- > 0) {
            if (idx[i] + (r - i) < n) {
                ++idx[i];
                for (size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

}  // namespace

bool full_rank_column_property(const LinearCode& c, uint64_t enum_budget) {
    size_t d = hamming_distance(c, enum_budget).distance;
    size_t s = c.n() - d + 1;
    if (s > c.n()) return true;
    return for_each_subset(c.n(), s, [&](const std::vector<size_t>& idx) {
        return rank(c.generator().columns(idx)) == c.k();
    });
}

}  // namespace insdel
