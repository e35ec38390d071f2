#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "insdel/bounds.hpp"
#include "insdel/registry.hpp"
#include "insdel/search.hpp"

using namespace insdel;

namespace {

LinearCode binary(std::initializer_list<Vec> rows) {
    auto f = Field::make(2, 1);
    size_t n = rows.begin()->size();
    GfMatrix g(f, rows.size(), n);
    size_t r = 0;
    for (const auto& row : rows) {
        for (size_t c = 0; c < n; c++) g.at(r, c) = row[c];
        r++;
    }
    return LinearCode(f, g);
}

}  // namespace

TEST_CASE("meet of increasing index vectors") {
    IncreasingPair p{{1, 2, 3, 4}, {2, 3, 4, 5}};
    CHECK(p.meet().empty());
    IncreasingPair q{{1, 2, 3, 4}, {1, 3, 4, 5}};
    CHECK(q.meet() == std::vector<size_t>{1});
    IncreasingPair r{{1, 2, 3, 5}, {2, 3, 4, 5}};
    CHECK(r.meet() == std::vector<size_t>{5});
    IncreasingPair s{{1, 2, 3, 4}, {1, 2, 3, 4}};
    CHECK(s.meet() == std::vector<size_t>{1, 2, 3, 4});
}

TEST_CASE("stacked column matrices") {
    LinearCode c = binary({{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}});
    GfMatrix m = stacked_column_matrix(c, {1, 2, 3, 4}, {2, 3, 4, 5});
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 4);
    CHECK(m.at(0, 0) == c.generator().at(0, 0));
    CHECK(m.at(2, 0) == c.generator().at(0, 1));  // rows k.. come from J
    CHECK(det(stacked_column_matrix(c, {1, 2, 3, 4}, {1, 2, 3, 4})) == 0);
}

TEST_CASE("certifier passes on the reference codes") {
    for (const char* id : {"ex1-gf49", "ex2-gf121", "ex3-gf169"}) {
        LinearCode c = example_code(id);
        auto rep = certify_strict_optimal(c);
        CHECK(rep.pass);
        CHECK(rep.certified_distance == 2 * (c.n() - 2 * c.k() + 1));
        CHECK(rep.pairs_examined > 0);
        if (std::string(id) == "ex1-gf49") {
            REQUIRE(rep.qualifying_pairs.size() == 3);
            std::vector<std::vector<size_t>> meets;
            for (const auto& p : rep.qualifying_pairs) meets.push_back(p.meet());
            std::sort(meets.begin(), meets.end());
            CHECK(meets[0] == std::vector<size_t>{});
            CHECK(meets[1] == std::vector<size_t>{1});
            CHECK(meets[2] == std::vector<size_t>{5});
        }
    }
}

TEST_CASE("certifier failure modes") {
    // repeated columns make a qualifying stacked matrix singular
    LinearCode dup = binary({{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}});
    auto rep = certify_strict_optimal(dup);
    CHECK(!rep.pass);
    REQUIRE(rep.failure_witness.has_value());
    GfMatrix m = stacked_column_matrix(dup, rep.failure_witness->i, rep.failure_witness->j);
    CHECK(det(m) == 0);
    auto meet = rep.failure_witness->meet();
    std::vector<size_t> meet0;
    for (size_t v : meet) meet0.push_back(v - 1);
    CHECK(rank(dup.generator().columns(meet0)) < dup.k());

    // all-ones word inside the code is an automatic failure
    LinearCode ones = binary({{1, 1, 1, 1, 1}, {0, 1, 0, 1, 0}});
    auto rep2 = certify_strict_optimal(ones);
    CHECK(!rep2.pass);
    CHECK(rep2.failure_reason.find("all-ones") != std::string::npos);

    // shape requirement n > 2k
    CHECK_THROWS_AS((void)certify_strict_optimal(binary({{1, 1, 0, 0}, {0, 0, 1, 1}})),
                    FieldError);
}

TEST_CASE("a passing certificate implies the exact distance") {
    // every certified code must brute-force to the certified value
    for_each_subspace(5, 2, kDefaultEnumBudget, [&](const LinearCode& c) {
        auto rep = certify_strict_optimal(c);
        if (rep.pass) CHECK(insdel_distance(c).distance == rep.certified_distance);
    });
}

TEST_CASE("strict-direct witness on the reference code") {
    LinearCode c = example_code("ex-11-4-binary");
    auto w = strict_direct_bound(c);
    REQUIRE(w.has_value());
    CHECK(w->pairs.size() == 2);
    CHECK(w->bound == 4);
    CHECK(hamming_weight(w->min_weight_codeword) == 4);
    CHECK(w->common_length >= c.n() - 4 + w->pairs.size());
    CHECK(lcs_len(w->word1, w->word2) == w->common_length);
    // both witness words are codewords differing by the minimum-weight word
    const auto& f = c.field();
    CHECK(solve_left(c.generator(), w->word1).has_value());
    CHECK(solve_left(c.generator(), w->word2).has_value());
    Vec diff(c.n());
    for (size_t i = 0; i < c.n(); i++) diff[i] = f->sub(w->word2[i], w->word1[i]);
    CHECK(diff == w->min_weight_codeword);
    // pairs are information-free and sit strictly between zero positions
    std::vector<size_t> flat;
    for (auto [a, b] : w->pairs) {
        flat.push_back(a - 1);
        flat.push_back(b - 1);
        CHECK(w->min_weight_codeword[a - 1] != 0);
        CHECK(w->min_weight_codeword[b - 1] != 0);
    }
    CHECK(is_information_free(c, flat));
}

TEST_CASE("strict-direct witness absent for isolated supports") {
    // single nonzero coordinate between consecutive zeros everywhere
    auto f = Field::make(2, 1);
    LinearCode rep(f, GfMatrix(f, 1, 3, {0, 1, 0}));
    CHECK(!strict_direct_bound(rep).has_value());
    LinearCode alt(f, GfMatrix(f, 1, 5, {1, 0, 1, 0, 1}));
    CHECK(!strict_direct_bound(alt).has_value());
}

TEST_CASE("strict-direct bound is sound on small codes") {
    for (size_t n = 3; n <= 6; n++)
        for (size_t k = 1; k <= 3 && k <= n - 1; k++)
            for_each_subspace(n, k, kDefaultEnumBudget, [&](const LinearCode& c) {
                auto w = strict_direct_bound(c);
                if (w) {
                    CHECK(insdel_distance(c).distance <= w->bound);
                    CHECK(2 * w->pairs.size() <= c.k());
                }
            });
}

TEST_CASE("bound report on known shapes") {
    auto rep = bound_report(binary({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}));
    CHECK(rep.bounds.at("strict_half_singleton").applicable);
    CHECK(rep.bounds.at("strict_half_singleton").value == 4);
    CHECK(rep.bounds.at("half_singleton").value == 6);
    CHECK(rep.bounds.at("direct_singleton").value == 8);
    CHECK(rep.bounds.at("improved_singleton").value == 6);
    CHECK(rep.envelope_valid);
    CHECK(rep.envelope <= 4);

    auto rep2 = bound_report(binary({{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(!rep2.bounds.at("strict_half_singleton").applicable);  // all-ones in code
    CHECK(rep2.bounds.at("half_singleton").value == 4);

    // [3,2]: half bound floors at 2
    auto rep3 = bound_report(binary({{1, 0, 1}, {0, 1, 1}}));
    CHECK(rep3.bounds.at("half_singleton").value == 2);

    // projective with large Hamming distance: 2(d_H - 1) applies
    auto f7 = Field::make(7, 1);
    GfMatrix rs(f7, 2, 5);
    for (uint32_t j = 0; j < 5; j++) {
        rs.at(0, j) = 1;
        rs.at(1, j) = j;
    }
    auto rep4 = bound_report(LinearCode(f7, rs));  // d_H = 4 > 3
    CHECK(rep4.bounds.at("direct").value == 8);
    CHECK(rep4.bounds.at("projective_strict_direct").applicable);
    CHECK(rep4.bounds.at("projective_strict_direct").value == 6);

    // tiny budget: enumeration-based entries become inapplicable, not fatal
    auto rep5 = bound_report(example_code("ex2-gf121"), 100);
    CHECK(!rep5.bounds.at("direct").applicable);
    CHECK(rep5.bounds.at("direct").reason.find("budget") != std::string::npos);
    CHECK(rep5.envelope_valid);  // singleton-style bounds still apply
}

TEST_CASE("every applicable bound dominates the true distance") {
    for (size_t n = 3; n <= 5; n++)
        for (size_t k = 1; k <= n - 1; k++)
            for_each_subspace(n, k, kDefaultEnumBudget, [&](const LinearCode& c) {
                size_t d = insdel_distance(c).distance;
                auto rep = bound_report(c);
                for (const auto& [name, entry] : rep.bounds)
                    if (entry.applicable) CHECK(d <= entry.value);
                CHECK(rep.envelope_valid);
                CHECK(d <= rep.envelope);
            });
}

TEST_CASE("dual pair analysis") {
    auto both = dual_pair_analysis(binary({{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(both.d_primal == 4);
    CHECK(both.d_dual == 4);
    CHECK(both.both_correcting);
    CHECK(both.consequences_hold);

    auto rep = dual_pair_analysis(binary({{1, 1, 1}}));
    CHECK(!rep.both_correcting);  // dual [3,2] has distance 2

    auto t1 = dual_pair_analysis(binary({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}));
    CHECK(t1.d_primal == 4);
    CHECK(!t1.both_correcting);  // n odd: dual cannot also correct
}
