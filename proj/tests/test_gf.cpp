#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "insdel/gf.hpp"

using namespace insdel;

namespace {

// Polynomial arithmetic on coefficient vectors, independent of Field's tables.
std::vector<uint32_t> digits(uint32_t x, uint32_t p, uint32_t e) {
    std::vector<uint32_t> d(e);
    for (uint32_t i = 0; i < e; i++) { d[i] = x % p; x /= p; }
    return d;
}

uint32_t undigits(const std::vector<uint32_t>& d, uint32_t p) {
    uint32_t x = 0;
    for (size_t i = d.size(); i-- > 0;) x = x * p + d[i];
    return x;
}

uint32_t poly_mul_mod(uint32_t a, uint32_t b, const Field& f) {
    uint32_t p = f.p(), e = f.e();
    auto da = digits(a, p, e), db = digits(b, p, e);
    std::vector<uint32_t> prod(2 * e - 1, 0);
    for (uint32_t i = 0; i < e; i++)
        for (uint32_t j = 0; j < e; j++) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& m = f.modulus();  // monic, ascending, degree e
    for (size_t d = prod.size(); d-- > e;) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < e; i++)
            prod[d - e + i] = (prod[d - e + i] + c * (p - m[i] % p)) % p;
    }
    prod.resize(e);
    return undigits(prod, p);
}

}  // namespace

TEST_CASE("prime fields use the least primitive root") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->generator() == 1);
    auto f7 = Field::make(7, 1);
    CHECK(f7->generator() == 3);  // 3 is the least primitive root mod 7
    CHECK(f7->element_order(3) == 6);
    auto f13 = Field::make(13, 1);
    CHECK(f13->generator() == 2);
}

TEST_CASE("built-in quadratic extensions") {
    auto f49 = Field::make(7, 2);
    CHECK(f49->q() == 49);
    CHECK(f49->modulus() == std::vector<uint32_t>{3, 6, 1});
    CHECK(f49->element_order(f49->generator()) == 48);
    // the generator is a root of the modulus: w^2 + 6w + 3 = 0
    uint32_t w = f49->generator();
    CHECK(f49->add(f49->add(f49->mul(w, w), f49->mul(6, w)), 3) == 0);

    auto f121 = Field::make(11, 2);
    CHECK(f121->modulus() == std::vector<uint32_t>{2, 7, 1});
    CHECK(f121->element_order(f121->generator()) == 120);

    auto f169 = Field::make(13, 2);
    CHECK(f169->modulus() == std::vector<uint32_t>{2, 12, 1});
    CHECK(f169->element_order(f169->generator()) == 168);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS((void)Field::make(4, 1), FieldError);   // not prime
    CHECK_THROWS_AS((void)Field::make(1, 1), FieldError);
    // x^2 - 1 = (x-1)(x+1) is reducible over GF(7)
    CHECK_THROWS_AS((void)Field::make(7, 2, {{6, 0, 1}}), FieldError);
    // non-monic
    CHECK_THROWS_AS((void)Field::make(7, 2, {{3, 6, 2}}), FieldError);
    // x^2 + 1 is irreducible over GF(7) but its root has order 4, not 48
    CHECK_THROWS_AS((void)Field::make(7, 2, {{1, 0, 1}}), FieldError);
    // no default modulus for this extension
    CHECK_THROWS_AS((void)Field::make(5, 2), FieldError);
}

TEST_CASE("basic arithmetic identities in GF(49)") {
    auto f = Field::make(7, 2);
    CHECK(f->add(1, 1) == 2);
    CHECK(f->mul(0, f->generator()) == 0);
    CHECK(f->pow(f->generator(), 0) == 1);
    CHECK_THROWS_AS((void)f->inv(0), FieldError);
    CHECK_THROWS_AS((void)f->div(1, 0), FieldError);
    CHECK_THROWS_AS((void)f->dlog(0), FieldError);
    // known products in power notation
    CHECK(f->mul(f->pow(f->generator(), 28), f->pow(f->generator(), 10)) ==
          f->pow(f->generator(), 38));
    CHECK(f->inv(f->pow(f->generator(), 13)) == f->pow(f->generator(), 35));
}

TEST_CASE("field axioms hold exhaustively") {
    for (auto f : {Field::make(2, 1), Field::make(7, 1), Field::make(7, 2),
                   Field::make(11, 2), Field::make(13, 2)}) {
        uint32_t q = uint32_t(f->q());
        for (uint32_t x = 0; x < q; x++) {
            CHECK(f->add(x, 0) == x);
            CHECK(f->mul(x, 1) == x);
            CHECK(f->add(x, f->neg(x)) == 0);
            CHECK(f->sub(x, x) == 0);
            if (x) {
                CHECK(f->mul(x, f->inv(x)) == 1);
                CHECK(f->pow(f->generator(), f->dlog(x)) == x);
            }
        }
        for (uint32_t x = 0; x < q; x++)
            for (uint32_t y = 0; y < q; y++) {
                CHECK(f->add(x, y) == f->add(y, x));
                CHECK(f->mul(x, y) == f->mul(y, x));
                CHECK(f->sub(x, y) == f->add(x, f->neg(y)));
            }
        // associativity and distributivity on a strided triple sample plus
        // the full product set for the two smallest fields
        uint32_t step = q <= 49 ? 1 : 7;
        for (uint32_t x = 0; x < q; x += step)
            for (uint32_t y = 0; y < q; y += step)
                for (uint32_t z = 0; z < q; z += step) {
                    CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
                    CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
                    CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
                }
    }
}

TEST_CASE("table multiplication agrees with polynomial multiplication") {
    for (auto f : {Field::make(7, 2), Field::make(13, 2)}) {
        uint32_t q = uint32_t(f->q());
        for (uint32_t x = 0; x < q; x++)
            for (uint32_t y = 0; y < q; y++) {
                CHECK(f->mul(x, y) == f->mul_poly(x, y));
                CHECK(f->mul(x, y) == poly_mul_mod(x, y, *f));
            }
    }
}

TEST_CASE("powers of w enumerate the nonzero elements exactly once") {
    for (auto f : {Field::make(7, 1), Field::make(7, 2), Field::make(11, 2)}) {
        std::vector<bool> seen(f->q(), false);
        for (uint64_t i = 0; i + 1 < f->q(); i++) {
            uint32_t x = f->pow(f->generator(), i);
            CHECK(x != 0);
            CHECK(!seen[x]);
            seen[x] = true;
        }
    }
}

TEST_CASE("parse and format round-trip exhaustively") {
    for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(7, 2),
                   Field::make(11, 2), Field::make(13, 2)}) {
        for (uint32_t x = 0; x < f->q(); x++) CHECK(f->parse(f->format(x)) == x);
        CHECK(f->format(0) == "0");
        CHECK(f->format(1) == "1");
        CHECK(f->parse("w^0") == 1);
        // decimal tokens mean repeated addition of 1 in the prime subfield
        CHECK(f->parse("2") == f->add(1, 1));
        CHECK_THROWS_AS((void)f->parse("bogus"), FieldError);
        CHECK_THROWS_AS((void)f->parse("w^"), FieldError);
        CHECK_THROWS_AS((void)f->parse(""), FieldError);
    }
}

TEST_CASE("element order and primitivity") {
    auto f = Field::make(7, 2);
    CHECK(f->element_order(1) == 1);
    CHECK(f->is_primitive(f->generator()));
    CHECK(!f->is_primitive(f->mul(f->generator(), f->generator())));  // order 24
    CHECK(!f->is_primitive(0));
    CHECK(f->element_order(f->pow(f->generator(), 2)) == 24);
}

TEST_CASE("field elements refuse mixed-field arithmetic") {
    auto f1 = Field::make(7, 2);
    auto f2 = Field::make(7, 2);  // distinct instance, same parameters
    FieldElement a(f1, 3), b(f2, 4), c(f1, 4);
    CHECK((a + c).value() == f1->add(3, 4));
    CHECK((a * c).value() == f1->mul(3, 4));
    CHECK((-a).value() == f1->neg(3));
    CHECK_THROWS_AS((void)(a + b), FieldError);
    CHECK_THROWS_AS((void)(a == b), FieldError);
}
