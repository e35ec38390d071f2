#include "insdel/gf.hpp"

#include <algorithm>
#include <charconv>

namespace insdel {

namespace {

constexpr uint64_t kTableLimit = uint64_t(1) << 20;

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), ascending coefficients, no trailing zeros.
using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = uint32_t((r[i + j] + uint64_t(f[i]) * g[j]) % p);
    trim(r);
    return r;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // p is prime, a != 0
    uint32_t r = 1;
    uint64_t base = a % p, n = p - 2;
    while (n) {
        if (n & 1) r = uint32_t(r * base % p);
        base = base * base % p;
        n >>= 1;
    }
    return r;
}

Poly poly_mod(Poly f, const Poly& m, uint32_t p) {
    uint32_t lead_inv = mod_inverse(m.back(), p);
    while (f.size() >= m.size()) {
        uint32_t c = uint32_t(uint64_t(f.back()) * lead_inv % p);
        size_t shift = f.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t sub = uint64_t(c) * m[i] % p;
            f[shift + i] = uint32_t((f[shift + i] + p - sub) % p);
        }
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

// Trial division by all monic polynomials of degree <= deg(m)/2.
bool poly_irreducible(const Poly& m, uint32_t p) {
    size_t deg = m.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // enumerate monic divisors of degree d, coefficients via odometer
    for (size_t d = 1; 2 * d <= deg; ++d) {
        std::vector<uint32_t> coeff(d, 0);
        while (true) {
            Poly cand(coeff.begin(), coeff.end());
            cand.push_back(1);
            if (poly_mod(m, cand, p).empty()) return false;
            size_t i = 0;
            for (; i < d; ++i) {
                if (++coeff[i] < p) break;
                coeff[i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

std::optional<std::vector<uint32_t>> default_modulus(uint32_t p, uint32_t e) {
    if (p == 7 && e == 2) return std::vector<uint32_t>{3, 6, 1};
    if (p == 11 && e == 2) return std::vector<uint32_t>{2, 7, 1};
    if (p == 13 && e == 2) return std::vector<uint32_t>{2, 12, 1};
    return std::nullopt;
}

}  // namespace

FieldPtr Field::make(uint32_t p, uint32_t e, std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw FieldError("extension degree must be >= 1");

    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kTableLimit) throw FieldError("field size exceeds 2^20");
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = q;

    if (e == 1) {
        if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1 && (*modulus)[0] == 0))
            throw FieldError("prime fields use the x - 0 modulus convention");
        f->modulus_ = {0, 1};
    } else {
        if (!modulus) {
            modulus = default_modulus(p, e);
            if (!modulus)
                throw FieldError("no built-in modulus for GF(" + std::to_string(p) + "^" +
                                 std::to_string(e) + "); supply one");
        }
        if (modulus->size() != e + 1) throw FieldError("modulus degree must equal e");
        if (modulus->back() != 1) throw FieldError("modulus must be monic");
        for (uint32_t c : *modulus)
            if (c >= p) throw FieldError("modulus coefficient out of range");
        if (!poly_irreducible(*modulus, p)) throw FieldError("modulus is reducible over GF(p)");
        f->modulus_ = *modulus;
    }

    // Designated primitive element: the modulus root x for e > 1, the least
    // primitive residue for e = 1. Tables double as the primitivity check.
    auto build_tables = [&](uint32_t w) -> bool {
        f->w_ = w;
        f->exp_.assign(q - 1, 0);
        f->log_.assign(q, 0);
        uint32_t x = 1;
        for (uint64_t i = 0; i < q - 1; ++i) {
            if (x == 1 && i > 0) return false;  // order of w divides i < q-1
            f->exp_[i] = x;
            f->log_[x] = uint32_t(i);
            x = f->mul_poly(x, w);
        }
        return x == 1;  // w^(q-1) = 1
    };

    if (e == 1) {
        bool found = false;
        for (uint32_t w = 1; w < p; ++w) {
            if (build_tables(w)) {
                found = true;
                break;
            }
        }
        if (!found) throw FieldError("no primitive root found");  // unreachable for prime p
    } else {
        if (!build_tables(p))  // element x has value p (coefficient vector (0,1,0,...))
            throw FieldError("modulus root is not primitive; supply a primitive modulus");
    }
    return f;
}

uint32_t Field::add(uint32_t x, uint32_t y) const {
    if (e_ == 1) return uint32_t((uint64_t(x) + y) % p_);
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        r += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::neg(uint32_t x) const {
    if (e_ == 1) return x == 0 ? 0 : p_ - x;
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        x /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }

uint32_t Field::mul_poly(uint32_t x, uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    if (e_ == 1) return uint32_t(uint64_t(x) * y % p_);
    Poly fx, fy;
    for (uint32_t t = x; t; t /= p_) fx.push_back(t % p_);
    for (uint32_t t = y; t; t /= p_) fy.push_back(t % p_);
    Poly r = poly_mod(poly_mul(fx, fy, p_), modulus_, p_);
    uint32_t out = 0;
    for (size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

uint32_t Field::mul(uint32_t x, uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    if (!exp_.empty()) {
        uint64_t s = uint64_t(log_[x]) + log_[y];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul_poly(x, y);
}

uint32_t Field::inv(uint32_t x) const {
    if (x == 0) throw FieldError("inversion of zero");
    if (!exp_.empty()) {
        uint32_t l = log_[x];
        return l == 0 ? 1 : exp_[q_ - 1 - l];
    }
    return pow(x, q_ - 2);
}

uint32_t Field::div(uint32_t x, uint32_t y) const { return mul(x, inv(y)); }

uint32_t Field::pow(uint32_t x, uint64_t n) const {
    if (x == 0) return n == 0 ? 1 : 0;
    if (!exp_.empty()) return exp_[uint64_t(log_[x]) * (n % (q_ - 1)) % (q_ - 1)];
    uint32_t r = 1;
    while (n) {
        if (n & 1) r = mul_poly(r, x);
        x = mul_poly(x, x);
        n >>= 1;
    }
    return r;
}

uint32_t Field::dlog(uint32_t x) const {
    if (x == 0) throw FieldError("discrete log of zero");
    if (exp_.empty()) throw FieldError("no log tables for this field");
    return log_[x];
}

uint64_t Field::element_order(uint32_t x) const {
    if (x == 0) throw FieldError("zero has no multiplicative order");
    uint64_t ord = 1;
    uint32_t y = x;
    while (y != 1) {
        y = mul(y, x);
        ++ord;
    }
    return ord;
}

bool Field::is_primitive(uint32_t x) const {
    return x != 0 && element_order(x) == q_ - 1;
}

uint32_t Field::parse(const std::string& token) const {
    if (token.empty()) throw FieldError("empty element token");
    if (token == "0") return 0;
    if (token[0] == 'w') {
        uint64_t i = 0;
        if (token == "w") {
            i = 1;
        } else {
            if (token.size() < 3 || token[1] != '^')
                throw FieldError("malformed element token '" + token + "'");
            auto [ptr, ec] = std::from_chars(token.data() + 2, token.data() + token.size(), i);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw FieldError("malformed element token '" + token + "'");
        }
        return exp_[i % (q_ - 1)];
    }
    uint64_t d = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw FieldError("malformed element token '" + token + "'");
    return uint32_t(d % p_);  // prime-subfield element 1+1+...
}

std::string Field::format(uint32_t x) const {
    if (x == 0) return "0";
    if (x == 1) return "1";
    return "w^" + std::to_string(dlog(x));
}

}  // namespace insdel
