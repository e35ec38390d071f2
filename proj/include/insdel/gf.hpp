#pragma once

// Exact arithmetic in GF(p) and GF(p^e) with a designated primitive element w.
// Elements are stored as integers in [0, q) via base-p encoding of their
// coefficient vectors (ascending powers of the modulus root).

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace insdel {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    // Builds GF(p^e). When the modulus is omitted:
    //   e = 1         -> prime field, w = least primitive residue
    //   (7,2),(11,2),(13,2) -> built-in Conway defaults
    // Log/antilog tables are precomputed for q <= 2^20.
    static FieldPtr make(uint32_t p, uint32_t e,
                         std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t generator() const { return w_; }
    bool has_tables() const { return !exp_.empty(); }

    uint32_t add(uint32_t x, uint32_t y) const;
    uint32_t sub(uint32_t x, uint32_t y) const;
    uint32_t neg(uint32_t x) const;
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inv(uint32_t x) const;
    uint32_t div(uint32_t x, uint32_t y) const;
    uint32_t pow(uint32_t x, uint64_t n) const;

    // Polynomial-multiplication route, independent of the log tables.
    uint32_t mul_poly(uint32_t x, uint32_t y) const;

    // Discrete log base w of a nonzero element.
    uint32_t dlog(uint32_t x) const;

    uint64_t element_order(uint32_t x) const;
    bool is_primitive(uint32_t x) const;

    // Token syntax: "0", a decimal integer (repeated 1+1+... in the prime
    // subfield), or "w^i". Formatting emits "0", "1", or "w^i".
    uint32_t parse(const std::string& token) const;
    std::string format(uint32_t x) const;

    bool same_as(const Field& other) const { return this == &other; }

private:
    Field() = default;

    uint32_t p_ = 0;
    uint32_t e_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;  // ascending coefficients, size e+1, monic
    uint32_t w_ = 0;
    std::vector<uint32_t> exp_;  // exp_[i] = w^i, size q-1
    std::vector<uint32_t> log_;  // log_[x] for x != 0
};

// A field element carrying its owning field; arithmetic checks field identity.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, uint32_t value) : field_(std::move(field)), v_(value) {}

    uint32_t value() const { return v_; }
    const FieldPtr& field() const { return field_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_->div(a.v_, b.v_)};
    }
    FieldElement operator-() const { return {field_, field_->neg(v_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return a.v_ == b.v_;
    }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!a.field_ || !b.field_ || !a.field_->same_as(*b.field_))
            throw FieldError("elements belong to different fields");
    }

    FieldPtr field_;
    uint32_t v_ = 0;
};

}  // namespace insdel
