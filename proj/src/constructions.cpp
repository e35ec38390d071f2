#include "insdel/constructions.hpp"

namespace insdel {

LinearCode palindrome_code(const FieldPtr& field, size_t k) {
    if (k < 1) throw FieldError("palindrome construction requires k >= 1");
    GfMatrix g(field, k, 2 * k);
    for (size_t i = 0; i < k; ++i) {
        g.at(i, i) = 1;
        g.at(i, 2 * k - 1 - i) = 1;
    }
    return LinearCode(field, g);
}

OddConstructionCheck check_odd_construction(const FieldPtr& field,
                                            const std::vector<uint32_t>& a) {
    const Field& f = *field;
    size_t k = a.size();
    OddConstructionCheck chk;
    uint32_t total = 0;
    for (uint32_t ai : a) total = f.add(total, ai);
    chk.total_sum = total;
    chk.total_sum_fails = total == 1;

    for (size_t t = 1; t <= k; ++t) {
        uint32_t odd = 0, even = 0;  // split of {t..k} by parity of k - i
        for (size_t i = t; i <= k; ++i) {
            if ((k - i) % 2 == 1)
                odd = f.add(odd, a[i - 1]);
            else
                even = f.add(even, a[i - 1]);
        }
        uint32_t value = f.sub(odd, even);
        chk.per_t_value.push_back(value);
        if (value == 1) chk.failing_t.push_back(t);
    }
    chk.valid = !chk.total_sum_fails && chk.failing_t.empty();
    return chk;
}

LinearCode odd_length_code(const FieldPtr& field, size_t k, const std::vector<uint32_t>& a) {
    if (a.size() != k) throw FieldError("parameter vector must have k entries");
    auto chk = check_odd_construction(field, a);
    if (!chk.valid) throw FieldError("parameter vector fails the construction conditions");
    GfMatrix g(field, k, 2 * k + 1);
    for (size_t i = 0; i < k; ++i) {
        g.at(i, i) = 1;
        g.at(i, k) = a[i];
        g.at(i, 2 * k - i) = 1;  // reversed identity block
    }
    return LinearCode(field, g);
}

LinearCode default_odd_length(const FieldPtr& field, size_t k) {
    if (field->q() <= 2) throw FieldError("default odd-length construction requires q > 2");
    if (k < 2) throw FieldError("default odd-length construction requires k >= 2");
    // Least element outside {0, 1} in value order.
    uint32_t pick = 2;
    std::vector<uint32_t> a(k, 0);
    a[k - 2] = pick;  // index k-1, 1-based
    return odd_length_code(field, k, a);
}

LinearCode rs_two_dim_example(uint32_t p, uint32_t e, size_t n) {
    if (n < 2) throw FieldError("length must be at least 2");
    if (!((uint64_t(3) << (n - 2)) < e))
        throw FieldError("requires 3*2^(n-2) < e");
    // Least monic irreducible modulus whose root is primitive, by value order
    // of the non-leading coefficients.
    FieldPtr field;
    std::vector<uint32_t> coeff(e, 0);
    while (true) {
        std::vector<uint32_t> mod(coeff.begin(), coeff.end());
        mod.push_back(1);
        try {
            field = Field::make(p, e, mod);
            break;
        } catch (const FieldError&) {
        }
        size_t i = 0;
        for (; i < coeff.size(); ++i) {
            if (++coeff[i] < p) break;
            coeff[i] = 0;
        }
        if (i == coeff.size()) throw FieldError("no primitive modulus found");
    }
    const Field& f = *field;
    uint32_t theta = f.generator();
    GfMatrix g(field, 2, n);
    for (size_t j = 0; j < n; ++j) {
        g.at(0, j) = 1;                                   // lambda row
        g.at(1, j) = f.pow(theta, uint64_t(1) << j);       // mu * theta^(2^j), j 0-based
    }
    return LinearCode(field, g);
}

}  // namespace insdel
