#include "insdel/linalg.hpp"

namespace insdel {

GfMatrix GfMatrix::transpose() const {
    GfMatrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

GfMatrix GfMatrix::columns(const std::vector<size_t>& idx) const {
    GfMatrix s(field_, rows_, idx.size());
    for (size_t c : idx)
        if (c >= cols_) throw FieldError("column index out of range");
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < idx.size(); ++c) s.at(r, c) = at(r, idx[c]);
    return s;
}

GfMatrix GfMatrix::identity(FieldPtr field, size_t n) {
    GfMatrix m(std::move(field), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// In-place forward elimination; returns pivot columns and the number of row
// swaps. First nonzero entry in the column is taken as pivot.
std::pair<std::vector<size_t>, size_t> eliminate(GfMatrix& m) {
    const Field& f = *m.field();
    std::vector<size_t> pivots;
    size_t swaps = 0;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pr = r;
        while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
            ++swaps;
        }
        uint32_t pivot = m.at(r, c);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            uint32_t factor = f.div(m.at(i, c), pivot);
            if (factor == 0) continue;
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {pivots, swaps};
}

}  // namespace

size_t rank(const GfMatrix& m) {
    GfMatrix work = m;
    return eliminate(work).first.size();
}

uint32_t det(const GfMatrix& m) {
    if (m.rows() != m.cols()) throw FieldError("determinant of non-square matrix");
    const Field& f = *m.field();
    GfMatrix work = m;
    auto [pivots, swaps] = eliminate(work);
    if (pivots.size() < m.rows()) return 0;
    uint32_t d = 1;
    for (size_t i = 0; i < m.rows(); ++i) d = f.mul(d, work.at(i, i));
    if (swaps % 2 == 1) d = f.neg(d);
    return d;
}

std::pair<GfMatrix, std::vector<size_t>> rref(const GfMatrix& m) {
    const Field& f = *m.field();
    GfMatrix work = m;
    auto pivots = eliminate(work).first;
    for (size_t i = pivots.size(); i-- > 0;) {
        size_t c = pivots[i];
        uint32_t inv = f.inv(work.at(i, c));
        for (size_t j = c; j < work.cols(); ++j) work.at(i, j) = f.mul(inv, work.at(i, j));
        for (size_t r = 0; r < i; ++r) {
            uint32_t factor = work.at(r, c);
            if (factor == 0) continue;
            for (size_t j = c; j < work.cols(); ++j)
                work.at(r, j) = f.sub(work.at(r, j), f.mul(factor, work.at(i, j)));
        }
    }
    return {work, pivots};
}

Vec row_times_matrix(const FieldPtr& fp, const Vec& x, const GfMatrix& a) {
    const Field& f = *fp;
    if (x.size() != a.rows()) throw FieldError("dimension mismatch in row-matrix product");
    Vec r(a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        for (size_t c = 0; c < a.cols(); ++c)
            r[c] = f.add(r[c], f.mul(x[i], a.at(i, c)));
    }
    return r;
}

std::optional<Vec> solve_left(const GfMatrix& a, const Vec& b) {
    if (b.size() != a.cols()) throw FieldError("dimension mismatch in solve_left");
    // x*A = b  <=>  A^T x^T = b^T; row-reduce the augmented transposed system.
    GfMatrix aug(a.field(), a.cols(), a.rows() + 1);
    for (size_t r = 0; r < a.cols(); ++r) {
        for (size_t c = 0; c < a.rows(); ++c) aug.at(r, c) = a.at(c, r);
        aug.at(r, a.rows()) = b[r];
    }
    auto [red, pivots] = rref(aug);
    Vec x(a.rows(), 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.rows()) return std::nullopt;  // pivot in augmented column
        x[pivots[i]] = red.at(i, a.rows());
    }
    return x;
}

std::vector<Vec> left_kernel(const GfMatrix& a) {
    const Field& f = *a.field();
    auto [red, pivots] = rref(a.transpose());
    std::vector<bool> is_pivot(a.rows(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < a.rows(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(a.rows(), 0);
        x[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = f.neg(red.at(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace insdel
