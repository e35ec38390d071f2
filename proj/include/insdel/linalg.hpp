#pragma once

// Exact dense linear algebra over a Field: rank, determinant, RREF, left
// solving and left kernels. Entries are stored row-major as element values.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "insdel/gf.hpp"

namespace insdel {

using Vec = std::vector<uint32_t>;

class GfMatrix {
public:
    GfMatrix(FieldPtr field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    GfMatrix(FieldPtr field, size_t rows, size_t cols, Vec entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw FieldError("entry count does not match dimensions");
    }

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Vec& entries() const { return a_; }

    GfMatrix transpose() const;
    Vec row(size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }

    // Column submatrix; indices are 0-based and may repeat.
    GfMatrix columns(const std::vector<size_t>& idx) const;

    static GfMatrix identity(FieldPtr field, size_t n);

    friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    FieldPtr field_;
    size_t rows_, cols_;
    Vec a_;
};

size_t rank(const GfMatrix& m);
uint32_t det(const GfMatrix& m);

// Reduced row echelon form with strictly increasing pivot columns.
std::pair<GfMatrix, std::vector<size_t>> rref(const GfMatrix& m);

// One solution x of x*A = b with free variables set to zero, or nullopt.
std::optional<Vec> solve_left(const GfMatrix& a, const Vec& b);

// Basis of {x : x*A = 0}, one vector per row of the result.
std::vector<Vec> left_kernel(const GfMatrix& a);

Vec row_times_matrix(const FieldPtr& f, const Vec& x, const GfMatrix& a);

}  // namespace insdel
