#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyhull/field.hpp"
#include "cyhull/poly.hpp"

namespace cyhull {

/// Dense matrix over a Field, entries stored as element codes row-major.
class GfMatrix {
  public:
    GfMatrix(std::shared_ptr<const Field> field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static GfMatrix from_code_rows(std::shared_ptr<const Field> field, size_t cols,
                                   std::vector<std::vector<uint64_t>> rows);

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint64_t code_at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set_code(size_t r, size_t c, uint64_t code) { data_[r * cols_ + c] = code; }
    FieldElement at(size_t r, size_t c) const { return FieldElement(field_, code_at(r, c)); }

    GfMatrix stacked(const GfMatrix& other) const;

    friend bool operator==(const GfMatrix& a, const GfMatrix& b) {
        return a.field_.get() == b.field_.get() && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }

  private:
    std::shared_ptr<const Field> field_;
    size_t rows_, cols_;
    std::vector<uint64_t> data_;
};

GfMatrix rref(GfMatrix m);
size_t rank(const GfMatrix& m);
/// Basis of {x : M x^T = 0} as rows; rank(M) + rank(nullspace(M)) = cols.
GfMatrix nullspace(const GfMatrix& m);

namespace oracle {

/// (n - deg g) x n matrix whose rows are the shifts x^i * g(x).
GfMatrix generator_matrix(const Polynomial& gen, uint64_t n);

size_t dual_dim(const Polynomial& gen, uint64_t n);
/// dim(C intersect C-perp) computed purely by rank identities.
size_t hull_dim(const Polynomial& gen, uint64_t n);
/// dim(rowspace(a) intersect rowspace(b)) = rank a + rank b - rank stacked.
size_t intersect_dim(const GfMatrix& a, const GfMatrix& b);
/// Row-space equality via ranks of a, b and the stack.
bool codes_equal(const GfMatrix& a, const GfMatrix& b);

}  // namespace oracle

}  // namespace cyhull
