#include "cyhull/oracle.hpp"

#include <string>

namespace cyhull {

GfMatrix GfMatrix::from_code_rows(std::shared_ptr<const Field> field, size_t cols,
                                  std::vector<std::vector<uint64_t>> rows) {
    GfMatrix m(field, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length does not match cols");
        for (size_t c = 0; c < cols; ++c) m.set_code(r, c, rows[r][c]);
    }
    return m;
}

GfMatrix GfMatrix::stacked(const GfMatrix& other) const {
    if (field_.get() != other.field_.get()) throw FieldMismatch("stacking over different fields");
    if (cols_ != other.cols_) throw DimensionMismatch("stacking with different column counts");
    GfMatrix m(field_, rows_ + other.rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.set_code(r, c, code_at(r, c));
    for (size_t r = 0; r < other.rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.set_code(rows_ + r, c, other.code_at(r, c));
    return m;
}

GfMatrix rref(GfMatrix m) {
    const Field& f = m.field();
    size_t pivot_row = 0;
    for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        size_t piv = pivot_row;
        while (piv < m.rows() && m.code_at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != pivot_row)
            for (size_t j = 0; j < m.cols(); ++j) {
                const uint64_t t = m.code_at(pivot_row, j);
                m.set_code(pivot_row, j, m.code_at(piv, j));
                m.set_code(piv, j, t);
            }
        const uint64_t inv = f.inv(m.code_at(pivot_row, c));
        for (size_t j = c; j < m.cols(); ++j)
            m.set_code(pivot_row, j, f.mul(m.code_at(pivot_row, j), inv));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            const uint64_t factor = m.code_at(i, c);
            if (factor == 0) continue;
            for (size_t j = c; j < m.cols(); ++j)
                m.set_code(i, j, f.sub(m.code_at(i, j), f.mul(factor, m.code_at(pivot_row, j))));
        }
        ++pivot_row;
    }
    return m;
}

size_t rank(const GfMatrix& m) {
    const GfMatrix r = rref(m);
    size_t rk = 0;
    for (size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < r.cols(); ++j)
            if (r.code_at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rk;
    }
    return rk;
}

GfMatrix nullspace(const GfMatrix& m) {
    const Field& f = m.field();
    const GfMatrix r = rref(m);
    const size_t cols = m.cols();
    // locate pivot columns
    std::vector<size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    for (size_t i = 0; i < r.rows(); ++i) {
        size_t c = 0;
        while (c < cols && r.code_at(i, c) == 0) ++c;
        if (c == cols) break;
        pivot_col_of_row.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    GfMatrix basis(m.field_ptr(), free_cols.size(), cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const size_t fc = free_cols[k];
        basis.set_code(k, fc, 1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            basis.set_code(k, pivot_col_of_row[i], f.neg(r.code_at(i, fc)));
    }
    return basis;
}

namespace oracle {

GfMatrix generator_matrix(const Polynomial& gen, uint64_t n) {
    const int d = gen.degree();
    if (d < 0 || static_cast<uint64_t>(d) > n)
        throw DimensionMismatch("generator degree exceeds the code length");
    const auto k = static_cast<size_t>(n - static_cast<uint64_t>(d));
    GfMatrix m(gen.field_ptr(), k, static_cast<size_t>(n));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j <= static_cast<size_t>(d); ++j)
            m.set_code(i, i + j, gen.coeff_code(j));
    return m;
}

size_t dual_dim(const Polynomial& gen, uint64_t n) {
    return rank(nullspace(generator_matrix(gen, n)));
}

size_t hull_dim(const Polynomial& gen, uint64_t n) {
    const GfMatrix g = generator_matrix(gen, n);
    const GfMatrix d = nullspace(g);
    return rank(g) + rank(d) - rank(g.stacked(d));
}

size_t intersect_dim(const GfMatrix& a, const GfMatrix& b) {
    return rank(a) + rank(b) - rank(a.stacked(b));
}

bool codes_equal(const GfMatrix& a, const GfMatrix& b) {
    const size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(a.stacked(b)) == ra;
}

}  // namespace oracle

}  // namespace cyhull
