#include "rigidlab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rigidlab {

FieldMatrix::FieldMatrix(size_t rows, size_t cols, const PrimeField& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(size_t n, const PrimeField& field) {
    FieldMatrix m(n, n, field);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

namespace {

// In-place row echelon form; returns the pivot columns in order. With
// full_reduce the pivot rows are also normalized and cleared above
// (reduced row echelon form), which kernel extraction needs.
std::vector<size_t> echelonize(FieldMatrix& a, bool full_reduce) {
    const PrimeField& f = a.field();
    const size_t rows = a.rows();
    const size_t cols = a.cols();
    std::vector<size_t> pivot_cols;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && a.at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row) {
            uint64_t* r1 = a.row_ptr(sel);
            uint64_t* r2 = a.row_ptr(pivot_row);
            for (size_t j = col; j < cols; ++j) std::swap(r1[j], r2[j]);
        }
        uint64_t pivot_inv = f.inv(a.at(pivot_row, col));
        if (full_reduce) {
            uint64_t* pr = a.row_ptr(pivot_row);
            for (size_t j = col; j < cols; ++j) pr[j] = f.mul(pr[j], pivot_inv);
            for (size_t i = 0; i < rows; ++i) {
                if (i == pivot_row) continue;
                uint64_t factor = a.at(i, col);
                if (factor == 0) continue;
                uint64_t* ri = a.row_ptr(i);
                const uint64_t* rp = a.row_ptr(pivot_row);
                for (size_t j = col; j < cols; ++j)
                    ri[j] = f.sub(ri[j], f.mul(factor, rp[j]));
            }
        } else {
            const uint64_t* rp = a.row_ptr(pivot_row);
            for (size_t i = pivot_row + 1; i < rows; ++i) {
                uint64_t factor = a.at(i, col);
                if (factor == 0) continue;
                factor = f.mul(factor, pivot_inv);
                uint64_t* ri = a.row_ptr(i);
                for (size_t j = col; j < cols; ++j)
                    ri[j] = f.sub(ri[j], f.mul(factor, rp[j]));
            }
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

}  // namespace

size_t rank(const FieldMatrix& m) {
    FieldMatrix work = m;
    return echelonize(work, /*full_reduce=*/false).size();
}

std::vector<std::vector<uint64_t>> kernel_basis(const FieldMatrix& m) {
    const PrimeField& f = m.field();
    const size_t cols = m.cols();
    FieldMatrix work = m;
    std::vector<size_t> pivots = echelonize(work, /*full_reduce=*/true);

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<uint64_t>> basis;
    basis.reserve(cols - pivots.size());
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint64_t> x(cols, 0);
        x[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = f.neg(work.at(i, free_col));
        basis.push_back(std::move(x));
    }
    return basis;
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix t(m.cols(), m.rows(), m.field());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
    return t;
}

std::vector<uint64_t> mat_vec(const FieldMatrix& m, const std::vector<uint64_t>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
    const PrimeField& f = m.field();
    std::vector<uint64_t> y(m.rows(), 0);
    for (size_t i = 0; i < m.rows(); ++i) {
        uint64_t acc = 0;
        const uint64_t* row = m.row_ptr(i);
        for (size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(row[j], x[j]));
        y[i] = acc;
    }
    return y;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    const PrimeField& f = a.field();
    FieldMatrix c(a.rows(), b.cols(), f);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            const uint64_t* brow = b.row_ptr(k);
            uint64_t* crow = c.row_ptr(i);
            for (size_t j = 0; j < b.cols(); ++j)
                crow[j] = f.add(crow[j], f.mul(aik, brow[j]));
        }
    }
    return c;
}

}  // namespace rigidlab
