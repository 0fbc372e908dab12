#ifndef RIGIDLAB_MATRIX_HPP
#define RIGIDLAB_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rigidlab/field.hpp"

namespace rigidlab {

// Dense row-major matrix over a prime field. All instances in this project
// stay below ~200x200, so no sparse storage.
class FieldMatrix {
public:
    FieldMatrix(size_t rows, size_t cols, const PrimeField& field);

    static FieldMatrix identity(size_t n, const PrimeField& field);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    uint64_t at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint64_t value) { entries_[r * cols_ + c] = value; }

    uint64_t* row_ptr(size_t r) { return entries_.data() + r * cols_; }
    const uint64_t* row_ptr(size_t r) const { return entries_.data() + r * cols_; }

    bool operator==(const FieldMatrix&) const = default;

private:
    size_t rows_;
    size_t cols_;
    PrimeField field_;
    std::vector<uint64_t> entries_;
};

// Exact rank via Gaussian elimination (row echelon form on a copy).
size_t rank(const FieldMatrix& m);

// Basis of the right null space {x : M x = 0}, one vector per free column
// of the reduced row echelon form. Size is always cols - rank.
std::vector<std::vector<uint64_t>> kernel_basis(const FieldMatrix& m);

FieldMatrix transpose(const FieldMatrix& m);

std::vector<uint64_t> mat_vec(const FieldMatrix& m, const std::vector<uint64_t>& x);

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace rigidlab

#endif
