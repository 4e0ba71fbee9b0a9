#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncx/field.hpp"

namespace ncx {

/// Dense matrix over a prime field, row-major, entries in canonical form.
/// 0xN and Nx0 matrices are legal and represent maps to or from the zero
/// space; products through them behave as zero maps of the right shapes.
class Matrix {
public:
    Matrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(PrimeField field, std::size_t n);

    /// Builds from explicit rows, reducing entries mod p. All rows must have
    /// equal length and there must be at least one row (use the constructor
    /// for matrices without rows).
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    /// Copies `block` into this matrix with upper-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& block);

    bool is_zero() const;

    bool operator==(const Matrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

std::size_t rank(const Matrix& m);

/// Pivot columns of the reduced row echelon form, scanning columns left to
/// right and rows top down. Deterministic.
std::vector<std::size_t> pivot_columns(const Matrix& m);

/// Columns form a basis of the null space; column count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// X with m * X = target, if any (free variables set to zero).
std::optional<Matrix> solve_right(const Matrix& m, const Matrix& target);

std::optional<Matrix> inverse(const Matrix& m);

/// Seed-deterministic invertible n x n matrix (rejection sampling on rank).
Matrix random_invertible(PrimeField field, std::size_t n, std::uint64_t seed);

}  // namespace ncx
