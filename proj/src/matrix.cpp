#include "ncx/matrix.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace ncx {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % field.modulus();
    return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw Error("from_rows requires at least one row");
    std::size_t cols = rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
    }
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw Error("set_block out of range");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw Error("multiply: field mismatch");
    if (a.cols() != b.rows())
        throw Error("multiply: shape mismatch " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
    const PrimeField& f = a.field();
    const std::uint64_t p = f.modulus();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t av = a(i, k);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) = std::uint32_t((out(i, j) + av * b(k, j)) % p);
            }
        }
    }
    return out;
}

namespace {

struct EchelonForm {
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

// Reduced row echelon form. Pivots are searched left to right within the
// first `pivot_limit` columns, first nonzero entry top down.
EchelonForm echelon(Matrix m, std::size_t pivot_limit) {
    const PrimeField& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        std::uint32_t scale = f.inv(m(row, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            std::uint32_t factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const Matrix& m) { return echelon(m, m.cols()).pivots.size(); }

std::vector<std::size_t> pivot_columns(const Matrix& m) { return echelon(m, m.cols()).pivots; }

Matrix kernel_basis(const Matrix& m) {
    EchelonForm e = echelon(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    Matrix basis(m.field(), m.cols(), m.cols() - e.pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = 1 % m.field().modulus();
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], k) = m.field().neg(e.mat(r, free));
        ++k;
    }
    return basis;
}

std::optional<Matrix> solve_right(const Matrix& m, const Matrix& target) {
    if (m.field() != target.field()) throw Error("solve_right: field mismatch");
    if (m.rows() != target.rows()) throw Error("solve_right: row count mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + target.cols());
    aug.set_block(0, 0, m);
    aug.set_block(0, m.cols(), target);
    EchelonForm e = echelon(std::move(aug), m.cols());
    for (std::size_t r = e.pivots.size(); r < m.rows(); ++r) {
        for (std::size_t j = 0; j < target.cols(); ++j)
            if (e.mat(r, m.cols() + j) != 0) return std::nullopt;
    }
    Matrix x(m.field(), m.cols(), target.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < target.cols(); ++j) x(e.pivots[r], j) = e.mat(r, m.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse: matrix not square");
    return solve_right(m, Matrix::identity(m.field(), m.rows()));
}

Matrix random_invertible(PrimeField field, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(field, n, n);
    if (n == 0) return m;
    // Raw modular draws keep the output identical across standard libraries.
    for (;;) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = std::uint32_t(rng() % field.modulus());
        if (rank(m) == n) return m;
    }
}

}  // namespace ncx
