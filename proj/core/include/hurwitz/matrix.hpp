#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Dense row-major matrix of exact rationals. Sizes here never exceed a few dozen.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Submatrix on the given 0-based row and column indices.
    [[nodiscard]] RationalMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Determinant by Bareiss fraction-free elimination: rows are first scaled to
/// integers, then eliminated over Z with exact divisions.
Rational determinant(const RationalMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
/// One Bareiss pass yields all of them while pivots stay nonzero; after a zero
/// pivot the remaining minors are computed independently with row pivoting.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Minor on 1-based row and column indices, matching textbook notation.
Rational minor(const RationalMatrix& m, std::span<const std::size_t> rows_1based, std::span<const std::size_t> cols_1based);

}  // namespace hurwitz
