#include "hurwitz/matrix.hpp"

#include <utility>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

struct IntegerMatrix {
    std::size_t n = 0;
    std::vector<Integer> a;
    Rational scale{1};  // det(original) = det(a) / scale

    Integer& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
};

// Multiplies every row by the lcm of its denominators.
IntegerMatrix to_integer(const RationalMatrix& m, std::size_t n) {
    IntegerMatrix out;
    out.n = n;
    out.a.resize(n * n);
    Integer total_scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& v = m(r, c);
            out.at(r, c) = v.get_num() * (row_lcm / v.get_den());
        }
        total_scale *= row_lcm;
    }
    out.scale = Rational(total_scale);
    return out;
}

// Bareiss with row pivoting on the leading n x n block.
Integer bareiss_det(IntegerMatrix m) {
    const std::size_t n = m.n;
    if (n == 0) return 1;
    Integer prev = 1;
    int sign_flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
            ++sign_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(v);
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Integer det = m.at(n - 1, n - 1);
    return sign_flips % 2 == 0 ? det : Integer(-det);
}

}  // namespace

RationalMatrix RationalMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    RationalMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= rows_ || cols[j] >= cols_) throw Error(ErrorCode::DomainError, "minor index out of range");
            out(i, j) = (*this)(rows[i], cols[j]);
        }
    }
    return out;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DomainError, "determinant of a non-square matrix");
    IntegerMatrix im = to_integer(m, m.rows());
    Rational scale = im.scale;
    Rational det(bareiss_det(std::move(im)));
    det /= scale;
    return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DomainError, "principal minors of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> minors;
    minors.reserve(n);
    if (n == 0) return minors;

    // Row scaling multiplies the k-th leading minor by the product of the first k row factors.
    IntegerMatrix im = to_integer(m, n);
    std::vector<Integer> row_scale(n);
    for (std::size_t r = 0; r < n; ++r) {
        Integer row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        row_scale[r] = row_lcm;
    }

    // Without pivoting the k-th Bareiss pivot equals the k-th leading minor.
    Integer prev = 1;
    Integer prefix_scale = 1;
    std::size_t k = 0;
    for (; k < n; ++k) {
        prefix_scale *= row_scale[k];
        const Integer pivot = im.at(k, k);
        minors.emplace_back(Rational(pivot, prefix_scale));
        minors.back().canonicalize();
        if (pivot == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = pivot * im.at(i, j) - im.at(i, k) * im.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                im.at(i, j) = std::move(v);
            }
            im.at(i, k) = 0;
        }
        prev = pivot;
    }

    for (std::size_t size = minors.size() + 1; size <= n; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        minors.push_back(determinant(m.select(idx, idx)));
    }
    return minors;
}

Rational minor(const RationalMatrix& m, std::span<const std::size_t> rows_1based, std::span<const std::size_t> cols_1based) {
    if (rows_1based.size() != cols_1based.size()) throw Error(ErrorCode::DomainError, "minor needs as many rows as columns");
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (auto r : rows_1based) {
        if (r == 0) throw Error(ErrorCode::DomainError, "minor indices are 1-based");
        rows.push_back(r - 1);
    }
    for (auto c : cols_1based) {
        if (c == 0) throw Error(ErrorCode::DomainError, "minor indices are 1-based");
        cols.push_back(c - 1);
    }
    return determinant(m.select(rows, cols));
}

}  // namespace hurwitz
