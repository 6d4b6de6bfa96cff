#pragma once

// Independent reference computations used only by tests. None of these share
// code with the library: determinants by cofactor expansion, the Hurwitz
// layout written out row by row, roots by Durand-Kerner in plain double.

#include <complex>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace oracle {

using hurwitz::Polynomial;
using hurwitz::Rational;
using Grid = std::vector<std::vector<Rational>>;

inline Rational cofactor_det(const Grid& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        Grid sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            sub.push_back(row);
        }
        const Rational term = m[0][col] * cofactor_det(sub);
        total += (col % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

// Row 1: a_{n-1}, a_{n-3}, ...; row 2: a_n, a_{n-2}, ...; later row pairs shift right by one.
inline Grid hurwitz_layout(const Polynomial& f) {
    const int n = f.degree();
    Grid h(n, std::vector<Rational>(n, Rational(0)));
    for (int r = 0; r < n; ++r) {
        const int shift = r / 2;
        const int start = (r % 2 == 0) ? n - 1 : n;
        for (int c = shift; c < n; ++c) {
            const int idx = start - 2 * (c - shift);
            if (idx >= 0 && idx <= n) h[r][c] = f.coeff(idx);
        }
    }
    return h;
}

inline Rational leading_minor(const Grid& m, std::size_t k) {
    Grid sub(k);
    for (std::size_t r = 0; r < k; ++r) sub[r].assign(m[r].begin(), m[r].begin() + static_cast<long>(k));
    return cofactor_det(sub);
}

inline Polynomial coefficientwise(const Polynomial& f, const Polynomial& g) {
    const int k = std::min(f.degree(), g.degree());
    std::vector<Rational> c;
    for (int i = 0; i <= k; ++i) c.push_back(f.coeff(i) * g.coeff(i));
    return Polynomial::from_coeffs(c);
}

inline std::vector<std::complex<double>> durand_kerner(const Polynomial& f) {
    const int n = f.degree();
    std::vector<std::complex<double>> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = f.coeff(i).get_d() / f.leading().get_d();
    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) z[k] = std::pow(std::complex<double>(0.4, 0.9), k);
    auto eval = [&](std::complex<double> x) {
        std::complex<double> p = 0;
        for (int i = n; i >= 0; --i) p = p * x + a[i];
        return p;
    };
    for (int iter = 0; iter < 5000; ++iter) {
        for (int k = 0; k < n; ++k) {
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j) {
                if (j != k) den *= z[k] - z[j];
            }
            z[k] -= eval(z[k]) / den;
        }
    }
    return z;
}

// Leading coefficient times product of (x - r) for rational real roots.
inline Polynomial from_real_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
    Polynomial p = Polynomial::constant(lead);
    for (const auto& r : roots) p = p * Polynomial::from_coeffs({-r, 1});
    return p;
}

}  // namespace oracle
