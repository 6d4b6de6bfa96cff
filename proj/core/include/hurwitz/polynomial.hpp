#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Univariate polynomial with exact rational coefficients stored in ascending
/// order: coeffs()[i] is the coefficient of x^i.
///
/// The leading coefficient is always nonzero, except for the zero polynomial,
/// which is held as the single coefficient 0 and reports is_zero().
class Polynomial {
public:
    Polynomial() : coeffs_{Rational(0)} {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t power);

    /// Strips trailing zeros; an all-zero input yields the zero polynomial.
    static Polynomial from_coeffs(std::vector<Rational> coeffs);

    [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    /// Degree of the zero polynomial is reported as 0; check is_zero() first.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

    /// Coefficient of x^i, zero when i is outside [0, degree].
    [[nodiscard]] Rational coeff(long i) const;

    [[nodiscard]] Rational evaluate(const Rational& x) const;
    [[nodiscard]] Polynomial derivative() const;
    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] bool all_positive() const;
    [[nodiscard]] bool all_nonnegative() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial operator-() const;

private:
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
    void normalize();

    std::vector<Rational> coeffs_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division over Q; divisor must be nonzero.
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

Polynomial power(const Polynomial& p, unsigned exponent);

/// Builds a polynomial from ascending coefficients. Trailing zeros are removed
/// and, when `warnings` is given, a note is appended for each strip.
/// Throws EmptyInput / AllZero.
Polynomial make_polynomial(std::span<const Rational> coeffs, std::vector<std::string>* warnings = nullptr);
Polynomial make_polynomial(std::initializer_list<Rational> coeffs);

/// Parses "16,8,164" (ascending, comma or whitespace separated exact literals).
Polynomial parse_polynomial(std::string_view text, bool descending = false,
                            std::vector<std::string>* warnings = nullptr);

/// Human-readable form in descending powers, e.g. "x^3 + x^2 + x + 1".
std::string to_string(const Polynomial& p, char var = 'x');

struct EvenOddParts {
    Polynomial even;  // f_e
    Polynomial odd;   // f_o
};

/// f(x) = f_e(x^2) + x f_o(x^2).
EvenOddParts even_odd_split(const Polynomial& f);
Polynomial recompose(const EvenOddParts& parts);

/// Substitutes x^2 for x: p(y) -> p(x^2).
Polynomial substitute_square(const Polynomial& p);

struct HadamardProduct {
    Polynomial poly;
    int nominal_degree = 0;  // min(deg f, deg g)

    [[nodiscard]] bool degree_dropped() const { return poly.degree() < nominal_degree; }
};

/// Coefficient-wise product truncated to min(deg f, deg g).
/// Throws ResultIsZero when every product vanishes.
HadamardProduct hadamard_product(const Polynomial& f, const Polynomial& g);
inline Polynomial hadamard(const Polynomial& f, const Polynomial& g) { return hadamard_product(f, g).poly; }

/// 1 + x + ... + x^n.
Polynomial identity_poly(int n);

/// Q^k_m = x^m (x^2+1)^l for k = 2l, x^m (1+x)(x^2+1)^l for k = 2l+1.
/// Throws InvalidDegree for k < 2 or m < 0.
Polynomial basic_quasistable(int k, int m = 0);

/// Exact division by x^m; throws NotDivisible if a low coefficient is nonzero.
Polynomial shift_divide(const Polynomial& p, int m);

}  // namespace hurwitz
