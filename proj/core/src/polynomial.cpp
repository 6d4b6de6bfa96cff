#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    if (c == 0) return zero();
    std::vector<Rational> coeffs(power + 1, Rational(0));
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) return zero();
    Polynomial p(std::move(coeffs));
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Rational Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return from_coeffs(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational lead = leading();
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c /= lead;
    return Polynomial(std::move(out));
}

bool Polynomial::all_positive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c > 0; });
}

bool Polynomial::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_);
    for (auto& x : out) x *= c;
    return Polynomial::from_coeffs(std::move(out));
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error(ErrorCode::DomainError, "division by the zero polynomial");
    std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
    const int dd = divisor.degree();
    const int nd = dividend.is_zero() ? -1 : dividend.degree();
    if (nd < dd) return {Polynomial::zero(), dividend};

    std::vector<Rational> quot(static_cast<std::size_t>(nd - dd + 1), Rational(0));
    const Rational& lead = divisor.leading();
    for (int i = nd; i >= dd; --i) {
        Rational factor = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 1)));
    return {Polynomial::from_coeffs(std::move(quot)), Polynomial::from_coeffs(std::move(rem))};
}

Polynomial power(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial make_polynomial(std::span<const Rational> coeffs, std::vector<std::string>* warnings) {
    if (coeffs.empty()) throw Error(ErrorCode::EmptyInput, "coefficient list is empty");
    std::vector<Rational> v(coeffs.begin(), coeffs.end());
    std::size_t stripped = 0;
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
        ++stripped;
    }
    if (v.empty()) throw Error(ErrorCode::AllZero, "all coefficients are zero");
    if (stripped > 0 && warnings != nullptr) {
        warnings->push_back("stripped " + std::to_string(stripped) + " trailing zero coefficient(s)");
    }
    return Polynomial::from_coeffs(std::move(v));
}

Polynomial make_polynomial(std::initializer_list<Rational> coeffs) {
    return make_polynomial(std::span<const Rational>(coeffs.begin(), coeffs.size()));
}

Polynomial parse_polynomial(std::string_view text, bool descending, std::vector<std::string>* warnings) {
    std::vector<Rational> coeffs;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            coeffs.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == ';') {
            flush();
        } else if (c != '[' && c != ']') {
            token.push_back(c);
        }
    }
    flush();
    if (descending) std::reverse(coeffs.begin(), coeffs.end());
    return make_polynomial(coeffs, warnings);
}

std::string to_string(const Polynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) out << to_exact_string(mag);
        if (i >= 1) out << var;
        if (i >= 2) out << '^' << i;
    }
    return out.str();
}

EvenOddParts even_odd_split(const Polynomial& f) {
    std::vector<Rational> even;
    std::vector<Rational> odd;
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? even : odd).push_back(c[i]);
    return {Polynomial::from_coeffs(std::move(even)), Polynomial::from_coeffs(std::move(odd))};
}

Polynomial substitute_square(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> out(2 * p.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[2 * i] = p.coeffs()[i];
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial recompose(const EvenOddParts& parts) {
    return substitute_square(parts.even) + Polynomial::monomial(1, 1) * substitute_square(parts.odd);
}

HadamardProduct hadamard_product(const Polynomial& f, const Polynomial& g) {
    const int k = std::min(f.degree(), g.degree());
    std::vector<Rational> out(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] = f.coeffs()[static_cast<std::size_t>(i)] * g.coeffs()[static_cast<std::size_t>(i)];
    Polynomial product = Polynomial::from_coeffs(std::move(out));
    if (product.is_zero()) throw Error(ErrorCode::ResultIsZero, "every coefficient product vanishes");
    return {std::move(product), k};
}

Polynomial identity_poly(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidDegree, "identity polynomial needs n >= 0");
    return Polynomial::from_coeffs(std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(1)));
}

Polynomial basic_quasistable(int k, int m) {
    if (k < 2) throw Error(ErrorCode::InvalidDegree, "basic quasi-stable polynomials need k >= 2, got " + std::to_string(k));
    if (m < 0) throw Error(ErrorCode::InvalidDegree, "shift must be nonnegative");
    const auto l = static_cast<unsigned>(k / 2);
    Polynomial base = power(make_polynomial({1, 0, 1}), l);
    if (k % 2 == 1) base = make_polynomial({1, 1}) * base;
    return Polynomial::monomial(1, static_cast<std::size_t>(m)) * base;
}

Polynomial shift_divide(const Polynomial& p, int m) {
    if (m < 0) throw Error(ErrorCode::NotDivisible, "negative shift");
    if (m == 0) return p;
    if (p.is_zero()) return p;
    const auto c = p.coeffs();
    if (static_cast<std::size_t>(m) > c.size() - 1) throw Error(ErrorCode::NotDivisible, "shift exceeds degree");
    for (int i = 0; i < m; ++i) {
        if (c[static_cast<std::size_t>(i)] != 0) {
            throw Error(ErrorCode::NotDivisible, "coefficient of x^" + std::to_string(i) + " is nonzero");
        }
    }
    return Polynomial::from_coeffs(std::vector<Rational>(c.begin() + m, c.end()));
}

}  // namespace hurwitz
