#pragma once

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Element c0 + c1 sqrt(alpha) + c2 sqrt(beta) + c3 sqrt(alpha beta) of Q(sqrt(alpha), sqrt(beta))
/// with rational alpha, beta >= 0. The sign is decided exactly by isolating one
/// radical at a time and squaring with sign tracking.
class BiquadraticSurd {
public:
    BiquadraticSurd(Rational alpha, Rational beta);

    static BiquadraticSurd rational(const Rational& c, const Rational& alpha = 0, const Rational& beta = 0);

    Rational c0{0};
    Rational c1{0};
    Rational c2{0};
    Rational c3{0};

    [[nodiscard]] const Rational& alpha() const { return alpha_; }
    [[nodiscard]] const Rational& beta() const { return beta_; }

    [[nodiscard]] int sign() const;
    [[nodiscard]] double to_double() const;

    /// Scales every component by a rational.
    [[nodiscard]] BiquadraticSurd scaled(const Rational& k) const;

    /// this - q, for comparisons against a rational.
    [[nodiscard]] BiquadraticSurd minus(const Rational& q) const;

private:
    Rational alpha_;
    Rational beta_;
};

/// (1 + s_u sqrt(1 - k u)) (1 + s_v sqrt(1 - k v)) * scale with s_u, s_v in {+1, -1}.
/// Throws DomainError when a radicand is negative.
BiquadraticSurd radical_product(const Rational& u, const Rational& v, const Rational& k, int s_u, int s_v, const Rational& scale);

/// sign(q - s) exactly.
int compare(const Rational& q, const BiquadraticSurd& s);

}  // namespace hurwitz
