#include "hurwitz/surd.hpp"

#include <cmath>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

// sign(p + q sqrt(a)), a >= 0.
int sign_quadratic(const Rational& p, const Rational& q, const Rational& a) {
    const int sp = sgn(p);
    const int sq = (a == 0) ? 0 : sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    const Rational d = p * p - q * q * a;
    return sp * sgn(d);
}

}  // namespace

BiquadraticSurd::BiquadraticSurd(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ < 0 || beta_ < 0) throw Error(ErrorCode::DomainError, "negative radicand");
}

BiquadraticSurd BiquadraticSurd::rational(const Rational& c, const Rational& alpha, const Rational& beta) {
    BiquadraticSurd s(alpha, beta);
    s.c0 = c;
    return s;
}

int BiquadraticSurd::sign() const {
    if (beta_ == 0) return sign_quadratic(c0, c1, alpha_);
    const int sp = sign_quadratic(c0, c1, alpha_);
    const int sq = sign_quadratic(c2, c3, alpha_);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // (c0 + c1 r)^2 - beta (c2 + c3 r)^2 with r = sqrt(alpha)
    const Rational d0 = c0 * c0 + c1 * c1 * alpha_ - beta_ * (c2 * c2 + c3 * c3 * alpha_);
    const Rational d1 = 2 * (c0 * c1 - beta_ * c2 * c3);
    return sp * sign_quadratic(d0, d1, alpha_);
}

double BiquadraticSurd::to_double() const {
    const double ra = std::sqrt(alpha_.get_d());
    const double rb = std::sqrt(beta_.get_d());
    return c0.get_d() + c1.get_d() * ra + c2.get_d() * rb + c3.get_d() * ra * rb;
}

BiquadraticSurd BiquadraticSurd::scaled(const Rational& k) const {
    BiquadraticSurd out = *this;
    out.c0 *= k;
    out.c1 *= k;
    out.c2 *= k;
    out.c3 *= k;
    return out;
}

BiquadraticSurd BiquadraticSurd::minus(const Rational& q) const {
    BiquadraticSurd out = *this;
    out.c0 -= q;
    return out;
}

BiquadraticSurd radical_product(const Rational& u, const Rational& v, const Rational& k, int s_u, int s_v, const Rational& scale) {
    const Rational a = 1 - k * u;
    const Rational b = 1 - k * v;
    if (a < 0 || b < 0) throw Error(ErrorCode::DomainError, "radicand 1 - k*u or 1 - k*v is negative");
    BiquadraticSurd s(a, b);
    s.c0 = scale;
    s.c1 = scale * s_u;
    s.c2 = scale * s_v;
    s.c3 = scale * s_u * s_v;
    return s;
}

int compare(const Rational& q, const BiquadraticSurd& s) {
    return -s.minus(q).sign();
}

}  // namespace hurwitz
