#pragma once

#include <cmath>
#include <limits>

namespace hurwitz {

/// Closed interval of doubles with outward rounding: every operation widens the
/// correctly rounded IEEE result by one ulp on each side, so the true real
/// value is always enclosed.
struct Interval {
    double lo = 0;
    double hi = 0;

    static Interval point(double x) { return {x, x}; }

    [[nodiscard]] double width() const { return hi - lo; }
    [[nodiscard]] bool certainly_less(const Interval& other) const { return hi < other.lo; }
    [[nodiscard]] bool certainly_greater(const Interval& other) const { return lo > other.hi; }
};

namespace detail {
inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
}  // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
    return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    double lo = p[0];
    double hi = p[0];
    for (double v : p) {
        lo = std::fmin(lo, v);
        hi = std::fmax(hi, v);
    }
    return {detail::down(lo), detail::up(hi)};
}

/// Divisor must not contain zero.
inline Interval operator/(const Interval& a, const Interval& b) {
    const double p[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    double lo = p[0];
    double hi = p[0];
    for (double v : p) {
        lo = std::fmin(lo, v);
        hi = std::fmax(hi, v);
    }
    return {detail::down(lo), detail::up(hi)};
}

/// Negative parts of the argument are clamped to zero.
inline Interval sqrt(const Interval& a) {
    const double lo = a.lo <= 0 ? 0.0 : std::fmax(0.0, detail::down(std::sqrt(a.lo)));
    const double hi = a.hi <= 0 ? 0.0 : detail::up(std::sqrt(a.hi));
    return {lo, hi};
}

}  // namespace hurwitz
