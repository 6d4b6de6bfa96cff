#pragma once

#include <optional>
#include <string>

#include "hurwitz/error.hpp"
#include "hurwitz/polynomial.hpp"

namespace testing {

template <typename F>
std::optional<hurwitz::ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const hurwitz::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline hurwitz::Polynomial P(const std::string& ascending) { return hurwitz::parse_polynomial(ascending); }
inline hurwitz::Rational Q(const std::string& text) { return hurwitz::parse_rational(text); }

// Polynomials shared by several test files.
inline hurwitz::Polynomial example_f() { return P("16,8,164,80,230,100"); }
inline hurwitz::Polynomial example_g_w5() { return P("4.66,6.4,6.62,8.96,6.4,6.17"); }
inline hurwitz::Polynomial example_g_y5() { return P("4.5,10,4.75,5.5,1,1"); }

}  // namespace testing
