#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an exact literal: integers, decimals ("6.62", "-1.5e-3") or fractions ("662/100").
/// Decimals are scaled by powers of ten, never routed through binary floating point.
Rational parse_rational(std::string_view text);

/// Terminating decimal when the reduced denominator is 2^a 5^b, otherwise "p/q".
std::string to_exact_string(const Rational& q);

/// "p/q" or "p" with no decimal rendering.
std::string to_fraction_string(const Rational& q);

/// Display-only rendering with `digits` significant digits.
std::string to_display_string(const Rational& q, int digits = 12);

[[nodiscard]] inline int sign(const Rational& q) { return sgn(q); }

[[nodiscard]] inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact rational for a finite double (binary expansion, not decimal).
Rational from_double(double value);

}  // namespace hurwitz
