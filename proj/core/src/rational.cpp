#include "hurwitz/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <iomanip>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ResultIsZero: return "ResultIsZero";
        case ErrorCode::InvalidDegree: return "InvalidDegree";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NotPositiveCoefficients: return "NotPositiveCoefficients";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ShapeViolation: return "ShapeViolation";
        case ErrorCode::NotQuasiStableInput: return "NotQuasiStableInput";
        case ErrorCode::StructureViolation: return "StructureViolation";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ParamDomain: return "ParamDomain";
        case ErrorCode::NonConvergence: return "NonConvergence";
    }
    return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
    auto fail = [&] { throw Error(ErrorCode::ParseError, "not an exact literal: '" + std::string(original) + "'"); };

    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view exp_part = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) fail();
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
    }

    std::string digits;
    long frac_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) fail();
        if (!int_part.empty() && !all_digits(int_part)) fail();
        if (!frac_part.empty() && !all_digits(frac_part)) fail();
        digits = std::string(int_part) + std::string(frac_part);
        frac_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) fail();
        digits = std::string(s);
    }

    Integer mantissa(digits, 10);
    long scale = exponent - frac_digits;
    Rational value;
    if (scale >= 0) {
        value = Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
    } else {
        value = Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(trim(s.substr(0, slash)), text);
        Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        Rational q = num / den;
        q.canonicalize();
        return q;
    }
    return parse_decimal(s, text);
}

std::string to_fraction_string(const Rational& q) {
    return q.get_str(10);
}

std::string to_exact_string(const Rational& q) {
    Integer den = q.get_den();
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return to_fraction_string(q);

    unsigned long places = std::max(twos, fives);
    if (places == 0) return q.get_num().get_str(10);

    Integer scaled = q.get_num() * pow10(places) / q.get_den();
    bool negative = scaled < 0;
    std::string digits = Integer(abs(scaled)).get_str(10);
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, 1, '.');
    return negative ? "-" + digits : digits;
}

std::string to_display_string(const Rational& q, int digits) {
    std::ostringstream out;
    out << std::setprecision(digits) << q.get_d();
    return out.str();
}

Rational from_double(double value) {
    if (!std::isfinite(value)) throw Error(ErrorCode::DomainError, "non-finite value");
    Rational q(value);
    q.canonicalize();
    return q;
}

}  // namespace hurwitz
