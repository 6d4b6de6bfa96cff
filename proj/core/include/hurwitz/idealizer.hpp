#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/interval.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/surd.hpp"

namespace hurwitz {

enum class Family { W, Wbar, Y, Y4Simplified, Y5Simplified, Ystar };

std::string_view to_string(Family f);
/// Accepts "W", "Wbar", "Y", "Y4", "Y5", "Ystar" (case-insensitive). Throws ParseError.
Family parse_family(std::string_view name);

struct InequalityCheck {
    std::string description;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/// One Hadamard test (g * Q^k_m) / x^m against quasi-stability.
struct ProductCheck {
    int k = 0;
    int m = 0;
    Polynomial product;
    StabilityVerdict verdict;
};

struct MembershipReport {
    bool member = false;
    Family family = Family::Y;
    int n = 0;
    std::optional<ProductCheck> witness;  // first failing product test
    std::vector<InequalityCheck> inequality_trace;
    std::vector<ProductCheck> product_checks;
    std::string branch;  // which branch of a union definition succeeded
};

/// b_i b_{i-1} > b_{i-2} b_{i+1} for i = 2..n-1. Needs n >= 3, deg g = n, positive coefficients.
MembershipReport in_W(int n, const Polynomial& g);
/// Same with >=.
MembershipReport in_W_closure(int n, const Polynomial& g);

/// For every k >= 2, m >= 0, k + m <= n: (g * Q^k_m) / x^m is quasi-stable.
/// Tests run in increasing k, then increasing m; with `stop_at_first_failure`
/// the report stops at the witness.
MembershipReport in_Y(int n, const Polynomial& g, bool stop_at_first_failure = true);

/// b1 b2 >= b0 b3 and b2 b3 >= b1 b4 (degree 4).
MembershipReport in_Y4_simplified(const Polynomial& g);

/// g * Q^5 and (g * Q^3_1) / x quasi-stable (degree 5).
MembershipReport in_Y5_simplified(const Polynomial& g);

/// Quasi-stable variant: equals in_Y for odd n; for n = 2l also admits even
/// g = g_e(x^2) whose g_e is a finite multiplier sequence on Hyp+.
/// Needs b_0 > 0, b_n > 0, b_i >= 0 (else ShapeViolation).
MembershipReport in_Y_star(int n, const Polynomial& g);

/// h * (y+1)^nu has only real negative zeros for every nu = 2..l. Needs deg h = l.
bool is_finite_multiplier_on_hyp(const Polynomial& h, int l);

struct RatioTriple {
    Rational first;   // A = a1 a4 / (a2 a3)  or  X = b1 b4 / (b2 b3)
    Rational second;  // B = a1 a5 / a3^2     or  Y = b1 b5 / b3^2
    Rational third;   // C = a0 a4 / a2^2     or  Z = b0 b4 / b2^2
};

/// Degree-5 ratios; positive coefficients required.
RatioTriple ratios_f(const Polynomial& f);
inline RatioTriple ratios_g(const Polynomial& g) { return ratios_f(g); }

/// Maximum of finitely many exact surds.
struct SurdMax {
    std::vector<BiquadraticSurd> terms;

    /// sign(q - max).
    [[nodiscard]] int compare_to(const Rational& q) const;
    [[nodiscard]] double value() const;
};

/// max{(1+sqrt(1-4u))(1-sqrt(1-4v)), (1-sqrt(1-4u))(1+sqrt(1-4v))} / 4; u, v <= 1/4.
SurdMax t1(const Rational& u, const Rational& v);
/// (1+sqrt(1-4u))(1+sqrt(1-4v)) / 4; u, v <= 1/4.
SurdMax s1(const Rational& u, const Rational& v);
/// max{(1+sqrt(1-u))(1-sqrt(1-v)), (1-sqrt(1-u))(1+sqrt(1-v))}; u, v <= 1.
SurdMax t4(const Rational& u, const Rational& v);

enum class Condition { I, II, III, IV };

std::string_view to_string(Condition c);

/// Degree-5 characterisation of quasi-stability (weak) or stability (strict):
///  I   quasi_stability_agt(f)
///  II  Delta_2, Delta_4 >= 0 and GCD(f_e, f_o) has only negative zeros
///  III ratio domain and (A^2 - BC)^2 <= A (A-B)(A-C)
///  IV  ratio domain and A in [t1(B,C), s1(B,C)]
bool lemma1_condition(const Polynomial& f, Condition which, bool strict = false);

/// Degree-5 characterisation of g * Q^5 and (g * Q^3_1)/x both quasi-stable:
///  I   both products checked by quasi_stability_agt
///  II  b2 b3 - b1 b4 >= 0, 2(b3 b4 - b2 b5) >= 0, Delta_4(g * Q^5) >= 0
///  III ratio domain and (X^2 - YZ)^2 <= 4 X (X-Y)(X-Z)
///  IV  ratio domain, t4(Y,Z) <= 1 and X in [t4(Y,Z), 1]
/// The strict variant asks for stable products and strict inequalities.
bool lemma2_condition(const Polynomial& g, Condition which, bool strict = false);

/// 1 - sqrt(1 - t) and 1 + sqrt(1 - t) on [0, 1]; DomainError outside.
double phi_minus(double t);
double phi_plus(double t);
Interval phi_minus(const Interval& t);
Interval phi_plus(const Interval& t);

/// G = (x+1) g(x^2): odd degree, equal even and odd parts, positive coefficients.
/// Throws StructureViolation otherwise.
bool special_case_hypothesis(const Polynomial& big_g);
/// quasi_stability_agt(F * G) for quasi-stable F of the same degree.
/// Throws DegreeMismatch / NotQuasiStableInput.
bool special_case_check(const Polynomial& big_g, const Polynomial& big_f);

}  // namespace hurwitz
