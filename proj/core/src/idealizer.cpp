#include "hurwitz/idealizer.hpp"

#include <algorithm>
#include <cctype>

#include "hurwitz/error.hpp"
#include "hurwitz/real_roots.hpp"

namespace hurwitz {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::W: return "W";
        case Family::Wbar: return "Wbar";
        case Family::Y: return "Y";
        case Family::Y4Simplified: return "Y4";
        case Family::Y5Simplified: return "Y5";
        case Family::Ystar: return "Ystar";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "w") return Family::W;
    if (lower == "wbar" || lower == "w_closure") return Family::Wbar;
    if (lower == "y") return Family::Y;
    if (lower == "y4") return Family::Y4Simplified;
    if (lower == "y5") return Family::Y5Simplified;
    if (lower == "ystar" || lower == "y*") return Family::Ystar;
    throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::I: return "i";
        case Condition::II: return "ii";
        case Condition::III: return "iii";
        case Condition::IV: return "iv";
    }
    return "?";
}

namespace {

void require_degree(const Polynomial& g, int n) {
    if (g.is_zero() || g.degree() != n) {
        throw Error(ErrorCode::DegreeMismatch, "expected degree " + std::to_string(n) + ", got " + std::to_string(g.degree()));
    }
}

void require_positive(const Polynomial& g) {
    if (!g.all_positive()) throw Error(ErrorCode::NotPositiveCoefficients, "all coefficients must be positive: " + to_string(g));
}

MembershipReport log_concavity(Family family, int n, const Polynomial& g, bool strict) {
    if (n < 3) throw Error(ErrorCode::InvalidDegree, "W_n is defined for n >= 3");
    require_degree(g, n);
    require_positive(g);
    MembershipReport report;
    report.family = family;
    report.n = n;
    report.member = true;
    for (int i = 2; i <= n - 1; ++i) {
        InequalityCheck check;
        check.description = "b" + std::to_string(i) + "*b" + std::to_string(i - 1) + (strict ? " > " : " >= ") + "b" +
                            std::to_string(i - 2) + "*b" + std::to_string(i + 1);
        check.lhs = g.coeff(i) * g.coeff(i - 1);
        check.rhs = g.coeff(i - 2) * g.coeff(i + 1);
        check.holds = strict ? check.lhs > check.rhs : check.lhs >= check.rhs;
        report.member = report.member && check.holds;
        report.inequality_trace.push_back(std::move(check));
    }
    return report;
}

ProductCheck product_check(const Polynomial& g, int k, int m) {
    ProductCheck check;
    check.k = k;
    check.m = m;
    check.product = shift_divide(hadamard(g, basic_quasistable(k, m)), m);
    check.verdict = quasi_stability_agt(check.product);
    return check;
}

InequalityCheck weak_check(std::string description, Rational lhs, Rational rhs) {
    InequalityCheck c{std::move(description), std::move(lhs), std::move(rhs), false};
    c.holds = c.lhs >= c.rhs;
    return c;
}

}  // namespace

MembershipReport in_W(int n, const Polynomial& g) {
    return log_concavity(Family::W, n, g, true);
}

MembershipReport in_W_closure(int n, const Polynomial& g) {
    return log_concavity(Family::Wbar, n, g, false);
}

MembershipReport in_Y(int n, const Polynomial& g, bool stop_at_first_failure) {
    require_degree(g, n);
    require_positive(g);
    MembershipReport report;
    report.family = Family::Y;
    report.n = n;
    report.member = true;
    for (int k = 2; k <= n; ++k) {
        for (int m = 0; k + m <= n; ++m) {
            ProductCheck check = product_check(g, k, m);
            const bool ok = check.verdict.quasi_stable();
            if (!ok && !report.witness) report.witness = check;
            report.member = report.member && ok;
            report.product_checks.push_back(std::move(check));
            if (!ok && stop_at_first_failure) return report;
        }
    }
    return report;
}

MembershipReport in_Y4_simplified(const Polynomial& g) {
    require_degree(g, 4);
    require_positive(g);
    MembershipReport report;
    report.family = Family::Y4Simplified;
    report.n = 4;
    report.inequality_trace.push_back(weak_check("b1*b2 >= b0*b3", g.coeff(1) * g.coeff(2), g.coeff(0) * g.coeff(3)));
    report.inequality_trace.push_back(weak_check("b2*b3 >= b1*b4", g.coeff(2) * g.coeff(3), g.coeff(1) * g.coeff(4)));
    report.member = std::all_of(report.inequality_trace.begin(), report.inequality_trace.end(), [](const auto& c) { return c.holds; });
    return report;
}

MembershipReport in_Y5_simplified(const Polynomial& g) {
    require_degree(g, 5);
    require_positive(g);
    MembershipReport report;
    report.family = Family::Y5Simplified;
    report.n = 5;
    report.member = true;
    for (auto [k, m] : {std::pair{3, 1}, std::pair{5, 0}}) {
        ProductCheck check = product_check(g, k, m);
        const bool ok = check.verdict.quasi_stable();
        if (!ok && !report.witness) report.witness = check;
        report.member = report.member && ok;
        report.product_checks.push_back(std::move(check));
    }
    return report;
}

bool is_finite_multiplier_on_hyp(const Polynomial& h, int l) {
    require_degree(h, l);
    require_positive(h);
    for (int nu = 2; nu <= l; ++nu) {
        const Polynomial binomial = power(make_polynomial({1, 1}), static_cast<unsigned>(nu));
        if (!has_only_negative_zeros(hadamard(h, binomial))) return false;
    }
    return true;
}

MembershipReport in_Y_star(int n, const Polynomial& g) {
    require_degree(g, n);
    if (!has_quasi_stable_shape(g)) throw Error(ErrorCode::ShapeViolation, "expected b_0 > 0, b_n > 0, b_i >= 0");
    MembershipReport report;
    report.family = Family::Ystar;
    report.n = n;

    if (g.all_positive()) {
        MembershipReport y = in_Y(n, g);
        report.member = y.member;
        report.witness = std::move(y.witness);
        report.product_checks = std::move(y.product_checks);
        if (report.member) report.branch = "Y";
        return report;
    }
    if (n % 2 == 1) {
        report.inequality_trace.push_back({"odd degree requires positive coefficients", 0, 0, false});
        return report;
    }

    const EvenOddParts parts = even_odd_split(g);
    const bool even_shape = parts.odd.is_zero() && parts.even.all_positive();
    report.inequality_trace.push_back({"g = g_e(x^2) with g_e positive", 0, 0, even_shape});
    if (!even_shape) return report;
    const bool multiplier = is_finite_multiplier_on_hyp(parts.even, n / 2);
    report.inequality_trace.push_back({"g_e * (y+1)^nu in Hyp+ for nu = 2..l", 0, 0, multiplier});
    report.member = multiplier;
    if (multiplier) report.branch = "even_multiplier";
    return report;
}

RatioTriple ratios_f(const Polynomial& f) {
    require_degree(f, 5);
    require_positive(f);
    const auto a = [&](int i) { return f.coeff(i); };
    RatioTriple r;
    r.first = a(1) * a(4) / (a(2) * a(3));
    r.second = a(1) * a(5) / (a(3) * a(3));
    r.third = a(0) * a(4) / (a(2) * a(2));
    return r;
}

int SurdMax::compare_to(const Rational& q) const {
    int result = 1;
    for (const auto& t : terms) result = std::min(result, compare(q, t));
    return result;
}

double SurdMax::value() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) best = std::max(best, t.to_double());
    return best;
}

SurdMax t1(const Rational& u, const Rational& v) {
    const Rational quarter(1, 4);
    return {{radical_product(u, v, 4, +1, -1, quarter), radical_product(u, v, 4, -1, +1, quarter)}};
}

SurdMax s1(const Rational& u, const Rational& v) {
    return {{radical_product(u, v, 4, +1, +1, Rational(1, 4))}};
}

SurdMax t4(const Rational& u, const Rational& v) {
    return {{radical_product(u, v, 1, +1, -1, 1), radical_product(u, v, 1, -1, +1, 1)}};
}

namespace {

bool in_half_open(const Rational& x, const Rational& upper, bool strict) {
    return x > 0 && (strict ? x < upper : x <= upper);
}

bool at_least(const Rational& a, const Rational& b, bool strict) {
    return strict ? a > b : a >= b;
}

// (P^2 - QR)^2 <= scale * P (P - Q)(P - R), the quotient form with its denominator cleared.
bool quotient_condition(const RatioTriple& r, const Rational& scale, bool strict) {
    const Rational lhs = (r.first * r.first - r.second * r.third) * (r.first * r.first - r.second * r.third);
    const Rational rhs = scale * r.first * (r.first - r.second) * (r.first - r.third);
    return strict ? lhs < rhs : lhs <= rhs;
}

}  // namespace

bool lemma1_condition(const Polynomial& f, Condition which, bool strict) {
    require_degree(f, 5);
    require_positive(f);
    const auto a = [&](int i) { return f.coeff(i); };

    switch (which) {
        case Condition::I: {
            const StabilityVerdict v = quasi_stability_agt(f);
            return strict ? v.kind == StabilityKind::Stable : v.quasi_stable();
        }
        case Condition::II: {
            const Rational d2 = a(3) * a(4) - a(2) * a(5);
            const Rational cross = a(1) * a(4) - a(0) * a(5);
            const Rational d4 = d2 * (a(1) * a(2) - a(0) * a(3)) - cross * cross;
            if (strict) return d2 > 0 && d4 > 0;
            if (d2 < 0 || d4 < 0) return false;
            const EvenOddParts parts = even_odd_split(f);
            return has_only_negative_zeros(poly_gcd(parts.even, parts.odd));
        }
        case Condition::III:
        case Condition::IV: {
            const RatioTriple r = ratios_f(f);
            const Rational quarter(1, 4);
            const bool domain = in_half_open(r.first, 1, strict) && in_half_open(r.second, quarter, strict) &&
                                in_half_open(r.third, quarter, strict) && at_least(r.first, r.second, strict) &&
                                at_least(r.first, r.third, strict);
            if (!domain) return false;
            if (which == Condition::III) return quotient_condition(r, 1, strict);
            const int lower = t1(r.second, r.third).compare_to(r.first);
            const int upper = s1(r.second, r.third).compare_to(r.first);
            return strict ? (lower > 0 && upper < 0) : (lower >= 0 && upper <= 0);
        }
    }
    return false;
}

bool lemma2_condition(const Polynomial& g, Condition which, bool strict) {
    require_degree(g, 5);
    require_positive(g);
    const auto b = [&](int i) { return g.coeff(i); };

    switch (which) {
        case Condition::I: {
            const StabilityVerdict shifted = quasi_stability_agt(shift_divide(hadamard(g, basic_quasistable(3, 1)), 1));
            const StabilityVerdict full = quasi_stability_agt(hadamard(g, basic_quasistable(5, 0)));
            if (strict) return shifted.kind == StabilityKind::Stable && full.kind == StabilityKind::Stable;
            return shifted.quasi_stable() && full.quasi_stable();
        }
        case Condition::II: {
            const Rational cubic = b(2) * b(3) - b(1) * b(4);
            const Rational d2 = 2 * (b(3) * b(4) - b(2) * b(5));
            const Rational cross = b(1) * b(4) - b(0) * b(5);
            const Rational d4 = 4 * (b(3) * b(4) - b(2) * b(5)) * (b(1) * b(2) - b(0) * b(3)) - cross * cross;
            return strict ? (cubic > 0 && d2 > 0 && d4 > 0) : (cubic >= 0 && d2 >= 0 && d4 >= 0);
        }
        case Condition::III:
        case Condition::IV: {
            const RatioTriple r = ratios_g(g);
            const bool domain = in_half_open(r.first, 1, strict) && in_half_open(r.second, 1, strict) &&
                                in_half_open(r.third, 1, strict) && at_least(r.first, r.second, strict) &&
                                at_least(r.first, r.third, strict);
            if (!domain) return false;
            if (which == Condition::III) return quotient_condition(r, 4, strict);
            const SurdMax lower = t4(r.second, r.third);
            const int lower_vs_one = lower.compare_to(1);
            const int lower_vs_x = lower.compare_to(r.first);
            if (strict) return lower_vs_one > 0 && lower_vs_x > 0 && r.first < 1;
            return lower_vs_one >= 0 && lower_vs_x >= 0 && r.first <= 1;
        }
    }
    return false;
}

double phi_minus(double t) {
    if (!(t >= 0 && t <= 1)) throw Error(ErrorCode::DomainError, "phi is defined on [0, 1]");
    return 1 - std::sqrt(1 - t);
}

double phi_plus(double t) {
    if (!(t >= 0 && t <= 1)) throw Error(ErrorCode::DomainError, "phi is defined on [0, 1]");
    return 1 + std::sqrt(1 - t);
}

Interval phi_minus(const Interval& t) {
    if (t.lo < 0 || t.hi > 1) throw Error(ErrorCode::DomainError, "phi is defined on [0, 1]");
    // t / (1 + sqrt(1 - t)) avoids cancellation near t = 0.
    const Interval one = Interval::point(1);
    return t / (one + sqrt(one - t));
}

Interval phi_plus(const Interval& t) {
    if (t.lo < 0 || t.hi > 1) throw Error(ErrorCode::DomainError, "phi is defined on [0, 1]");
    const Interval one = Interval::point(1);
    return one + sqrt(one - t);
}

namespace {

void require_special_structure(const Polynomial& big_g) {
    if (big_g.is_zero() || big_g.degree() % 2 == 0) throw Error(ErrorCode::StructureViolation, "G must have odd degree 2k+1");
    const EvenOddParts parts = even_odd_split(big_g);
    if (!(parts.even == parts.odd)) throw Error(ErrorCode::StructureViolation, "G must satisfy G_e = G_o");
    if (!big_g.all_positive()) throw Error(ErrorCode::StructureViolation, "G must have positive coefficients");
}

}  // namespace

bool special_case_hypothesis(const Polynomial& big_g) {
    require_special_structure(big_g);
    return quasi_stability_agt(hadamard(big_g, basic_quasistable(big_g.degree(), 0))).quasi_stable();
}

bool special_case_check(const Polynomial& big_g, const Polynomial& big_f) {
    require_special_structure(big_g);
    require_degree(big_f, big_g.degree());
    if (!has_quasi_stable_shape(big_f) || !quasi_stability_agt(big_f).quasi_stable()) {
        throw Error(ErrorCode::NotQuasiStableInput, "F must be quasi-stable");
    }
    return quasi_stability_agt(hadamard(big_f, big_g)).quasi_stable();
}

}  // namespace hurwitz
