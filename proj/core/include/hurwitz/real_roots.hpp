#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// Monic GCD by the Euclidean algorithm over Q. gcd(f, 0) = monic(f).
/// Throws BothZero when both arguments are zero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

/// Product of the distinct irreducible factors, made monic.
Polynomial squarefree_part(const Polynomial& f);

/// Yun's algorithm: f = lc(f) * prod_i factors[i]^(i+1), every factor monic and
/// squarefree, pairwise coprime. Trailing constant factors are kept as 1.
std::vector<Polynomial> squarefree_factorization(const Polynomial& f);

/// Sturm chain of a squarefree polynomial; counts distinct real roots.
class SturmChain {
public:
    explicit SturmChain(const Polynomial& squarefree);

    /// Roots in (lo, hi]; std::nullopt stands for -inf / +inf respectively.
    [[nodiscard]] int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;
    [[nodiscard]] int count_all() const { return count(std::nullopt, std::nullopt); }

private:
    [[nodiscard]] int variations_at(const Rational& x) const;
    [[nodiscard]] int variations_at_infinity(bool positive) const;

    std::vector<Polynomial> chain_;
};

/// Half-open interval (lo, hi] holding exactly one root of the isolated polynomial.
struct RootInterval {
    Rational lo;
    Rational hi;
};

/// Isolates all distinct real roots of `f`, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const Polynomial& f);

/// All zeros real (a nonzero constant counts as real-rooted).
bool is_real_rooted(const Polynomial& f);

/// All zeros real and strictly negative; constants qualify vacuously.
/// A zero at the origin fails; repeated negative zeros pass.
bool has_only_negative_zeros(const Polynomial& f);

struct InterlacingResult {
    bool holds = false;
    bool strict = false;  // no coincident zeros were needed
    std::string reason;   // why it failed, or which convention applied
};

/// g interlaces h (g before h): either deg h = deg g + 1 with
/// a1 <= b1 <= a2 <= ... <= bn <= a(n+1), or equal degrees with
/// b1 <= a1 <= b2 <= ... <= bn <= an, where a are the zeros of h and b of g,
/// both ascending. The zero polynomial interlaces, and is interlaced by, any
/// real-rooted polynomial. Root order is decided exactly from Sturm isolation.
InterlacingResult interlaces(const Polynomial& g, const Polynomial& h);

}  // namespace hurwitz
