#include "hurwitz/real_roots.hpp"

#include <algorithm>

#include "hurwitz/error.hpp"

namespace hurwitz {

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Polynomial a = f.monic();
    Polynomial b = g.monic();
    while (!b.is_zero()) {
        Polynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) return f.monic();
    Polynomial g = poly_gcd(f, f.derivative());
    return divide(f, g).quotient.monic();
}

std::vector<Polynomial> squarefree_factorization(const Polynomial& f) {
    std::vector<Polynomial> factors;
    if (f.is_zero() || f.degree() == 0) return factors;

    const Polynomial one = Polynomial::constant(1);
    Polynomial fp = f.derivative();
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = divide(f, a).quotient.monic();
    Polynomial c = divide(fp, a).quotient;
    c = (Rational(1) / f.leading()) * c;
    Polynomial d = c - b.derivative();
    while (!(b.degree() == 0)) {
        Polynomial ai = poly_gcd(b, d);
        factors.push_back(ai);
        Polynomial b_next = divide(b, ai).quotient;
        Polynomial c_next = divide(d, ai).quotient;
        d = c_next - b_next.derivative();
        b = std::move(b_next);
    }
    while (!factors.empty() && factors.back() == one) factors.pop_back();
    return factors;
}

namespace {

int sign_at_infinity(const Polynomial& p, bool positive) {
    int s = sign(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& squarefree) {
    chain_.push_back(squarefree);
    if (squarefree.is_zero() || squarefree.degree() == 0) return;
    chain_.push_back(squarefree.derivative());
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
        Polynomial r = divide(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(sign(p.evaluate(x)));
    return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sign_at_infinity(p, positive));
    return count_variations(signs);
}

int SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    if (chain_.front().is_zero() || chain_.front().degree() == 0) return 0;
    int v_lo = lo ? variations_at(*lo) : variations_at_infinity(false);
    int v_hi = hi ? variations_at(*hi) : variations_at_infinity(true);
    return v_lo - v_hi;
}

namespace {

// Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_n|.
Rational cauchy_bound(const Polynomial& p) {
    Rational best(0);
    const auto c = p.coeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) best = std::max(best, Rational(abs(c[i] / p.leading())));
    return best + 1;
}

void bisect(const SturmChain& chain, const Rational& lo, const Rational& hi, int roots, std::vector<RootInterval>& out) {
    if (roots == 0) return;
    if (roots == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    int left = chain.count(lo, mid);
    bisect(chain, lo, mid, left, out);
    bisect(chain, mid, hi, roots - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& f) {
    std::vector<RootInterval> out;
    if (f.is_zero() || f.degree() == 0) return out;
    Polynomial s = squarefree_part(f);
    SturmChain chain(s);
    Rational bound = cauchy_bound(s);
    Rational lo = -bound;
    int total = chain.count(lo, bound);
    bisect(chain, lo, bound, total, out);
    return out;
}

bool is_real_rooted(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) return true;
    Polynomial s = squarefree_part(f);
    return SturmChain(s).count_all() == s.degree();
}

bool has_only_negative_zeros(const Polynomial& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    Polynomial s = squarefree_part(f);
    if (s.coeff(0) == 0) return false;
    return SturmChain(s).count(std::nullopt, Rational(0)) == s.degree();
}

namespace {

// Ranks of the zeros of `p` (with multiplicity, ascending) inside a shared isolation.
std::vector<int> root_ranks(const Polynomial& p, const std::vector<RootInterval>& intervals) {
    std::vector<int> ranks;
    const auto factors = squarefree_factorization(p);
    std::vector<SturmChain> chains;
    chains.reserve(factors.size());
    for (const auto& f : factors) chains.emplace_back(f);
    for (std::size_t r = 0; r < intervals.size(); ++r) {
        for (std::size_t i = 0; i < chains.size(); ++i) {
            if (chains[i].count(intervals[r].lo, intervals[r].hi) == 1) {
                ranks.insert(ranks.end(), i + 1, static_cast<int>(r));
            }
        }
    }
    return ranks;
}

}  // namespace

InterlacingResult interlaces(const Polynomial& g, const Polynomial& h) {
    InterlacingResult result;
    if (g.is_zero() || h.is_zero()) {
        const Polynomial& other = g.is_zero() ? h : g;
        result.holds = is_real_rooted(other);
        result.strict = result.holds;
        result.reason = result.holds ? "zero-polynomial convention" : "not real-rooted";
        return result;
    }
    if (!is_real_rooted(g) || !is_real_rooted(h)) {
        result.reason = "not real-rooted";
        return result;
    }
    const int n = g.degree();
    const int m = h.degree();
    if (m != n && m != n + 1) {
        result.reason = "degree pattern";
        return result;
    }

    const auto intervals = isolate_real_roots(g * h);
    const auto beta = root_ranks(g, intervals);
    const auto alpha = root_ranks(h, intervals);
    if (static_cast<int>(beta.size()) != n || static_cast<int>(alpha.size()) != m) {
        throw Error(ErrorCode::DomainError, "root multiplicities do not add up to the degree");
    }

    bool holds = true;
    bool strict = true;
    auto check = [&](int lower, int upper) {
        if (lower > upper) holds = false;
        if (lower == upper) strict = false;
    };
    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (m == n + 1) {
            check(alpha[ui], beta[ui]);
            check(beta[ui], alpha[ui + 1]);
        } else {
            check(beta[ui], alpha[ui]);
            if (i + 1 < n) check(alpha[ui], beta[ui + 1]);
        }
    }
    result.holds = holds;
    result.strict = holds && strict;
    if (!holds) result.reason = "zeros out of order";
    return result;
}

}  // namespace hurwitz
