#include "hurwitz/roots_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hurwitz/error.hpp"
#include "hurwitz/real_roots.hpp"

namespace hurwitz {

namespace {

using Real = long double;
using Complex = std::complex<Real>;

Real to_real(const Rational& q) {
    mpf_class x(q, 256);
    const double hi = x.get_d();
    mpf_class rest = x - hi;
    return static_cast<Real>(hi) + static_cast<Real>(rest.get_d());
}

std::vector<Real> to_reals(const Polynomial& p) {
    std::vector<Real> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_real(c));
    return out;
}

struct Evaluation {
    Complex value;
    Complex slope;
};

Evaluation horner(const std::vector<Real>& c, Complex z) {
    Complex p(0);
    Complex dp(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

struct FactorRoots {
    std::vector<Complex> roots;
    std::vector<Real> error_bounds;
    bool converged = true;
};

FactorRoots aberth(const std::vector<Real>& c) {
    FactorRoots out;
    const std::size_t d = c.size() - 1;
    if (d == 1) {
        out.roots.emplace_back(-c[0] / c[1]);
        out.error_bounds.push_back(std::numeric_limits<Real>::epsilon() * std::abs(c[0] / c[1]));
        return out;
    }

    Real radius = c[0] != 0 ? std::pow(std::abs(c[0] / c[d]), Real(1) / static_cast<Real>(d)) : Real(1);
    if (!(radius > 0) || !std::isfinite(static_cast<double>(radius))) radius = 1;
    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(d) + Real(0.7);
        z[k] = std::polar(radius, angle);
    }

    constexpr int kMaxIterations = 500;
    const Real stop = 8 * std::numeric_limits<Real>::epsilon();
    std::vector<bool> settled(d, false);
    bool done = false;
    for (int iter = 0; iter < kMaxIterations && !done; ++iter) {
        done = true;
        for (std::size_t k = 0; k < d; ++k) {
            if (settled[k]) continue;
            const auto [p, dp] = horner(c, z[k]);
            // stop once |p| is at the rounding level of the Horner sum
            Real magnitude = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) magnitude = magnitude * std::abs(z[k]) + std::abs(*it);
            if (std::abs(p) <= 4 * static_cast<Real>(d) * std::numeric_limits<Real>::epsilon() * magnitude) {
                settled[k] = true;
                continue;
            }
            const Complex newton = p / dp;
            Complex repulsion(0);
            for (std::size_t j = 0; j < d; ++j) {
                if (j != k) repulsion += Real(1) / (z[k] - z[j]);
            }
            const Complex step = newton / (Real(1) - newton * repulsion);
            z[k] -= step;
            if (std::abs(step) > stop * std::max(std::abs(z[k]), Real(1e-30))) {
                done = false;
            } else {
                settled[k] = true;
            }
        }
    }
    out.converged = done;

    for (auto& root : z) {
        for (int polish = 0; polish < 3; ++polish) {
            const auto [p, dp] = horner(c, root);
            if (dp == Complex(0)) break;
            const Complex candidate = root - p / dp;
            if (std::abs(horner(c, candidate).value) < std::abs(p)) root = candidate;
        }
        const auto [p, dp] = horner(c, root);
        Real bound = std::numeric_limits<Real>::epsilon() * std::abs(root);
        if (dp != Complex(0)) bound += static_cast<Real>(d) * std::abs(p / dp);
        out.roots.push_back(root);
        out.error_bounds.push_back(bound);
    }
    return out;
}

// Replaces near-conjugate pairs by exact conjugates and snaps lone near-real roots onto the axis.
void pair_conjugates(std::vector<Complex>& roots, const std::vector<Real>& bounds) {
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i] || roots[i].imag() <= 0) continue;
        std::size_t best = roots.size();
        Real best_dist = std::numeric_limits<Real>::infinity();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j] || roots[j].imag() > 0) continue;
            const Real dist = std::abs(roots[i] - std::conj(roots[j]));
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best == roots.size() || best_dist > 1e-6L * std::max(Real(1), std::abs(roots[i]))) continue;
        const Complex mean = (roots[i] + std::conj(roots[best])) / Real(2);
        roots[i] = mean;
        roots[best] = std::conj(mean);
        used[i] = used[best] = true;
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!used[i] && std::abs(roots[i].imag()) <= bounds[i]) roots[i] = Complex(roots[i].real(), 0);
    }
}

}  // namespace

RootSet find_roots(const Polynomial& f, double tol) {
    if (f.is_zero() || f.degree() < 1) throw Error(ErrorCode::DegreeZero, "root finding needs degree >= 1");
    RootSet rs;
    rs.tolerance = tol;

    const auto factors = squarefree_factorization(f);
    std::vector<Complex> roots;
    std::vector<Real> bounds;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        FactorRoots fr = aberth(to_reals(factors[i]));
        rs.reliable = rs.reliable && fr.converged;
        for (std::size_t r = 0; r < fr.roots.size(); ++r) {
            for (std::size_t mult = 0; mult <= i; ++mult) {
                roots.push_back(fr.roots[r]);
                bounds.push_back(fr.error_bounds[r]);
            }
        }
    }
    pair_conjugates(roots, bounds);

    const auto coeffs = to_reals(f);
    for (std::size_t r = 0; r < roots.size(); ++r) {
        const Complex value = horner(coeffs, roots[r]).value;
        Real scale = 0;
        Real power = 1;
        for (const Real c : coeffs) {
            scale += std::abs(c) * power;
            power *= std::abs(roots[r]);
        }
        const double residual = scale > 0 ? static_cast<double>(std::abs(value) / scale) : 0.0;
        rs.roots.emplace_back(static_cast<double>(roots[r].real()), static_cast<double>(roots[r].imag()));
        rs.residuals.push_back(residual);
        rs.error_bounds.push_back(static_cast<double>(bounds[r]));
        if (!(residual <= tol)) rs.reliable = false;
    }
    if (static_cast<int>(rs.roots.size()) != f.degree()) rs.reliable = false;
    return rs;
}

HalfPlaneSummary classify_halfplane(const RootSet& rs, double eps) {
    HalfPlaneSummary s;
    s.epsilon = eps;
    for (const auto& z : rs.roots) {
        if (z.real() < -eps) {
            ++s.strictly_left;
        } else if (z.real() > eps) {
            ++s.strictly_right;
        } else {
            ++s.boundary;
        }
    }
    return s;
}

std::string_view to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::Stable: return "stable";
        case RootVerdict::QuasiStable: return "quasi_stable";
        case RootVerdict::NotQuasiStable: return "not_quasi_stable";
        case RootVerdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

double axis_margin(const RootSet& rs) {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& z : rs.roots) margin = std::min(margin, std::abs(z.real()));
    return margin;
}

RootVerdict verdict_by_roots(const Polynomial& f, double eps) {
    const RootSet rs = find_roots(f);
    if (!rs.reliable) return RootVerdict::Inconclusive;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const double re = std::abs(rs.roots[i].real());
        if (re <= 10 * eps && std::abs(re - eps) <= rs.error_bounds[i]) return RootVerdict::Inconclusive;
    }
    const HalfPlaneSummary s = classify_halfplane(rs, eps);
    if (s.strictly_right > 0) return RootVerdict::NotQuasiStable;
    if (s.boundary > 0) return RootVerdict::QuasiStable;
    return RootVerdict::Stable;
}

}  // namespace hurwitz
