#include "hurwitz/stability.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

HurwitzMatrix hurwitz_matrix(const Polynomial& f) {
    if (f.is_zero() || f.degree() < 1) throw Error(ErrorCode::DegreeZero, "Hurwitz matrix needs degree >= 1");
    const int n = f.degree();
    HurwitzMatrix h{RationalMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)), n};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            h.entries(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = f.coeff(n - 2 * j + i);
        }
    }
    return h;
}

MinorSequence principal_minors(const HurwitzMatrix& h) {
    return {leading_principal_minors(h.entries)};
}

RouthHurwitzResult is_stable_routh_hurwitz(const Polynomial& f) {
    RouthHurwitzResult result;
    result.minors = hurwitz_minors(f);
    if (!f.all_positive()) return result;
    result.stable = true;
    for (const auto& d : result.minors.deltas) {
        if (d <= 0) {
            result.stable = false;
            break;
        }
    }
    return result;
}

bool is_stable_lienard_chipart(const Polynomial& f, LienardChipartVariant variant) {
    if (!f.all_positive()) throw Error(ErrorCode::NotPositiveCoefficients, "Lienard-Chipart needs positive coefficients");
    const MinorSequence minors = hurwitz_minors(f);
    const std::size_t start = variant == LienardChipartVariant::EvenMinors ? 2 : 1;
    for (std::size_t k = start; k <= minors.size(); k += 2) {
        if (minors.delta(k) <= 0) return false;
    }
    return true;
}

std::string_view to_string(StabilityKind kind) {
    switch (kind) {
        case StabilityKind::Stable: return "stable";
        case StabilityKind::QuasiStable: return "quasi_stable";
        case StabilityKind::NotQuasiStable: return "not_quasi_stable";
    }
    return "unknown";
}

bool has_quasi_stable_shape(const Polynomial& f) {
    return !f.is_zero() && f.coeff(0) > 0 && f.leading() > 0 && f.all_nonnegative();
}

StabilityVerdict quasi_stability_agt(const Polynomial& f) {
    if (!has_quasi_stable_shape(f)) {
        throw Error(ErrorCode::ShapeViolation, "expected a_0 > 0, a_n > 0 and a_i >= 0 for " + to_string(f));
    }
    StabilityVerdict verdict;
    verdict.minors = hurwitz_minors(f);
    const auto& deltas = verdict.minors.deltas;
    const int n = f.degree();

    int m = 0;
    while (m < n && deltas[static_cast<std::size_t>(m)] > 0) ++m;
    verdict.index = m;
    if (m == n) {
        verdict.kind = StabilityKind::Stable;
        verdict.gcd = Polynomial::constant(1);
        return verdict;
    }

    bool tail_zero = true;
    for (int k = m; k < n; ++k) tail_zero = tail_zero && deltas[static_cast<std::size_t>(k)] == 0;
    if (!tail_zero) {
        // A zero followed by a nonzero minor is outside the criterion's pattern.
        bool seen_zero = false;
        for (int k = m; k < n; ++k) {
            if (deltas[static_cast<std::size_t>(k)] == 0) {
                seen_zero = true;
            } else if (seen_zero) {
                verdict.nonstandard_pattern = true;
            }
        }
        verdict.kind = StabilityKind::NotQuasiStable;
        return verdict;
    }

    const EvenOddParts parts = even_odd_split(f);
    verdict.gcd = poly_gcd(parts.even, parts.odd);
    verdict.kind = has_only_negative_zeros(*verdict.gcd) ? StabilityKind::QuasiStable : StabilityKind::NotQuasiStable;
    return verdict;
}

std::string_view to_string(HermiteBiehlerCase c) {
    switch (c) {
        case HermiteBiehlerCase::NotQuasiStable: return "not_quasi_stable";
        case HermiteBiehlerCase::StrictlyStable: return "strictly_stable";
        case HermiteBiehlerCase::QuasiStableGeneric: return "quasi_stable_generic";
        case HermiteBiehlerCase::PureImaginary: return "pure_imaginary";
        case HermiteBiehlerCase::OneNegRestImaginary: return "one_negative_rest_imaginary";
    }
    return "unknown";
}

HermiteBiehlerClass hermite_biehler_classify(const Polynomial& f) {
    if (f.is_zero() || f.coeff(0) <= 0) throw Error(ErrorCode::ShapeViolation, "Hermite-Biehler classification needs a_0 > 0");
    HermiteBiehlerClass out;
    if (!f.all_nonnegative()) return out;

    const EvenOddParts parts = even_odd_split(f);
    if (parts.odd.is_zero()) {
        if (has_only_negative_zeros(parts.even)) out.kind = HermiteBiehlerCase::PureImaginary;
        return out;
    }
    if (!has_only_negative_zeros(parts.even) || !has_only_negative_zeros(parts.odd)) return out;
    if (!interlaces(parts.odd, parts.even).holds) return out;

    const Polynomial g = poly_gcd(parts.even, parts.odd);
    if (g.degree() == 0) {
        out.kind = HermiteBiehlerCase::StrictlyStable;
        return out;
    }
    if (parts.even.degree() == parts.odd.degree()) {
        Rational c = parts.even.leading() / parts.odd.leading();
        if (parts.even == c * parts.odd) {
            out.kind = HermiteBiehlerCase::OneNegRestImaginary;
            out.c = c;
            return out;
        }
    }
    out.kind = HermiteBiehlerCase::QuasiStableGeneric;
    return out;
}

std::string_view to_string(ProductCase c) {
    switch (c) {
        case ProductCase::OddPartVanishes: return "odd_part_vanishes";
        case ProductCase::ProportionalParts: return "proportional_parts";
        case ProductCase::GenericQuasiStable: return "generic_quasi_stable";
        case ProductCase::StrictlyStable: return "strictly_stable";
    }
    return "unknown";
}

namespace {

int table_index(HermiteBiehlerCase c) {
    switch (c) {
        case HermiteBiehlerCase::PureImaginary: return 0;
        case HermiteBiehlerCase::OneNegRestImaginary: return 1;
        case HermiteBiehlerCase::QuasiStableGeneric: return 2;
        case HermiteBiehlerCase::StrictlyStable: return 3;
        case HermiteBiehlerCase::NotQuasiStable: break;
    }
    return -1;
}

}  // namespace

int GarloffWagnerCell::row() const { return table_index(f_class); }
int GarloffWagnerCell::col() const { return table_index(p_class); }

GarloffWagnerCell garloff_wagner_case(const Polynomial& f, const Polynomial& p) {
    if (!has_quasi_stable_shape(f) || !quasi_stability_agt(f).quasi_stable()) {
        throw Error(ErrorCode::NotQuasiStableInput, "first factor is not quasi-stable: " + to_string(f));
    }
    if (!has_quasi_stable_shape(p) || !quasi_stability_agt(p).quasi_stable()) {
        throw Error(ErrorCode::NotQuasiStableInput, "second factor is not quasi-stable: " + to_string(p));
    }
    GarloffWagnerCell cell;
    cell.f_class = hermite_biehler_classify(f).kind;
    cell.p_class = hermite_biehler_classify(p).kind;

    const int k = std::min(f.degree(), p.degree());
    bool odd_vanishes = true;
    for (int i = 1; i <= k; i += 2) odd_vanishes = odd_vanishes && f.coeff(i) * p.coeff(i) == 0;

    if (odd_vanishes) {
        cell.kind = ProductCase::OddPartVanishes;
    } else if (cell.f_class == HermiteBiehlerCase::OneNegRestImaginary && cell.p_class == HermiteBiehlerCase::OneNegRestImaginary) {
        cell.kind = ProductCase::ProportionalParts;
    } else if (cell.f_class == HermiteBiehlerCase::StrictlyStable && cell.p_class == HermiteBiehlerCase::StrictlyStable) {
        cell.kind = ProductCase::StrictlyStable;
    } else {
        cell.kind = ProductCase::GenericQuasiStable;
    }
    return cell;
}

}  // namespace hurwitz
