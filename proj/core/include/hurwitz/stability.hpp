#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hurwitz/matrix.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/real_roots.hpp"

namespace hurwitz {

/// n x n Hurwitz matrix of a degree-n polynomial. With 1-based indices,
/// entry (i, j) is a_{n - 2j + i}, zero when the index leaves [0, n]:
///
///   a_{n-1} a_{n-3} a_{n-5} ...
///   a_n     a_{n-2} a_{n-4} ...
///   0       a_{n-1} a_{n-3} ...
///   0       a_n     a_{n-2} ...
struct HurwitzMatrix {
    RationalMatrix entries;
    int degree = 0;
};

/// Leading principal minors Delta_1 .. Delta_n of a Hurwitz matrix.
struct MinorSequence {
    std::vector<Rational> deltas;

    /// 1-based access: delta(k) = Delta_k.
    [[nodiscard]] const Rational& delta(std::size_t k) const { return deltas.at(k - 1); }
    [[nodiscard]] std::size_t size() const { return deltas.size(); }
    friend bool operator==(const MinorSequence&, const MinorSequence&) = default;
};

/// Throws DegreeZero for constants.
HurwitzMatrix hurwitz_matrix(const Polynomial& f);
MinorSequence principal_minors(const HurwitzMatrix& h);
inline MinorSequence hurwitz_minors(const Polynomial& f) { return principal_minors(hurwitz_matrix(f)); }

struct RouthHurwitzResult {
    bool stable = false;
    MinorSequence minors;
};

/// Stable iff every coefficient is positive and every Delta_k > 0.
RouthHurwitzResult is_stable_routh_hurwitz(const Polynomial& f);

enum class LienardChipartVariant { EvenMinors, OddMinors };

/// For all-positive coefficients only (throws NotPositiveCoefficients):
/// EvenMinors checks Delta_2, Delta_4, ...; OddMinors checks Delta_1, Delta_3, ...
bool is_stable_lienard_chipart(const Polynomial& f, LienardChipartVariant variant);

enum class StabilityKind { Stable, QuasiStable, NotQuasiStable };

std::string_view to_string(StabilityKind kind);

struct StabilityVerdict {
    StabilityKind kind = StabilityKind::NotQuasiStable;
    int index = 0;  // length of the positive prefix of the minor sequence
    MinorSequence minors;
    std::optional<Polynomial> gcd;  // GCD(f_e, f_o) when the minor pattern qualified
    bool nonstandard_pattern = false;  // a zero minor followed by a nonzero one

    [[nodiscard]] bool quasi_stable() const { return kind != StabilityKind::NotQuasiStable; }
};

/// Quasi-stability with stability index (Adm-Garloff-Tyaglov criterion):
/// Delta_1..Delta_m > 0, Delta_{m+1} = ... = Delta_n = 0 and GCD(f_e, f_o) has
/// only negative zeros. Needs a_0 > 0, a_n > 0, a_i >= 0 (else ShapeViolation).
StabilityVerdict quasi_stability_agt(const Polynomial& f);

/// True when the coefficients have the closed-left-half-plane shape
/// a_0 > 0, a_n > 0, a_i >= 0.
bool has_quasi_stable_shape(const Polynomial& f);

enum class HermiteBiehlerCase {
    NotQuasiStable,
    StrictlyStable,       // GCD(f_e, f_o) = 1
    QuasiStableGeneric,   // quasi-stable, none of the special cases
    PureImaginary,        // f_o = 0
    OneNegRestImaginary,  // f_e = c f_o, f_o != 0
};

std::string_view to_string(HermiteBiehlerCase c);

struct HermiteBiehlerClass {
    HermiteBiehlerCase kind = HermiteBiehlerCase::NotQuasiStable;
    std::optional<Rational> c;  // proportionality constant for OneNegRestImaginary
};

/// Classification from the even/odd parts alone: f_e and f_o must have only
/// negative zeros and f_o must interlace f_e. Needs a_0 > 0. Degree one is
/// reported as StrictlyStable.
HermiteBiehlerClass hermite_biehler_classify(const Polynomial& f);

enum class ProductCase { OddPartVanishes, ProportionalParts, GenericQuasiStable, StrictlyStable };

std::string_view to_string(ProductCase c);

struct GarloffWagnerCell {
    ProductCase kind = ProductCase::GenericQuasiStable;
    HermiteBiehlerCase f_class = HermiteBiehlerCase::NotQuasiStable;
    HermiteBiehlerCase p_class = HermiteBiehlerCase::NotQuasiStable;

    /// Row/column index 0..3 in the Garloff-Wagner table:
    /// pure imaginary, proportional parts, generic quasi-stable, stable.
    [[nodiscard]] int row() const;
    [[nodiscard]] int col() const;
};

/// Which cell of the Garloff-Wagner table a pair of quasi-stable polynomials
/// falls into. Throws NotQuasiStableInput otherwise.
GarloffWagnerCell garloff_wagner_case(const Polynomial& f, const Polynomial& p);

}  // namespace hurwitz
