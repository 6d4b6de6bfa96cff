#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

struct Violation {
    std::string property;
    long sample = 0;
    std::vector<Polynomial> inputs;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    long samples = 0;
    std::uint64_t seed = 0;
    long checks = 0;
    std::vector<Violation> violations;
    std::map<std::string, long> coverage;  // branch and cell counters

    [[nodiscard]] bool passed() const { return violations.empty(); }
    void merge(const SuiteReport& other);
};

/// Routh-Hurwitz, both Lienard-Chipart variants, the quasi-stability test and the
/// root oracle (where the axis margin exceeds 1e-8) agree on positive-coefficient
/// polynomials of each degree in [min_degree, max_degree].
SuiteReport verify_criteria(long samples_per_degree, std::uint64_t seed, int min_degree = 2, int max_degree = 8);

/// Hermite-Biehler classification against the minor criteria and the sampler's class.
SuiteReport verify_hermite_biehler(long samples, std::uint64_t seed);

/// Hadamard products of quasi-stable pairs, sample i drawn for table cell i mod 16.
SuiteReport verify_garloff_wagner(long samples, std::uint64_t seed);

/// Four-way agreement of the degree-5 ratio conditions, weak and strict, for f and g.
SuiteReport verify_quintic_conditions(long samples, std::uint64_t seed);

/// in_Y(4) <=> in_Y4_simplified <=> in_W_closure(4) on quartics.
SuiteReport verify_quartic_families(long samples, std::uint64_t seed);
/// in_Y(5) <=> in_Y5_simplified on positive quintics.
SuiteReport verify_quintic_families(long samples, std::uint64_t seed);
/// g in the weak quartic family and f quasi-stable of degree <= 4 give a quasi-stable product.
SuiteReport verify_quartic_sufficiency(long samples, std::uint64_t seed);
/// g in Y_5, f stable of degree 5 give a stable product (exact minors and root oracle).
SuiteReport verify_quintic_sufficiency(long samples, std::uint64_t seed);
/// G = (x+1) g(x^2) satisfying the hypothesis keeps quasi-stable F quasi-stable, k in {2,3,4}.
SuiteReport verify_special_case(long samples, std::uint64_t seed);
/// All five theorem suites above.
SuiteReport verify_theorems(long samples, std::uint64_t seed);

/// Certified strict monotonicity of the four phi ratios on t = j / grid_points.
SuiteReport verify_ratio_monotonicity(int grid_points = 1000);

}  // namespace hurwitz
