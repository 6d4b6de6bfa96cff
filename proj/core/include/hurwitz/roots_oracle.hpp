#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kDefaultAxisEpsilon = 1e-9;

/// Floating-point zeros used to cross-check the exact criteria. Never used to decide.
struct RootSet {
    std::vector<std::complex<double>> roots;
    /// |f(z)| / sum |a_i| |z|^i for each root (relative backward error).
    std::vector<double> residuals;
    /// Estimated forward error of each root.
    std::vector<double> error_bounds;
    double tolerance = kDefaultRootTolerance;
    bool reliable = true;
};

struct HalfPlaneSummary {
    int strictly_left = 0;
    int boundary = 0;
    int strictly_right = 0;
    double epsilon = kDefaultAxisEpsilon;
};

/// Aberth-Ehrlich simultaneous iteration in extended precision, run on each
/// squarefree factor so repeated zeros are found as simple ones, then Newton
/// polished and paired into exact conjugates. Start points sit on a circle
/// at a fixed angular offset, so the result is deterministic.
/// Sets reliable = false when the iteration budget runs out or a residual
/// exceeds `tol`.
RootSet find_roots(const Polynomial& f, double tol = kDefaultRootTolerance);

HalfPlaneSummary classify_halfplane(const RootSet& rs, double eps = kDefaultAxisEpsilon);

enum class RootVerdict { Stable, QuasiStable, NotQuasiStable, Inconclusive };

std::string_view to_string(RootVerdict v);

/// Inconclusive when some root lies within 10 eps of the imaginary axis and
/// its error bound straddles the +-eps band, or when the root set is unreliable.
RootVerdict verdict_by_roots(const Polynomial& f, double eps = kDefaultAxisEpsilon);

/// Smallest |Re z| over the roots; infinity for an empty set.
double axis_margin(const RootSet& rs);

}  // namespace hurwitz
