#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/idealizer.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/roots_oracle.hpp"
#include "hurwitz/stability.hpp"

namespace hurwitz {

enum class SampleMode { Stable, QuasiStable, PositiveCoeffs, YMember };

std::string_view to_string(SampleMode mode);

struct SampleConfig {
    int n = 5;
    long count = 1000;
    std::uint64_t seed = 1;
    Rational root_scale{4};
    SampleMode mode = SampleMode::Stable;
};

/// Seedable 64-bit generator. Sample i of a run with seed s draws from
/// Rng::for_index(s, i), so results do not depend on how work is split.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    static Rng for_index(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi);
    bool chance(double p) { return uniform() < p; }
    /// Uniform rational in [lo, hi] on the grid of step 1/denominator.
    Rational uniform_rational(const Rational& lo, const Rational& hi, long denominator = 1000);

private:
    std::mt19937_64 engine_;
};

/// Real roots in [-root_scale, -1/1000], conjugate pairs with the same real range
/// and imaginary part in [0, root_scale]; expanded exactly. Always Hurwitz stable.
Polynomial sample_stable(int n, Rng& rng, const Rational& root_scale = 4);

/// Strictly-left roots mixed with imaginary pairs and optional repeated factors;
/// includes pure-imaginary (even) outputs. a_0 > 0 always.
Polynomial sample_quasi_stable(int n, Rng& rng, const Rational& root_scale = 4);

/// Quasi-stable polynomial of degree n in a prescribed Hermite-Biehler class.
/// PureImaginary needs even n; OneNegRestImaginary odd n >= 3; QuasiStableGeneric
/// n >= 4. Throws InvalidDegree otherwise.
Polynomial sample_with_class(HermiteBiehlerCase kind, int n, Rng& rng, const Rational& root_scale = 4);

/// Positive coefficients, either log-uniform or drawn around a log-concave profile.
Polynomial sample_positive(int n, Rng& rng);

/// Rejection sampling on in_Y. Returns nullopt after `max_tries` rejections.
std::optional<Polynomial> sample_y_member(int n, Rng& rng, int max_tries = 1000, int* tries_used = nullptr);

/// Draws one polynomial according to the config's mode (nullopt only for YMember rejections).
std::optional<Polynomial> draw(const SampleConfig& config, Rng& rng);

/// count draws, sample i from Rng::for_index(seed, i); parallel over indices.
std::vector<std::optional<Polynomial>> sample_stream(const SampleConfig& config);

/// Runs body(i) for i in [0, count) on worker threads; results in index order.
template <typename T>
std::vector<T> parallel_map(long count, const std::function<T(long)>& body, unsigned workers = 0);

struct QFamilyResult {
    Polynomial poly;
    Polynomial limit;  // (alpha + beta x)(x^2+1)^n2 x^(2 n3) with zero terms dropped
    bool stable = false;
};

/// alpha prod_i (i mu x^2 + 1) prod_i (x^2 + 1 + i eps) prod_i (x^2 + i eps)
///   + beta x prod_i (i eps x^2 + 1) prod_i (x^2 + 1 + i mu) prod_i (x^2 + i mu),
/// each product over i = 1..n_j. Needs mu > eps > 0, alpha, beta >= 0 not both zero.
QFamilyResult q_family(int n1, int n2, int n3, const Rational& eps, const Rational& mu, const Rational& alpha,
                       const Rational& beta);

struct CounterexampleRecord {
    Polynomial f;
    Polynomial g;
    Polynomial product;
    std::map<std::string, bool> g_memberships;
    MinorSequence minor_evidence;
    RootSet root_evidence;
    HalfPlaneSummary halfplane;

    /// Recomputes product and minors from f and g and compares exactly.
    [[nodiscard]] bool verify() const;
};

CounterexampleRecord make_record(const Polynomial& f, const Polynomial& g);

struct ProbeReport {
    int n = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long g_draws = 0;      // proposals drawn for g
    long g_accepted = 0;   // proposals that passed in_Y
    long pairs_tested = 0;
    long oracle_disagreements = 0;
    std::vector<CounterexampleRecord> records;

    [[nodiscard]] double acceptance_rate() const { return g_draws == 0 ? 0.0 : double(g_accepted) / double(g_draws); }
};

/// Sample i draws g from Y_n by rejection and f from H_m with m in 3..n, and records
/// pairs with unstable f * g.
ProbeReport probe_conjecture(int n, long samples, std::uint64_t seed);

struct ExampleCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ExampleReport {
    std::string title;
    std::vector<ExampleCheck> checks;
    std::optional<CounterexampleRecord> record;

    [[nodiscard]] bool pass() const;
};

ExampleReport reproduce_example_1();
ExampleReport reproduce_example_2();

}  // namespace hurwitz

#include "hurwitz/detail/parallel.hpp"
