#include "hurwitz/search.hpp"

#include <cmath>
#include <limits>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view to_string(SampleMode mode) {
    switch (mode) {
        case SampleMode::Stable: return "stable";
        case SampleMode::QuasiStable: return "quasi_stable";
        case SampleMode::PositiveCoeffs: return "positive_coeffs";
        case SampleMode::YMember: return "Y_member";
    }
    return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Positive rational with about four significant digits.
Rational quantize(double x) {
    long den = 1000;
    while (x * double(den) < 1000 && den < 1000000000000L) den *= 10;
    const long num = std::max(1L, std::lround(x * double(den)));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Polynomial linear(const Rational& root_abs) { return Polynomial::from_coeffs({root_abs, 1}); }

Polynomial quadratic(const Rational& c0, const Rational& c1) { return Polynomial::from_coeffs({c0, c1, 1}); }

// (x - z)(x - conj z) for z = -sigma + i tau.
Polynomial stable_pair(Rng& rng, const Rational& scale) {
    const Rational sigma = rng.uniform_rational(Rational(1, 1000), scale);
    const Rational tau = rng.uniform_rational(0, scale);
    return quadratic(sigma * sigma + tau * tau, 2 * sigma);
}

Polynomial imaginary_pair(Rng& rng, const Rational& scale) {
    const Rational omega = rng.uniform_rational(Rational(1, 1000), scale);
    return quadratic(omega * omega, 0);
}

Polynomial positive_leading(Rng& rng) { return Polynomial::constant(rng.uniform_rational(Rational(1, 2), 2, 100)); }

// Product of (count) imaginary pairs; with probability 1/3 the last factor repeats one already drawn.
Polynomial imaginary_block(int pairs, Rng& rng, const Rational& scale) {
    Polynomial out = Polynomial::constant(1);
    Polynomial last = Polynomial::constant(1);
    for (int i = 0; i < pairs; ++i) {
        const bool repeat = i > 0 && rng.chance(1.0 / 3.0);
        if (!repeat) last = imaginary_pair(rng, scale);
        out = out * last;
    }
    return out;
}

}  // namespace

Rng Rng::for_index(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index)));
}

double Rng::uniform() {
    return double(engine_() >> 11) * 0x1.0p-53;
}

long Rng::uniform_int(long lo, long hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<long>(x % span);
}

Rational Rng::uniform_rational(const Rational& lo, const Rational& hi, long denominator) {
    const Rational a = lo * denominator;
    const Rational b = hi * denominator;
    mpz_class first;
    mpz_class last;
    mpz_cdiv_q(first.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    const long k = uniform_int(first.get_si(), last.get_si());
    Rational q(k, denominator);
    q.canonicalize();
    return q;
}

Polynomial sample_stable(int n, Rng& rng, const Rational& root_scale) {
    if (n < 1) throw Error(ErrorCode::InvalidDegree, "degree must be at least 1");
    Polynomial out = positive_leading(rng);
    int remaining = n;
    while (remaining > 0) {
        if (remaining >= 2 && rng.chance(0.5)) {
            out = out * stable_pair(rng, root_scale);
            remaining -= 2;
        } else {
            out = out * linear(rng.uniform_rational(Rational(1, 1000), root_scale));
            remaining -= 1;
        }
    }
    return out;
}

Polynomial sample_with_class(HermiteBiehlerCase kind, int n, Rng& rng, const Rational& root_scale) {
    switch (kind) {
        case HermiteBiehlerCase::StrictlyStable:
            return sample_stable(n, rng, root_scale);
        case HermiteBiehlerCase::PureImaginary:
            if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidDegree, "pure imaginary class needs even degree");
            return positive_leading(rng) * imaginary_block(n / 2, rng, root_scale);
        case HermiteBiehlerCase::OneNegRestImaginary:
            if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidDegree, "one-negative class needs odd degree >= 3");
            return positive_leading(rng) * linear(rng.uniform_rational(Rational(1, 1000), root_scale)) *
                   imaginary_block(n / 2, rng, root_scale);
        case HermiteBiehlerCase::QuasiStableGeneric: {
            if (n < 4) throw Error(ErrorCode::InvalidDegree, "generic quasi-stable class needs degree >= 4");
            const int pairs = static_cast<int>(rng.uniform_int(1, (n - 2) / 2));
            Polynomial stable_part = sample_stable(n - 2 * pairs, rng, root_scale);
            // Repeating a stable factor exercises multiple zeros off the axis.
            if (n - 2 * pairs >= 2 && rng.chance(0.25)) {
                const Polynomial lin = linear(rng.uniform_rational(Rational(1, 1000), root_scale));
                stable_part = positive_leading(rng) * lin * lin * (n - 2 * pairs > 2 ? sample_stable(n - 2 * pairs - 2, rng, root_scale) : Polynomial::constant(1));
            }
            return stable_part * imaginary_block(pairs, rng, root_scale);
        }
        case HermiteBiehlerCase::NotQuasiStable:
            break;
    }
    throw Error(ErrorCode::InvalidDegree, "no sampler for this class");
}

Polynomial sample_quasi_stable(int n, Rng& rng, const Rational& root_scale) {
    if (n < 1) throw Error(ErrorCode::InvalidDegree, "degree must be at least 1");
    std::vector<HermiteBiehlerCase> options{HermiteBiehlerCase::StrictlyStable};
    if (n % 2 == 0) options.push_back(HermiteBiehlerCase::PureImaginary);
    if (n % 2 == 1 && n >= 3) options.push_back(HermiteBiehlerCase::OneNegRestImaginary);
    if (n >= 4) {
        options.push_back(HermiteBiehlerCase::QuasiStableGeneric);
        options.push_back(HermiteBiehlerCase::QuasiStableGeneric);
    }
    const auto pick = options[static_cast<std::size_t>(rng.uniform_int(0, long(options.size()) - 1))];
    return sample_with_class(pick, n, rng, root_scale);
}

Polynomial sample_positive(int n, Rng& rng) {
    if (n < 0) throw Error(ErrorCode::InvalidDegree, "degree must be nonnegative");
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    if (rng.chance(0.3)) {
        for (int i = 0; i <= n; ++i) coeffs.push_back(quantize(std::exp(8 * rng.uniform() - 4)));
    } else {
        // log b_i = i log r - kappa i^2 / 2 + noise, centred so the middle term is O(1)
        const double log_r = 2 * rng.uniform() - 1;
        const double kappa = 2 * rng.uniform();
        const double noise = 0.3 * rng.uniform();
        const double centre = n / 2.0;
        for (int i = 0; i <= n; ++i) {
            const double d = i - centre;
            const double s = d * log_r - kappa * d * d / 2 + noise * (2 * rng.uniform() - 1);
            coeffs.push_back(quantize(std::exp(s)));
        }
    }
    return Polynomial::from_coeffs(std::move(coeffs));
}

std::optional<Polynomial> sample_y_member(int n, Rng& rng, int max_tries, int* tries_used) {
    for (int t = 1; t <= max_tries; ++t) {
        Polynomial g = sample_positive(n, rng);
        if (in_Y(n, g).member) {
            if (tries_used) *tries_used = t;
            return g;
        }
    }
    if (tries_used) *tries_used = max_tries;
    return std::nullopt;
}

std::optional<Polynomial> draw(const SampleConfig& config, Rng& rng) {
    switch (config.mode) {
        case SampleMode::Stable: return sample_stable(config.n, rng, config.root_scale);
        case SampleMode::QuasiStable: return sample_quasi_stable(config.n, rng, config.root_scale);
        case SampleMode::PositiveCoeffs: return sample_positive(config.n, rng);
        case SampleMode::YMember: return sample_y_member(config.n, rng);
    }
    return std::nullopt;
}

std::vector<std::optional<Polynomial>> sample_stream(const SampleConfig& config) {
    return parallel_map<std::optional<Polynomial>>(config.count, [&](long i) {
        Rng rng = Rng::for_index(config.seed, static_cast<std::uint64_t>(i));
        return draw(config, rng);
    });
}

QFamilyResult q_family(int n1, int n2, int n3, const Rational& eps, const Rational& mu, const Rational& alpha,
                       const Rational& beta) {
    if (n1 < 0 || n2 < 0 || n3 < 0) throw Error(ErrorCode::ParamDomain, "exponent counts must be nonnegative");
    if (!(eps > 0) || !(mu > eps)) throw Error(ErrorCode::ParamDomain, "need mu > eps > 0");
    if (alpha < 0 || beta < 0 || (alpha == 0 && beta == 0)) throw Error(ErrorCode::ParamDomain, "need alpha, beta >= 0, not both zero");

    Polynomial even_part = Polynomial::constant(alpha);
    Polynomial odd_part = beta * Polynomial::monomial(1, 1);
    for (int i = 1; i <= n1; ++i) {
        even_part = even_part * Polynomial::from_coeffs({1, 0, i * mu});
        odd_part = odd_part * Polynomial::from_coeffs({1, 0, i * eps});
    }
    for (int i = 1; i <= n2; ++i) {
        even_part = even_part * quadratic(1 + i * eps, 0);
        odd_part = odd_part * quadratic(1 + i * mu, 0);
    }
    for (int i = 1; i <= n3; ++i) {
        even_part = even_part * quadratic(i * eps, 0);
        odd_part = odd_part * quadratic(i * mu, 0);
    }

    QFamilyResult out;
    out.poly = even_part + odd_part;
    out.limit = Polynomial::from_coeffs({alpha, beta}) * power(quadratic(1, 0), static_cast<unsigned>(n2)) *
                Polynomial::monomial(1, static_cast<std::size_t>(2 * n3));
    out.stable = out.poly.all_positive() && is_stable_routh_hurwitz(out.poly).stable;
    return out;
}

CounterexampleRecord make_record(const Polynomial& f, const Polynomial& g) {
    CounterexampleRecord rec;
    rec.f = f;
    rec.g = g;
    rec.product = hadamard(f, g);
    const int n = g.degree();
    if (g.all_positive() && n >= 3) {
        rec.g_memberships["W"] = in_W(n, g).member;
        rec.g_memberships["Wbar"] = in_W_closure(n, g).member;
        rec.g_memberships["Y"] = in_Y(n, g).member;
        if (n == 5) rec.g_memberships["Y5"] = in_Y5_simplified(g).member;
        if (n == 4) rec.g_memberships["Y4"] = in_Y4_simplified(g).member;
    }
    if (rec.product.degree() >= 1) rec.minor_evidence = hurwitz_minors(rec.product);
    rec.root_evidence = find_roots(rec.product);
    rec.halfplane = classify_halfplane(rec.root_evidence);
    return rec;
}

bool CounterexampleRecord::verify() const {
    if (!(hadamard(f, g) == product)) return false;
    if (product.degree() < 1) return minor_evidence.size() == 0;
    return hurwitz_minors(product) == minor_evidence;
}

ProbeReport probe_conjecture(int n, long samples, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::InvalidDegree, "probe needs n >= 3");
    struct Outcome {
        int draws = 0;
        bool accepted = false;
        bool disagreement = false;
        std::optional<CounterexampleRecord> record;
    };
    const auto outcomes = parallel_map<Outcome>(samples, [&](long i) {
        Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(i));
        Outcome out;
        const auto g = sample_y_member(n, rng, 200, &out.draws);
        if (!g) return out;
        out.accepted = true;
        const int m = static_cast<int>(rng.uniform_int(3, n));
        const Polynomial f = sample_stable(m, rng);
        const Polynomial product = hadamard(f, *g);
        const bool exact_stable = is_stable_routh_hurwitz(product).stable;
        const RootVerdict by_roots = verdict_by_roots(product);
        if (by_roots != RootVerdict::Inconclusive && (by_roots == RootVerdict::Stable) != exact_stable) out.disagreement = true;
        if (!exact_stable) out.record = make_record(f, *g);
        return out;
    });

    ProbeReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    for (const auto& o : outcomes) {
        report.g_draws += o.draws;
        if (o.accepted) {
            ++report.g_accepted;
            ++report.pairs_tested;
        }
        if (o.disagreement) ++report.oracle_disagreements;
        if (o.record) report.records.push_back(*o.record);
    }
    return report;
}

bool ExampleReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.pass; });
}

namespace {

ExampleCheck exact_check(std::string name, const Rational& expected, const Rational& actual) {
    return {std::move(name), to_exact_string(expected), to_exact_string(actual), expected == actual};
}

ExampleCheck bool_check(std::string name, bool expected, bool actual) {
    return {std::move(name), expected ? "true" : "false", actual ? "true" : "false", expected == actual};
}

Polynomial literal(std::initializer_list<const char*> ascending) {
    std::vector<Rational> c;
    for (const char* s : ascending) c.push_back(parse_rational(s));
    return Polynomial::from_coeffs(std::move(c));
}

}  // namespace

ExampleReport reproduce_example_1() {
    ExampleReport report;
    report.title = "W5 member with unstable product";
    const Polynomial f = literal({"16", "8", "164", "80", "230", "100"});
    const Polynomial g = literal({"4.66", "6.4", "6.62", "8.96", "6.4", "6.17"});

    const MinorSequence fm = hurwitz_minors(f);
    report.checks.push_back(exact_check("Delta_2(f)", 2000, fm.delta(2)));
    report.checks.push_back(exact_check("Delta_4(f)", 6400, fm.delta(4)));
    report.checks.push_back(bool_check("f stable", true, is_stable_routh_hurwitz(f).stable));
    report.checks.push_back(bool_check("g in W5", true, in_W(5, g).member));

    CounterexampleRecord rec = make_record(f, g);
    const Polynomial expected_product = literal({"74.56", "51.2", "1085.68", "716.8", "1472", "617"});
    report.checks.push_back({"f*g", to_string(expected_product), to_string(rec.product), rec.product == expected_product});
    report.checks.push_back(exact_check("Delta_2(f*g)", parse_rational("385265.04"), rec.minor_evidence.delta(2)));
    report.checks.push_back(exact_check("Delta_4(f*g)", parse_rational("-36860871.08608"), rec.minor_evidence.delta(4)));

    const std::complex<double> target(0.000062127, 0.276826);
    bool upper = false;
    bool lower = false;
    std::complex<double> found;
    for (const auto& z : rec.root_evidence.roots) {
        if (std::abs(z - target) <= 1e-6) {
            upper = true;
            found = z;
        }
        if (std::abs(z - std::conj(target)) <= 1e-6) lower = true;
    }
    ExampleCheck roots{"right half-plane roots", "0.000062127 +- 0.276826i (1e-6)", "", upper && lower};
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.9f +- %.6fi", found.real(), std::abs(found.imag()));
        roots.actual = upper && lower ? buf : "not found";
    }
    report.checks.push_back(std::move(roots));
    report.checks.push_back(bool_check("roots with Re > 0", true, rec.halfplane.strictly_right == 2));
    report.checks.push_back(bool_check("g in Y5", false, in_Y5_simplified(g).member));
    report.checks.push_back(bool_check("record re-verifies", true, rec.verify()));
    report.record = std::move(rec);
    return report;
}

ExampleReport reproduce_example_2() {
    ExampleReport report;
    report.title = "Y5 member with a negative 3x3 principal minor";
    const Polynomial g = literal({"4.5", "10", "4.75", "5.5", "1", "1"});
    const HurwitzMatrix h = hurwitz_matrix(g);
    const std::size_t first[] = {1, 2, 3};
    const std::size_t middle[] = {2, 3, 4};
    report.checks.push_back(exact_check("third principal minor", parse_rational("-1.9375"), minor(h.entries, first, first)));
    report.checks.push_back(exact_check("middle minor", parse_rational("70.125"), minor(h.entries, middle, middle)));
    report.checks.push_back(bool_check("(g*Q3_1)/x stable", true,
                                       is_stable_routh_hurwitz(shift_divide(hadamard(g, basic_quasistable(3, 1)), 1)).stable));
    report.checks.push_back(bool_check("g*Q5 stable", true, is_stable_routh_hurwitz(hadamard(g, basic_quasistable(5, 0))).stable));
    report.checks.push_back(bool_check("g in Y5 (simplified)", true, in_Y5_simplified(g).member));
    report.checks.push_back(bool_check("g in Y5", true, in_Y(5, g).member));
    return report;
}

}  // namespace hurwitz
