#include "hurwitz/suites.hpp"

#include <array>
#include <functional>

#include "hurwitz/error.hpp"
#include "hurwitz/idealizer.hpp"
#include "hurwitz/interval.hpp"
#include "hurwitz/real_roots.hpp"
#include "hurwitz/roots_oracle.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/stability.hpp"

namespace hurwitz {

void SuiteReport::merge(const SuiteReport& other) {
    samples += other.samples;
    checks += other.checks;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [key, count] : other.coverage) coverage[key] += count;
}

namespace {

using Body = std::function<void(long, Rng&, SuiteReport&)>;

SuiteReport run_suite(const std::string& name, long samples, std::uint64_t seed, const Body& body) {
    auto parts = parallel_map<SuiteReport>(samples, [&](long i) {
        SuiteReport local;
        Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(i));
        try {
            body(i, rng, local);
        } catch (const Error& e) {
            local.violations.push_back({"no_exception", i, {}, std::string(to_string(e.code())) + ": " + e.what()});
        }
        return local;
    });
    SuiteReport report;
    report.name = name;
    report.seed = seed;
    for (const auto& p : parts) report.merge(p);
    report.samples = samples;
    return report;
}

void expect(SuiteReport& r, bool ok, const char* property, long i, std::vector<Polynomial> inputs, std::string detail = {}) {
    ++r.checks;
    if (!ok) r.violations.push_back({property, i, std::move(inputs), std::move(detail)});
}

Polynomial perturb(const Polynomial& f, Rng& rng) {
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, long(c.size()) - 1));
    c[j] *= rng.uniform_rational(Rational(1, 2), Rational(3, 2), 100);
    return Polynomial::from_coeffs(std::move(c));
}

Rational positive(Rng& rng, const Rational& hi = 4) { return rng.uniform_rational(Rational(1, 100), hi); }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial::from_coeffs(std::vector<Rational>(c)); }

constexpr std::array<HermiteBiehlerCase, 4> kCellOrder{HermiteBiehlerCase::PureImaginary, HermiteBiehlerCase::OneNegRestImaginary,
                                                       HermiteBiehlerCase::QuasiStableGeneric, HermiteBiehlerCase::StrictlyStable};

int degree_for(HermiteBiehlerCase kind, Rng& rng, int max_degree = 7) {
    switch (kind) {
        case HermiteBiehlerCase::PureImaginary: return 2 * static_cast<int>(rng.uniform_int(1, max_degree / 2));
        case HermiteBiehlerCase::OneNegRestImaginary: return 2 * static_cast<int>(rng.uniform_int(1, (max_degree - 1) / 2)) + 1;
        case HermiteBiehlerCase::QuasiStableGeneric: return static_cast<int>(rng.uniform_int(4, max_degree));
        default: return static_cast<int>(rng.uniform_int(1, max_degree));
    }
}

}  // namespace

SuiteReport verify_criteria(long samples_per_degree, std::uint64_t seed, int min_degree, int max_degree) {
    SuiteReport total;
    total.name = "criteria";
    total.seed = seed;
    for (int n = min_degree; n <= max_degree; ++n) {
        const SuiteReport part = run_suite("criteria", samples_per_degree, seed ^ (std::uint64_t(n) << 40), [n](long i, Rng& rng, SuiteReport& r) {
            Polynomial f;
            switch (i % 3) {
                case 0: f = sample_positive(n, rng); break;
                case 1: f = sample_stable(n, rng); break;
                default: f = perturb(sample_stable(n, rng), rng); break;
            }
            const bool rh = is_stable_routh_hurwitz(f).stable;
            const bool lc_even = is_stable_lienard_chipart(f, LienardChipartVariant::EvenMinors);
            const bool lc_odd = is_stable_lienard_chipart(f, LienardChipartVariant::OddMinors);
            expect(r, rh == lc_even && rh == lc_odd, "routh_hurwitz_matches_lienard_chipart", i, {f});
            expect(r, (quasi_stability_agt(f).kind == StabilityKind::Stable) == rh, "routh_hurwitz_matches_index_test", i, {f});
            if (i % 3 == 1) expect(r, rh, "stable_sampler_sound", i, {f});
            r.coverage[rh ? "stable" : "unstable"]++;

            const RootSet rs = find_roots(f);
            if (rs.reliable && axis_margin(rs) > 1e-8) {
                const HalfPlaneSummary hp = classify_halfplane(rs, 1e-8);
                const bool by_roots = hp.boundary == 0 && hp.strictly_right == 0;
                expect(r, by_roots == rh, "routh_hurwitz_matches_roots", i, {f});
                r.coverage["oracle_compared"]++;
            } else {
                r.coverage["oracle_skipped"]++;
            }
        });
        total.merge(part);
    }
    return total;
}

SuiteReport verify_hermite_biehler(long samples, std::uint64_t seed) {
    return run_suite("hb", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        const int branch = static_cast<int>(i % 5);
        Polynomial f;
        std::optional<HermiteBiehlerCase> requested;
        if (branch < 4) {
            requested = kCellOrder[static_cast<std::size_t>(branch)];
            f = sample_with_class(*requested, degree_for(*requested, rng, 8), rng);
        } else {
            f = sample_positive(static_cast<int>(rng.uniform_int(1, 8)), rng);
        }
        const HermiteBiehlerClass c = hermite_biehler_classify(f);
        r.coverage[std::string(to_string(c.kind))]++;
        if (requested) expect(r, c.kind == *requested, "sampler_class", i, {f}, std::string(to_string(c.kind)));

        const StabilityVerdict v = quasi_stability_agt(f);
        expect(r, (c.kind != HermiteBiehlerCase::NotQuasiStable) == v.quasi_stable(), "classification_matches_index_test", i, {f});
        expect(r, (c.kind == HermiteBiehlerCase::StrictlyStable) == (v.kind == StabilityKind::Stable), "stable_class_matches_index_test", i, {f});

        const EvenOddParts parts = even_odd_split(f);
        if (c.kind == HermiteBiehlerCase::OneNegRestImaginary) {
            expect(r, c.c.has_value() && parts.even == *c.c * parts.odd, "proportional_parts", i, {f});
        }
        if (c.kind == HermiteBiehlerCase::PureImaginary) expect(r, parts.odd.is_zero(), "pure_imaginary_odd_part", i, {f});
        if (c.kind == HermiteBiehlerCase::StrictlyStable && f.degree() >= 2) {
            expect(r, interlaces(parts.odd, parts.even).strict, "stable_parts_interlace_strictly", i, {f});
        }

        const RootVerdict rv = verdict_by_roots(f);
        if (rv == RootVerdict::Inconclusive) {
            r.coverage["oracle_inconclusive"]++;
            return;
        }
        const RootVerdict expected = c.kind == HermiteBiehlerCase::StrictlyStable ? RootVerdict::Stable
                                     : c.kind == HermiteBiehlerCase::NotQuasiStable ? RootVerdict::NotQuasiStable
                                                                                     : RootVerdict::QuasiStable;
        expect(r, rv == expected, "classification_matches_roots", i, {f}, std::string(to_string(rv)));
    });
}

SuiteReport verify_garloff_wagner(long samples, std::uint64_t seed) {
    SuiteReport report = run_suite("gw", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        const int cell = static_cast<int>(i % 16);
        const HermiteBiehlerCase fk = kCellOrder[static_cast<std::size_t>(cell / 4)];
        const HermiteBiehlerCase pk = kCellOrder[static_cast<std::size_t>(cell % 4)];
        const Polynomial f = sample_with_class(fk, degree_for(fk, rng), rng);
        const Polynomial p = sample_with_class(pk, degree_for(pk, rng), rng);

        const GarloffWagnerCell gw = garloff_wagner_case(f, p);
        expect(r, gw.row() * 4 + gw.col() == cell, "sampler_cell", i, {f, p});
        r.coverage["cell " + std::to_string(gw.row()) + "," + std::to_string(gw.col())]++;
        r.coverage[std::string(to_string(gw.kind))]++;

        const Polynomial product = hadamard(f, p);
        if (product.degree() == 0) {
            // a positive constant has no zeros at all
            expect(r, product.coeff(0) > 0, "constant_product_positive", i, {f, p});
            r.coverage["constant_product"]++;
            return;
        }
        const StabilityVerdict v = quasi_stability_agt(product);
        expect(r, v.quasi_stable(), "product_quasi_stable", i, {f, p});
        switch (gw.kind) {
            case ProductCase::StrictlyStable:
                expect(r, v.kind == StabilityKind::Stable, "stable_pair_gives_stable_product", i, {f, p});
                break;
            case ProductCase::OddPartVanishes:
                expect(r, even_odd_split(product).odd.is_zero(), "vanishing_odd_part_gives_even_product", i, {f, p});
                break;
            case ProductCase::ProportionalParts:
                expect(r, hermite_biehler_classify(product).kind == HermiteBiehlerCase::OneNegRestImaginary,
                       "proportional_pair_gives_proportional_product", i, {f, p});
                break;
            case ProductCase::GenericQuasiStable:
                break;
        }
    });
    if (samples >= 16) {
        for (int row = 0; row < 4; ++row) {
            for (int col = 0; col < 4; ++col) {
                const std::string key = "cell " + std::to_string(row) + "," + std::to_string(col);
                expect(report, report.coverage[key] > 0, "cell_coverage", -1, {}, key);
            }
        }
    }
    return report;
}

SuiteReport verify_quintic_conditions(long samples, std::uint64_t seed) {
    return run_suite("lemmas", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        Polynomial f;
        switch (i % 6) {
            case 0: f = sample_stable(5, rng); break;
            case 1: f = sample_positive(5, rng); break;
            case 2: f = sample_quasi_stable(5, rng); break;
            case 3: {
                // (x + c)(x^4 + p x^2 + q): quasi-stable iff p^2 >= 4q
                const Rational c = positive(rng);
                const Rational p = positive(rng);
                const Rational q = rng.chance(0.5) ? p * p / 4 * rng.uniform_rational(Rational(1, 10), 1, 100)
                                                   : p * p / 4 * rng.uniform_rational(parse_rational("1.01"), 3, 100);
                f = poly({c, 1}) * poly({q, 0, p, 0, 1});
                break;
            }
            case 4:
                f = poly({positive(rng), 1}) * poly({positive(rng), 1}) * poly({positive(rng), 1}) * poly({positive(rng), 0, 1});
                break;
            default: f = perturb(sample_stable(5, rng), rng); break;
        }
        for (bool strict : {false, true}) {
            const bool c1 = lemma1_condition(f, Condition::I, strict);
            const bool c2 = lemma1_condition(f, Condition::II, strict);
            const bool c3 = lemma1_condition(f, Condition::III, strict);
            const bool c4 = lemma1_condition(f, Condition::IV, strict);
            const std::string tag = strict ? "strict" : "weak";
            expect(r, c1 == c2 && c1 == c3 && c1 == c4, strict ? "f_conditions_agree_strict" : "f_conditions_agree_weak", i, {f},
                   std::to_string(c1) + std::to_string(c2) + std::to_string(c3) + std::to_string(c4));
            r.coverage["f " + tag + (c1 ? " true" : " false")]++;
        }

        Polynomial g = sample_positive(5, rng);
        std::vector<Rational> b(g.coeffs().begin(), g.coeffs().end());
        switch (i % 4) {
            case 1: b[4] = b[2] * b[3] / b[1]; break;  // X = 1
            case 2: b[5] = b[3] * b[4] / b[2]; break;  // X = Y
            case 3: b[3] = b[1] * b[2] / b[0]; break;  // X = Z
            default: break;
        }
        g = Polynomial::from_coeffs(std::move(b));
        for (bool strict : {false, true}) {
            const bool c1 = lemma2_condition(g, Condition::I, strict);
            const bool c2 = lemma2_condition(g, Condition::II, strict);
            const bool c3 = lemma2_condition(g, Condition::III, strict);
            const bool c4 = lemma2_condition(g, Condition::IV, strict);
            const std::string tag = strict ? "strict" : "weak";
            expect(r, c1 == c2 && c1 == c3 && c1 == c4, strict ? "g_conditions_agree_strict" : "g_conditions_agree_weak", i, {g},
                   std::to_string(c1) + std::to_string(c2) + std::to_string(c3) + std::to_string(c4));
            r.coverage["g " + tag + (c1 ? " true" : " false")]++;
        }
    });
}

SuiteReport verify_quartic_families(long samples, std::uint64_t seed) {
    return run_suite("quartic_families", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        std::vector<Rational> b;
        const Polynomial base = sample_positive(4, rng);
        b.assign(base.coeffs().begin(), base.coeffs().end());
        switch (i % 3) {
            case 1: b[3] = b[1] * b[2] / b[0]; break;
            case 2: b[4] = b[2] * b[3] / b[1]; break;
            default: break;
        }
        const Polynomial g = Polynomial::from_coeffs(std::move(b));
        const bool y = in_Y(4, g).member;
        const bool y4 = in_Y4_simplified(g).member;
        const bool w = in_W_closure(4, g).member;
        expect(r, y == y4 && y == w, "quartic_families_agree", i, {g}, std::to_string(y) + std::to_string(y4) + std::to_string(w));
        r.coverage[y ? "member" : "non_member"]++;
    });
}

SuiteReport verify_quintic_families(long samples, std::uint64_t seed) {
    return run_suite("quintic_families", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        const Polynomial g = sample_positive(5, rng);
        const bool y = in_Y(5, g).member;
        const bool y5 = in_Y5_simplified(g).member;
        expect(r, y == y5, "quintic_families_agree", i, {g}, std::to_string(y) + std::to_string(y5));
        r.coverage[y ? "member" : "non_member"]++;
    });
}

SuiteReport verify_quartic_sufficiency(long samples, std::uint64_t seed) {
    return run_suite("quartic_sufficiency", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        Polynomial g;
        for (int t = 0; t < 200; ++t) {
            g = sample_positive(4, rng);
            if (in_W_closure(4, g).member) break;
        }
        if (!in_W_closure(4, g).member) {
            r.coverage["g_rejected"]++;
            return;
        }
        const int m = static_cast<int>(rng.uniform_int(1, 4));
        const Polynomial f = sample_quasi_stable(m, rng);
        r.coverage[std::string(to_string(hermite_biehler_classify(f).kind))]++;
        expect(r, quasi_stability_agt(hadamard(f, g)).quasi_stable(), "product_quasi_stable", i, {f, g});
    });
}

SuiteReport verify_quintic_sufficiency(long samples, std::uint64_t seed) {
    return run_suite("quintic_sufficiency", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        int tries = 0;
        const auto g = sample_y_member(5, rng, 500, &tries);
        r.coverage["g_draws"] += tries;
        if (!g) {
            r.coverage["g_rejected"]++;
            return;
        }
        expect(r, in_Y5_simplified(*g).member, "simplified_membership_agrees", i, {*g});
        const Polynomial f = sample_stable(5, rng);
        const Polynomial product = hadamard(f, *g);
        expect(r, is_stable_routh_hurwitz(product).stable, "product_stable", i, {f, *g});
        const RootVerdict rv = verdict_by_roots(product);
        if (rv == RootVerdict::Inconclusive) {
            r.coverage["oracle_inconclusive"]++;
        } else {
            expect(r, rv == RootVerdict::Stable, "product_stable_by_roots", i, {f, *g}, std::string(to_string(rv)));
        }
    });
}

SuiteReport verify_special_case(long samples, std::uint64_t seed) {
    return run_suite("special_case", samples, seed, [](long i, Rng& rng, SuiteReport& r) {
        const int k = 2 + static_cast<int>(i % 3);
        const Polynomial x_plus_one = poly({1, 1});
        Polynomial big_g;
        bool hypothesis = false;
        if (i % 2 == 0) {
            Polynomial g = Polynomial::constant(rng.uniform_rational(Rational(1, 2), 2, 100));
            for (int j = 0; j < k; ++j) g = g * poly({positive(rng), 1});
            big_g = x_plus_one * substitute_square(g);
            hypothesis = special_case_hypothesis(big_g);
            expect(r, hypothesis, "negative_rooted_g_meets_hypothesis", i, {big_g});
            r.coverage["negative_rooted"]++;
        } else {
            for (int t = 0; t < 100 && !hypothesis; ++t) {
                big_g = x_plus_one * substitute_square(sample_positive(k, rng));
                hypothesis = special_case_hypothesis(big_g);
            }
            r.coverage[hypothesis ? "rejection_sampled" : "hypothesis_never_met"]++;
        }
        if (!hypothesis) return;
        const Polynomial big_f = sample_quasi_stable(2 * k + 1, rng);
        r.coverage["k=" + std::to_string(k)]++;
        expect(r, special_case_check(big_g, big_f), "product_quasi_stable", i, {big_g, big_f});
    });
}

SuiteReport verify_theorems(long samples, std::uint64_t seed) {
    SuiteReport total;
    total.name = "theorems";
    total.seed = seed;
    for (const auto& part : {verify_quartic_families(samples, seed), verify_quintic_families(samples, seed + 4),
                             verify_quartic_sufficiency(samples, seed + 1), verify_quintic_sufficiency(samples, seed + 2),
                             verify_special_case(samples, seed + 3)}) {
        SuiteReport prefixed;
        prefixed.checks = part.checks;
        for (auto v : part.violations) {
            v.property = part.name + "/" + v.property;
            prefixed.violations.push_back(std::move(v));
        }
        for (const auto& [key, count] : part.coverage) prefixed.coverage[part.name + "/" + key] = count;
        prefixed.samples = part.samples;
        total.merge(prefixed);
    }
    return total;
}

SuiteReport verify_ratio_monotonicity(int grid_points) {
    SuiteReport r;
    r.name = "lemma3";
    r.samples = grid_points;
    const auto enclose = [](double x) { return Interval{detail::down(x), detail::up(x)}; };
    const auto grid = [&](int j) {
        if (j == grid_points) return Interval::point(1);
        return enclose(double(j) / grid_points);
    };
    struct Ratio {
        const char* name;
        bool decreasing;
        Interval (*num)(const Interval&);
        Interval (*den)(const Interval&);
    };
    using Phi = Interval (*)(const Interval&);
    const Phi minus = phi_minus;
    const Phi plus = phi_plus;
    const Ratio ratios[] = {{"phi-(at)/phi-(t)", true, minus, minus},
                            {"phi+(at)/phi-(t)", true, plus, minus},
                            {"phi-(at)/phi+(t)", false, minus, plus},
                            {"phi+(at)/phi+(t)", false, plus, plus}};
    const std::pair<const char*, Interval> scales[] = {{"0.1", enclose(0.1)}, {"0.5", Interval::point(0.5)}, {"0.9", enclose(0.9)}};

    for (const auto& [a_name, a] : scales) {
        for (const Ratio& ratio : ratios) {
            Interval prev{};
            for (int j = 1; j <= grid_points; ++j) {
                const Interval t = grid(j);
                const Interval v = ratio.num(a * t) / ratio.den(t);
                if (j > 1) {
                    const bool ok = ratio.decreasing ? v.certainly_less(prev) : v.certainly_greater(prev);
                    ++r.checks;
                    if (!ok) {
                        r.violations.push_back({std::string(ratio.name) + (ratio.decreasing ? " decreasing" : " increasing"), j, {},
                                                std::string("a=") + a_name + " t=" + std::to_string(double(j) / grid_points)});
                    }
                }
                prev = v;
            }
            r.coverage[std::string(ratio.name) + " a=" + a_name]++;
        }
    }
    return r;
}

}  // namespace hurwitz
