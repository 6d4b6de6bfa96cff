#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "hurwitz/error.hpp"
#include "hurwitz/idealizer.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/roots_oracle.hpp"
#include "hurwitz/search.hpp"
#include "hurwitz/stability.hpp"
#include "hurwitz/suites.hpp"

namespace hurwitz::cli {

namespace {

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotDivisible:
        case ErrorCode::BothZero:
        case ErrorCode::NonConvergence:
            return false;
        default:
            return true;
    }
}

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        CommandResult r;
        r.exit_code = is_input_error(e.code()) ? kUsageError : kInternalError;
        r.payload = {{"error", to_string(e.code())}, {"message", e.what()}};
        r.human_text = "error (" + std::string(to_string(e.code())) + "): " + e.what() + "\n";
        return r;
    } catch (const std::exception& e) {
        CommandResult r;
        r.exit_code = kInternalError;
        r.payload = {{"error", "internal"}, {"message", e.what()}};
        r.human_text = std::string("internal error: ") + e.what() + "\n";
        return r;
    }
}

// A zero leading coefficient means the stated degree is wrong: reject rather than strip.
Polynomial read_poly(const std::string& text, bool descending) {
    std::vector<std::string> warnings;
    Polynomial p = parse_polynomial(text, descending, &warnings);
    if (!warnings.empty()) throw Error(ErrorCode::ParseError, "leading coefficient is zero in '" + text + "'");
    return p;
}

std::string exact(const Rational& q) {
    const std::string e = to_exact_string(q);
    if (e.find('/') == std::string::npos) return e;
    return e + " (~" + to_display_string(q) + ", display only)";
}

std::string minors_text(const MinorSequence& m) {
    std::ostringstream out;
    for (std::size_t k = 1; k <= m.size(); ++k) out << "  Delta_" << k << " = " << exact(m.delta(k)) << "\n";
    return out.str();
}

struct Analysis {
    nlohmann::json payload;
    std::string text;
    bool stable = false;
    bool quasi_stable = false;
};

Analysis analyse(const Polynomial& f, double eps) {
    Analysis a;
    std::ostringstream text;
    const RouthHurwitzResult rh = is_stable_routh_hurwitz(f);
    a.stable = rh.stable;
    a.payload["polynomial"] = to_json(f);
    a.payload["stable"] = rh.stable;
    a.payload["minors"] = to_json(rh.minors);
    text << "polynomial: " << to_string(f) << "\n";
    text << "minors:\n" << minors_text(rh.minors);

    if (has_quasi_stable_shape(f)) {
        const StabilityVerdict v = quasi_stability_agt(f);
        a.quasi_stable = v.quasi_stable();
        a.payload["verdict"] = to_json(v);
        text << "verdict: " << to_string(v.kind) << " (stability index " << v.index << ")\n";
        if (v.gcd) text << "gcd(f_e, f_o): " << to_string(*v.gcd, 'y') << "\n";
        if (v.nonstandard_pattern) text << "note: a zero minor is followed by a nonzero one\n";
        const HermiteBiehlerClass hb = hermite_biehler_classify(f);
        a.payload["hermite_biehler"] = to_json(hb);
        text << "even/odd class: " << to_string(hb.kind) << "\n";
    } else {
        a.payload["verdict"] = {{"kind", to_string(StabilityKind::NotQuasiStable)}, {"reason", "coefficient signs"}};
        text << "verdict: " << to_string(StabilityKind::NotQuasiStable) << " (needs a_0 > 0, a_n > 0, a_i >= 0)\n";
    }

    const RootSet rs = find_roots(f);
    const HalfPlaneSummary hp = classify_halfplane(rs, eps);
    const RootVerdict rv = verdict_by_roots(f, eps);
    a.payload["roots"] = to_json(rs);
    a.payload["halfplane"] = to_json(hp);
    a.payload["root_verdict"] = to_string(rv);
    text << "root cross-check: " << to_string(rv) << " (left " << hp.strictly_left << ", axis " << hp.boundary << ", right "
         << hp.strictly_right << ", eps " << eps << ")\n";
    return a;
}

std::pair<int, int> parse_degree_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "degree must be N or A..B, got '" + text + "'");
    }
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
    const char* env = std::getenv("HURWITZ_SEED");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    return (end != nullptr && *end == '\0') ? v : fallback;
}

CommandResult cmd_check(const CheckOptions& o) {
    return guarded([&] {
        const Polynomial f = read_poly(o.poly, o.descending);
        if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "a constant has no Hurwitz matrix");
        Analysis a = analyse(f, o.eps);
        CommandResult r;
        r.payload = std::move(a.payload);
        r.payload["mode"] = o.quasi ? "quasi" : "strict";
        r.human_text = std::move(a.text);
        const bool ok = o.quasi ? a.quasi_stable : a.stable;
        r.exit_code = ok ? kAffirmative : kNegative;
        return r;
    });
}

CommandResult cmd_hadamard(const HadamardOptions& o) {
    return guarded([&] {
        const Polynomial f = read_poly(o.first, o.descending);
        const Polynomial g = read_poly(o.second, o.descending);
        const HadamardProduct h = hadamard_product(f, g);
        CommandResult r;
        std::ostringstream text;
        text << "f*g = " << to_string(h.poly) << "\n";
        text << "coefficients: ";
        for (std::size_t i = 0; i < h.poly.coeffs().size(); ++i) text << (i ? "," : "") << to_exact_string(h.poly.coeffs()[i]);
        text << "\n";
        if (f.degree() != g.degree()) text << "note: truncated to degree min(" << f.degree() << ", " << g.degree() << ") = " << h.nominal_degree << "\n";
        if (h.degree_dropped()) text << "note: leading product vanished, degree " << h.poly.degree() << "\n";
        r.payload["product"] = to_json(h.poly);
        r.payload["nominal_degree"] = h.nominal_degree;
        if (h.poly.degree() < 1) {
            text << "product is constant; no stability verdict\n";
            r.exit_code = kNegative;
        } else {
            Analysis a = analyse(h.poly, kDefaultAxisEpsilon);
            text << a.text;
            r.payload["analysis"] = std::move(a.payload);
            r.exit_code = (o.quasi ? a.quasi_stable : a.stable) ? kAffirmative : kNegative;
        }
        r.human_text = text.str();
        return r;
    });
}

CommandResult cmd_idealizer(const IdealizerOptions& o) {
    return guarded([&] {
        const Polynomial g = read_poly(o.poly, o.descending);
        const Family family = parse_family(o.family);
        const int n = o.n.value_or(g.degree());
        MembershipReport report;
        switch (family) {
            case Family::W: report = in_W(n, g); break;
            case Family::Wbar: report = in_W_closure(n, g); break;
            case Family::Y: report = in_Y(n, g); break;
            case Family::Y4Simplified:
                if (n != 4) throw Error(ErrorCode::DegreeMismatch, "Y4 needs n = 4");
                report = in_Y4_simplified(g);
                break;
            case Family::Y5Simplified:
                if (n != 5) throw Error(ErrorCode::DegreeMismatch, "Y5 needs n = 5");
                report = in_Y5_simplified(g);
                break;
            case Family::Ystar: report = in_Y_star(n, g); break;
        }
        std::ostringstream text;
        text << "g = " << to_string(g) << "\n";
        text << "family " << to_string(family) << ", n = " << n << ": " << (report.member ? "member" : "not a member") << "\n";
        if (!report.branch.empty()) text << "branch: " << report.branch << "\n";
        for (const auto& c : report.inequality_trace) {
            text << "  " << (c.holds ? "ok   " : "FAIL ") << c.description;
            if (c.lhs != 0 || c.rhs != 0) text << "  [" << exact(c.lhs) << " vs " << exact(c.rhs) << "]";
            text << "\n";
        }
        for (const auto& c : report.product_checks) {
            text << "  " << (c.verdict.quasi_stable() ? "ok   " : "FAIL ") << "(g*Q^" << c.k << "_" << c.m << ")/x^" << c.m << ": "
                 << to_string(c.verdict.kind) << "\n";
        }
        if (report.witness) {
            const ProductCheck& w = *report.witness;
            text << "witness: k = " << w.k << ", m = " << w.m << ", product " << to_string(w.product) << "\n";
            for (std::size_t k = 1; k <= w.verdict.minors.size(); ++k) {
                if (w.verdict.minors.delta(k) < 0) {
                    text << "  offending minor Delta_" << k << " = " << exact(w.verdict.minors.delta(k)) << "\n";
                    break;
                }
            }
        }
        CommandResult r;
        r.payload = to_json(report);
        r.human_text = text.str();
        r.exit_code = report.member ? kAffirmative : kNegative;
        return r;
    });
}

CommandResult cmd_verify(const VerifyOptions& o) {
    return guarded([&] {
        if (o.samples < 0) throw Error(ErrorCode::ParamDomain, "samples must be nonnegative");
        SuiteReport report;
        if (o.suite == "lemmas") {
            report = verify_quintic_conditions(o.samples, o.seed);
        } else if (o.suite == "theorems") {
            report = verify_theorems(o.samples, o.seed);
        } else if (o.suite == "gw") {
            report = verify_garloff_wagner(o.samples, o.seed);
        } else if (o.suite == "hb") {
            report = verify_hermite_biehler(o.samples, o.seed);
        } else if (o.suite == "lemma3") {
            report = verify_ratio_monotonicity(static_cast<int>(o.samples > 1 ? o.samples : 1000));
        } else if (o.suite == "criteria") {
            report = verify_criteria(o.samples, o.seed);
        } else {
            throw Error(ErrorCode::ParseError, "unknown suite '" + o.suite + "'");
        }
        std::ostringstream text;
        text << "suite " << o.suite << ": " << report.samples << " samples, " << report.checks << " checks, " << report.violations.size()
             << " violations (seed " << o.seed << ")\n";
        for (const auto& [key, count] : report.coverage) text << "  " << key << ": " << count << "\n";
        std::size_t shown = 0;
        for (const auto& v : report.violations) {
            if (++shown > 20) break;
            text << "VIOLATION " << v.property << " at sample " << v.sample;
            for (const auto& p : v.inputs) text << " [" << to_string(p) << "]";
            if (!v.detail.empty()) text << " " << v.detail;
            text << "\n";
        }
        CommandResult r;
        r.payload = to_json(report);
        r.human_text = text.str();
        r.exit_code = report.passed() ? kAffirmative : kInternalError;
        return r;
    });
}

CommandResult cmd_search(const SearchOptions& o) {
    return guarded([&] {
        const auto [lo, hi] = parse_degree_range(o.degrees);
        if (lo < 3 || hi < lo) throw Error(ErrorCode::InvalidDegree, "search needs 3 <= n (and A <= B for a range)");
        if (o.samples < 0) throw Error(ErrorCode::ParamDomain, "samples must be nonnegative");

        std::ofstream findings;
        if (!o.out.empty()) {
            findings.open(o.out);
            if (!findings) throw Error(ErrorCode::ParseError, "cannot open '" + o.out + "' for writing");
        }
        nlohmann::json manifest = {{"degrees", o.degrees}, {"samples_per_degree", o.samples}, {"seed", o.seed}, {"runs", nlohmann::json::array()}};
        std::ostringstream text;
        bool theorem_violation = false;
        bool unverified = false;
        for (int n = lo; n <= hi; ++n) {
            const ProbeReport report = probe_conjecture(n, o.samples, o.seed);
            nlohmann::json run = manifest_json(report);
            long verified = 0;
            for (const auto& rec : report.records) {
                if (rec.verify()) ++verified;
                if (findings) {
                    nlohmann::json line = to_json(rec);
                    line["n"] = n;
                    findings << line.dump() << "\n";
                }
            }
            run["records_verified"] = verified;
            manifest["runs"].push_back(run);
            if (verified != static_cast<long>(report.records.size())) unverified = true;
            if (n <= 5 && !report.records.empty()) theorem_violation = true;
            text << "n = " << n << ": " << report.pairs_tested << " pairs, " << report.records.size() << " records (" << verified
                 << " self-verified), Y acceptance " << report.acceptance_rate() << ", oracle disagreements " << report.oracle_disagreements
                 << "\n";
        }
        if (!o.out.empty()) {
            std::ofstream(o.out + ".manifest.json") << manifest.dump(2) << "\n";
            text << "findings: " << o.out << ", manifest: " << o.out << ".manifest.json\n";
        }
        CommandResult r;
        r.payload = manifest;
        r.human_text = text.str();
        r.exit_code = (theorem_violation || unverified) ? kInternalError : kAffirmative;
        if (theorem_violation) r.human_text += "counterexample found for n <= 5: this contradicts a proved result\n";
        return r;
    });
}

CommandResult cmd_examples() {
    return guarded([&] {
        CommandResult r;
        std::ostringstream text;
        bool all = true;
        r.payload = nlohmann::json::array();
        for (const ExampleReport& ex : {reproduce_example_1(), reproduce_example_2()}) {
            text << ex.title << "\n";
            for (const auto& c : ex.checks) {
                text << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << "\n      expected " << c.expected << "\n      actual   " << c.actual << "\n";
            }
            all = all && ex.pass();
            r.payload.push_back(to_json(ex));
        }
        r.human_text = text.str();
        r.exit_code = all ? kAffirmative : kInternalError;
        return r;
    });
}

}  // namespace hurwitz::cli
