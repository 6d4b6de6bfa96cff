#include "hurwitz/json_io.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

Json to_json(const Rational& q) { return to_exact_string(q); }

Json to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_exact_string(c));
    return {{"coefficients", coeffs}, {"degree", p.is_zero() ? -1 : p.degree()}, {"text", to_string(p)}};
}

Json to_json(const MinorSequence& m) {
    Json out = Json::array();
    for (const auto& d : m.deltas) out.push_back(to_exact_string(d));
    return out;
}

Json to_json(const StabilityVerdict& v) {
    Json out{{"kind", to_string(v.kind)}, {"index", v.index}, {"minors", to_json(v.minors)}, {"nonstandard_pattern", v.nonstandard_pattern}};
    out["gcd"] = v.gcd ? to_json(*v.gcd) : Json(nullptr);
    return out;
}

Json to_json(const HermiteBiehlerClass& c) {
    Json out{{"kind", to_string(c.kind)}};
    if (c.c) out["c"] = to_exact_string(*c.c);
    return out;
}

Json to_json(const RootSet& rs) {
    Json roots = Json::array();
    for (const auto& z : rs.roots) roots.push_back({z.real(), z.imag()});
    return {{"roots", roots}, {"residuals", rs.residuals}, {"error_bounds", rs.error_bounds}, {"tolerance", rs.tolerance}, {"reliable", rs.reliable}};
}

Json to_json(const HalfPlaneSummary& hp) {
    return {{"strictly_left", hp.strictly_left}, {"boundary", hp.boundary}, {"strictly_right", hp.strictly_right}, {"epsilon", hp.epsilon}};
}

namespace {

Json product_check_json(const ProductCheck& c) {
    return {{"k", c.k}, {"m", c.m}, {"product", to_json(c.product)}, {"verdict", to_json(c.verdict)}};
}

}  // namespace

Json to_json(const MembershipReport& r) {
    Json out{{"member", r.member}, {"family", to_string(r.family)}, {"n", r.n}};
    if (!r.branch.empty()) out["branch"] = r.branch;
    out["witness"] = r.witness ? product_check_json(*r.witness) : Json(nullptr);
    Json trace = Json::array();
    for (const auto& c : r.inequality_trace) {
        trace.push_back({{"description", c.description}, {"lhs", to_exact_string(c.lhs)}, {"rhs", to_exact_string(c.rhs)}, {"holds", c.holds}});
    }
    out["inequalities"] = trace;
    Json checks = Json::array();
    for (const auto& c : r.product_checks) checks.push_back({{"k", c.k}, {"m", c.m}, {"verdict", to_string(c.verdict.kind)}});
    out["product_checks"] = checks;
    return out;
}

Json to_json(const CounterexampleRecord& r) {
    return {{"f", to_json(r.f)},
            {"g", to_json(r.g)},
            {"product", to_json(r.product)},
            {"g_memberships", r.g_memberships},
            {"minor_evidence", to_json(r.minor_evidence)},
            {"root_evidence", to_json(r.root_evidence)},
            {"halfplane", to_json(r.halfplane)}};
}

Json to_json(const SuiteReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json inputs = Json::array();
        for (const auto& p : v.inputs) inputs.push_back(to_json(p));
        violations.push_back({{"property", v.property}, {"sample", v.sample}, {"inputs", inputs}, {"detail", v.detail}});
    }
    return {{"suite", r.name},     {"samples", r.samples},         {"seed", r.seed},
            {"checks", r.checks}, {"violations", violations},      {"coverage", r.coverage},
            {"passed", r.passed()}};
}

Json to_json(const ExampleReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    Json out{{"title", r.title}, {"checks", checks}, {"pass", r.pass()}};
    if (r.record) out["record"] = to_json(*r.record);
    return out;
}

Json manifest_json(const ProbeReport& r) {
    return {{"n", r.n},
            {"samples", r.samples},
            {"seed", r.seed},
            {"g_draws", r.g_draws},
            {"g_accepted", r.g_accepted},
            {"acceptance_rate", r.acceptance_rate()},
            {"pairs_tested", r.pairs_tested},
            {"oracle_disagreements", r.oracle_disagreements},
            {"records", r.records.size()}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error(ErrorCode::ParseError, "exact numbers are stored as strings");
    return parse_rational(j.get<std::string>());
}

Polynomial polynomial_from_json(const Json& j) {
    const Json& coeffs = j.is_object() ? j.at("coefficients") : j;
    std::vector<Rational> c;
    for (const auto& x : coeffs) c.push_back(rational_from_json(x));
    return make_polynomial(c);
}

MinorSequence minors_from_json(const Json& j) {
    MinorSequence m;
    for (const auto& x : j) m.deltas.push_back(rational_from_json(x));
    return m;
}

CounterexampleRecord record_from_json(const Json& j) {
    CounterexampleRecord r;
    r.f = polynomial_from_json(j.at("f"));
    r.g = polynomial_from_json(j.at("g"));
    r.product = polynomial_from_json(j.at("product"));
    r.minor_evidence = minors_from_json(j.at("minor_evidence"));
    if (j.contains("g_memberships")) r.g_memberships = j.at("g_memberships").get<std::map<std::string, bool>>();
    return r;
}

}  // namespace hurwitz
