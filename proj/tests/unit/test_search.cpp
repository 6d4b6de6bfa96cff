#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/search.hpp"

using namespace hurwitz;
using testing::error_of;
using testing::P;
using testing::Q;

namespace {

Rational max_coefficient_distance(const Polynomial& a, const Polynomial& b) {
    Rational worst = 0;
    const int top = std::max(a.degree(), b.degree());
    for (int i = 0; i <= top; ++i) {
        Rational d = a.coeff(i) - b.coeff(i);
        if (d < 0) d = -d;
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace

TEST_CASE("generator is deterministic per index") {
    Rng a = Rng::for_index(5, 17);
    Rng b = Rng::for_index(5, 17);
    Rng c = Rng::for_index(5, 18);
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());

    Rng r(3);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0);
        REQUIRE(u < 1);
        const long k = r.uniform_int(-2, 2);
        REQUIRE(k >= -2);
        REQUIRE(k <= 2);
        const Rational q = r.uniform_rational(Rational(1, 2), 2, 100);
        REQUIRE(q >= Rational(1, 2));
        REQUIRE(q <= 2);
        REQUIRE(Rational(q * 100).get_den() == 1);
    }
}

TEST_CASE("sample streams do not depend on worker count") {
    SampleConfig config;
    config.n = 5;
    config.count = 64;
    config.seed = 11;
    config.mode = SampleMode::QuasiStable;
    const auto first = sample_stream(config);
    const auto second = sample_stream(config);
    REQUIRE(first.size() == 64);
    for (long i = 0; i < 64; ++i) {
        REQUIRE(first[i].has_value());
        CHECK(*first[i] == *second[i]);
        Rng rng = Rng::for_index(11, static_cast<std::uint64_t>(i));
        CHECK(*draw(config, rng) == *first[i]);
    }
    const std::function<long(long)> square = [](long i) { return i * i; };
    const auto one = parallel_map<long>(100, square, 1);
    const auto four = parallel_map<long>(100, square, 4);
    CHECK(one == four);
    CHECK(four[9] == 81);
}

TEST_CASE("samplers produce their advertised classes") {
    for (long i = 0; i < 300; ++i) {
        Rng rng = Rng::for_index(21, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform_int(2, 7));
        const Polynomial s = sample_stable(n, rng);
        REQUIRE(s.degree() == n);
        REQUIRE(is_stable_routh_hurwitz(s).stable);

        const Polynomial q = sample_quasi_stable(n, rng);
        REQUIRE(q.degree() == n);
        REQUIRE(q.coeff(0) > 0);
        REQUIRE(quasi_stability_agt(q).quasi_stable());

        const Polynomial p = sample_positive(n, rng);
        for (const auto& c : p.coeffs()) REQUIRE(c > 0);
    }
    Rng rng(1);
    CHECK(error_of([&] { sample_with_class(HermiteBiehlerCase::PureImaginary, 3, rng); }) == ErrorCode::InvalidDegree);
    CHECK(error_of([&] { sample_with_class(HermiteBiehlerCase::OneNegRestImaginary, 4, rng); }) == ErrorCode::InvalidDegree);
    CHECK(error_of([&] { sample_with_class(HermiteBiehlerCase::QuasiStableGeneric, 3, rng); }) == ErrorCode::InvalidDegree);

    int tries = 0;
    const auto y = sample_y_member(5, rng, 1000, &tries);
    REQUIRE(y.has_value());
    CHECK(tries >= 1);
    CHECK(in_Y(5, *y).member);
}

TEST_CASE("perturbed quasi-stable family") {
    const Rational mu(1, 1000);
    const Rational eps = mu / 2;

    const QFamilyResult one = q_family(0, 1, 0, eps, mu, 1, 1);
    CHECK(one.poly.degree() == 3);
    CHECK(one.stable);
    CHECK(is_stable_routh_hurwitz(one.poly).stable);
    CHECK(one.limit == basic_quasistable(3));

    // every draw is checked rather than trusted
    for (int n2 = 1; n2 <= 4; ++n2) {
        const QFamilyResult r = q_family(0, n2, 0, eps, mu, 1, 1);
        CHECK(r.stable == is_stable_routh_hurwitz(r.poly).stable);
        CHECK(r.poly.degree() == 2 * n2 + 1);
    }

    const QFamilyResult even = q_family(0, 2, 0, Rational(1, 1000000), Rational(2, 1000000), 1, 0);
    CHECK(even.limit == basic_quasistable(4));
    CHECK(even.poly.degree() == 4);

    Rational previous = -1;
    for (const Rational& e : {Q("1e-6"), Q("1e-7"), Q("1e-8"), Q("1e-9")}) {
        const QFamilyResult r = q_family(1, 2, 1, e, 2 * e, 1, 1);
        const Rational d = max_coefficient_distance(r.poly, r.limit);
        if (previous >= 0) CHECK(d < previous);
        previous = d;
    }

    CHECK(error_of([] { q_family(0, 1, 0, 1, 1, 1, 1); }) == ErrorCode::ParamDomain);
    CHECK(error_of([] { q_family(0, 1, 0, 0, 1, 1, 1); }) == ErrorCode::ParamDomain);
    CHECK(error_of([] { q_family(0, 1, 0, 1, 2, 0, 0); }) == ErrorCode::ParamDomain);
    CHECK(error_of([] { q_family(-1, 1, 0, 1, 2, 1, 1); }) == ErrorCode::ParamDomain);
}

TEST_CASE("probes below degree six find nothing") {
    for (int n : {3, 4, 5}) {
        const ProbeReport r = probe_conjecture(n, 150, 7);
        CHECK(r.records.empty());
        CHECK(r.pairs_tested > 0);
        CHECK(r.oracle_disagreements == 0);
        CHECK(r.g_accepted <= r.g_draws);
    }
}

TEST_CASE("worked examples reproduce") {
    const ExampleReport one = reproduce_example_1();
    for (const auto& c : one.checks) {
        INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
        CHECK(c.pass);
    }
    REQUIRE(one.record.has_value());
    CHECK(one.record->verify());
    CHECK(one.record->halfplane.strictly_right == 2);
    CHECK_FALSE(one.record->g_memberships.at("Y5"));
    CHECK(one.record->g_memberships.at("W"));

    const ExampleReport two = reproduce_example_2();
    for (const auto& c : two.checks) {
        INFO(c.name << ": expected " << c.expected << ", got " << c.actual);
        CHECK(c.pass);
    }
    CHECK(two.pass());

    CounterexampleRecord tampered = *one.record;
    tampered.product = tampered.product + Polynomial::constant(1);
    CHECK_FALSE(tampered.verify());
}

TEST_CASE("records round-trip through json") {
    const CounterexampleRecord rec = make_record(testing::example_f(), testing::example_g_w5());
    const auto text = to_json(rec).dump();
    const CounterexampleRecord back = record_from_json(nlohmann::json::parse(text));
    CHECK(back.f == rec.f);
    CHECK(back.g == rec.g);
    CHECK(back.product == rec.product);
    CHECK(back.minor_evidence == rec.minor_evidence);
    CHECK(back.verify());
    CHECK(back.g_memberships == rec.g_memberships);

    const Polynomial p = P("1/3,-2,0,7/11");
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(rational_from_json(to_json(Q("-22/7"))) == Q("-22/7"));
    const MinorSequence m = hurwitz_minors(testing::example_f());
    CHECK(minors_from_json(to_json(m)) == m);
    CHECK(error_of([] { polynomial_from_json(nlohmann::json::parse(R"({"coefficients":["1","x"]})")); }) == ErrorCode::ParseError);
}
