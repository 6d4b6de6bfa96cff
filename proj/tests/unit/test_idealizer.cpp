#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "hurwitz/idealizer.hpp"
#include "hurwitz/search.hpp"

using namespace hurwitz;
using testing::error_of;
using testing::P;
using testing::Q;

namespace {

// Delta_4 of H(g * Q^5) written out from the coefficients.
Rational quintic_product_delta4(const Polynomial& g) {
    const auto b = [&](int i) { return g.coeff(i); };
    const Rational cross = b(1) * b(4) - b(0) * b(5);
    return 4 * (b(3) * b(4) - b(2) * b(5)) * (b(1) * b(2) - b(0) * b(3)) - cross * cross;
}

}  // namespace

TEST_CASE("log-concavity families") {
    CHECK(in_W(5, testing::example_g_w5()).member);
    CHECK_FALSE(in_W(4, P("1,1,1,1,1")).member);
    CHECK(in_W_closure(4, P("1,1,1,1,1")).member);
    CHECK_FALSE(in_W(5, identity_poly(5)).member);
    for (int n = 3; n <= 8; ++n) CHECK(in_W_closure(n, identity_poly(n)).member);

    const MembershipReport y5 = in_W_closure(5, testing::example_g_y5());
    CHECK(y5.member);
    REQUIRE(y5.inequality_trace.size() == 3);
    CHECK(y5.inequality_trace[0].lhs == Q("47.5"));
    CHECK(y5.inequality_trace[0].rhs == Q("24.75"));
    CHECK(y5.inequality_trace[1].lhs == Q("26.125"));
    CHECK(y5.inequality_trace[1].rhs == 10);
    CHECK(y5.inequality_trace[2].lhs == Q("5.5"));
    CHECK(y5.inequality_trace[2].rhs == Q("4.75"));

    CHECK(error_of([] { in_W(2, P("1,1,1")); }) == ErrorCode::InvalidDegree);
    CHECK(error_of([] { in_W(4, P("1,1,1,1")); }) == ErrorCode::DegreeMismatch);
    CHECK(error_of([] { in_W(3, P("1,0,1,1")); }) == ErrorCode::NotPositiveCoefficients);
}

TEST_CASE("Y membership and witnesses") {
    const MembershipReport bad = in_Y(5, testing::example_g_w5());
    CHECK_FALSE(bad.member);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->k == 5);
    CHECK(bad.witness->m == 0);
    const Rational d4 = quintic_product_delta4(testing::example_g_w5());
    CHECK(d4 == Rational(-2712085537, 25000000));
    CHECK(bad.witness->verdict.minors.delta(4) == d4);

    CHECK(in_Y(5, testing::example_g_y5()).member);
    for (int n = 1; n <= 7; ++n) CHECK(in_Y(n, identity_poly(n)).member);

    const MembershipReport full = in_Y(5, testing::example_g_w5(), false);
    CHECK(full.product_checks.size() == 10);

    CHECK(in_Y4_simplified(P("1,1,1,1,1")).member);
    CHECK_FALSE(in_Y4_simplified(P("1,1,1,2,1")).member);
    CHECK(in_Y5_simplified(testing::example_g_y5()).member);
    CHECK_FALSE(in_Y5_simplified(testing::example_g_w5()).member);
    CHECK(in_Y5_simplified(identity_poly(5)).member);

    const Polynomial g = testing::example_g_y5();
    const MinorSequence m = hurwitz_minors(hadamard(g, basic_quasistable(5)));
    CHECK(m.delta(2) == Q("1.5"));
    CHECK(m.delta(4) == 38);
    CHECK(quintic_product_delta4(g) == 38);
}

TEST_CASE("stable quartics are in the quartic family") {
    for (long i = 0; i < 1000; ++i) {
        Rng rng = Rng::for_index(61, static_cast<std::uint64_t>(i));
        const Polynomial g = sample_stable(4, rng);
        REQUIRE(in_Y4_simplified(g).member);
        REQUIRE(in_W_closure(4, g).member);
    }
}

TEST_CASE("membership reports carry a reason") {
    for (long i = 0; i < 500; ++i) {
        Rng rng = Rng::for_index(62, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform_int(3, 6));
        const Polynomial g = sample_positive(n, rng);
        for (const MembershipReport& r : {in_W(n, g), in_W_closure(n, g), in_Y(n, g)}) {
            if (r.member) continue;
            const bool failing_trace = std::any_of(r.inequality_trace.begin(), r.inequality_trace.end(), [](auto& c) { return !c.holds; });
            REQUIRE((r.witness.has_value() || failing_trace));
        }
    }
}

TEST_CASE("ratio triples") {
    const RatioTriple id = ratios_f(identity_poly(5));
    CHECK(id.first == 1);
    CHECK(id.second == 1);
    CHECK(id.third == 1);

    const RatioTriple binomial = ratios_f(P("1,5,10,10,5,1"));
    CHECK(binomial.first == Rational(1, 4));
    CHECK(binomial.second == Rational(1, 20));
    CHECK(binomial.third == Rational(1, 20));

    const RatioTriple g = ratios_g(testing::example_g_y5());
    CHECK(g.first == 10 / Q("26.125"));
    CHECK(g.second == 10 / Q("30.25"));
    CHECK(g.third == Q("4.5") / Q("22.5625"));
}

TEST_CASE("interval endpoint functions") {
    const Rational quarter(1, 4);
    CHECK(t1(quarter, quarter).compare_to(quarter) == 0);
    CHECK(s1(quarter, quarter).compare_to(quarter) == 0);
    CHECK(t4(1, 1).compare_to(1) == 0);
    CHECK(s1(0, 0).compare_to(1) == 0);
    CHECK(t1(0, 0).compare_to(0) == 0);
    CHECK(error_of([] { t1(1, 0); }) == ErrorCode::DomainError);
}

TEST_CASE("quintic conditions on the worked examples") {
    CHECK(lemma2_condition(testing::example_g_y5(), Condition::II));
    CHECK_FALSE(lemma2_condition(testing::example_g_w5(), Condition::II));
    CHECK(lemma1_condition(testing::example_f(), Condition::II, true));
    for (auto c : {Condition::I, Condition::II, Condition::III, Condition::IV}) {
        CHECK(lemma1_condition(testing::example_f(), c, true));
        CHECK(lemma1_condition(testing::example_f(), c, false));
        CHECK(lemma2_condition(testing::example_g_y5(), c, false));
        CHECK_FALSE(lemma2_condition(testing::example_g_w5(), c, false));
        CHECK_FALSE(lemma1_condition(identity_poly(5), c, false));
    }
    // (x+1)(x^2+1)^2 sits on the boundary: quasi-stable but not stable
    const Polynomial q5 = basic_quasistable(5);
    for (auto c : {Condition::I, Condition::II, Condition::III, Condition::IV}) {
        CHECK(lemma1_condition(q5, c, false));
        CHECK_FALSE(lemma1_condition(q5, c, true));
    }
    CHECK(error_of([] { lemma1_condition(P("1,1,1,1"), Condition::I); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("phi functions") {
    CHECK(phi_minus(0.0) == 0);
    CHECK(phi_plus(0.0) == 2);
    CHECK(phi_minus(1.0) == 1);
    CHECK(phi_plus(1.0) == 1);
    CHECK(error_of([] { phi_minus(1.5); }) == ErrorCode::DomainError);
    CHECK(error_of([] { phi_plus(-0.1); }) == ErrorCode::DomainError);
    const Interval v = phi_minus(Interval::point(0.5));
    CHECK(v.lo <= 1 - std::sqrt(0.5));
    CHECK(v.hi >= 1 - std::sqrt(0.5));

    // a = 1/2: phi-(t/2) / phi-(t) decreasing on the grid
    double prev = 1e300;
    for (int j = 1; j <= 1000; ++j) {
        const double t = j / 1000.0;
        const double r = phi_minus(t / 2) / phi_minus(t);
        REQUIRE(r < prev);
        prev = r;
    }
}

TEST_CASE("quasi-stable variant and multiplier sequences") {
    CHECK(is_finite_multiplier_on_hyp(P("1,2,1"), 2));
    CHECK(is_finite_multiplier_on_hyp(P("1,1,1"), 2));
    CHECK_FALSE(is_finite_multiplier_on_hyp(P("1,0.1,1"), 2));
    CHECK(error_of([] { is_finite_multiplier_on_hyp(P("1,1,1"), 3); }) == ErrorCode::DegreeMismatch);

    MembershipReport r = in_Y_star(4, P("1,0,2,0,1"));
    CHECK(r.member);
    CHECK(r.branch == "even_multiplier");
    CHECK(in_Y_star(4, P("1,0,1,0,1")).member);
    CHECK_FALSE(in_Y_star(4, P("1,0,0.1,0,1")).member);
    CHECK_FALSE(in_Y_star(5, P("1,0,2,0,1,1")).member);
    CHECK(error_of([] { in_Y_star(4, P("1,-1,2,0,1")); }) == ErrorCode::ShapeViolation);

    for (long i = 0; i < 200; ++i) {
        Rng rng = Rng::for_index(63, static_cast<std::uint64_t>(i));
        const Polynomial g = sample_positive(5, rng);
        REQUIRE(in_Y_star(5, g).member == in_Y(5, g).member);
    }
}

TEST_CASE("special case hypothesis") {
    const Polynomial q5 = basic_quasistable(5);
    CHECK(special_case_hypothesis(q5));
    CHECK(special_case_check(q5, q5));
    CHECK(special_case_hypothesis(P("1,1,1,1")));
    CHECK(special_case_hypothesis(P("3,3,3,3")));
    CHECK(error_of([] { special_case_hypothesis(P("1,2,1,1")); }) == ErrorCode::StructureViolation);
    CHECK(error_of([] { special_case_hypothesis(P("1,0,1")); }) == ErrorCode::StructureViolation);
    CHECK(error_of([&] { special_case_check(q5, P("1,1,1,1")); }) == ErrorCode::DegreeMismatch);
    CHECK(error_of([&] { special_case_check(q5, identity_poly(5)); }) == ErrorCode::NotQuasiStableInput);
}
