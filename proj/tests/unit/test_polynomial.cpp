#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/search.hpp"
#include "oracles.hpp"

using namespace hurwitz;
using testing::error_of;
using testing::P;
using testing::Q;

TEST_CASE("decimal literals are exact") {
    CHECK(Q("6.62") == Rational(331, 50));
    CHECK(Q("-1.5e-3") == Rational(-3, 2000));
    CHECK(Q("662/100") == Rational(331, 50));
    CHECK(Q("1e3") == 1000);
    CHECK(error_of([] { Q("1.2.3"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { Q(""); }) == ErrorCode::ParseError);
    CHECK(error_of([] { Q("1/0"); }) == ErrorCode::ParseError);
}

TEST_CASE("exact rendering") {
    CHECK(to_exact_string(Q("-36860871.08608")) == "-36860871.08608");
    CHECK(to_exact_string(Rational(1, 3)) == "1/3");
    CHECK(to_exact_string(Rational(5)) == "5");
    CHECK(to_exact_string(Q("0.000062")) == "0.000062");
}

TEST_CASE("construction and normalisation") {
    const Polynomial p = make_polynomial({1, 1, 1, 1});
    CHECK(p.degree() == 3);
    CHECK(to_string(p) == "x^3 + x^2 + x + 1");
    CHECK(testing::example_f().leading() == 100);
    CHECK(error_of([] { make_polynomial({0, 0}); }) == ErrorCode::AllZero);
    CHECK(error_of([] { make_polynomial(std::span<const Rational>{}); }) == ErrorCode::EmptyInput);

    std::vector<std::string> warnings;
    const std::vector<Rational> padded{1, 2, 0};
    CHECK(make_polynomial(padded, &warnings).degree() == 1);
    CHECK(warnings.size() == 1);
    CHECK(parse_polynomial("100,230,80,164,8,16", true) == testing::example_f());
}

TEST_CASE("even/odd split") {
    auto parts = even_odd_split(P("1,1,1,1"));
    CHECK(parts.even == P("1,1"));
    CHECK(parts.odd == P("1,1"));

    parts = even_odd_split(P("1,0,2,0,1"));
    CHECK(parts.even == P("1,2,1"));
    CHECK(parts.odd.is_zero());
    CHECK(recompose(parts) == P("1,0,2,0,1"));

    parts = even_odd_split(testing::example_f());
    CHECK(parts.even == P("16,164,230"));
    CHECK(parts.odd == P("8,80,100"));
    CHECK(recompose({P("1,1"), P("1,1")}) == P("1,1,1,1"));
}

TEST_CASE("split and recompose round trip") {
    for (long i = 0; i < 10000; ++i) {
        Rng rng = Rng::for_index(11, static_cast<std::uint64_t>(i));
        std::vector<Rational> c;
        const int n = static_cast<int>(rng.uniform_int(0, 9));
        for (int k = 0; k <= n; ++k) c.push_back(rng.uniform_rational(-5, 5, 7));
        if (c.back() == 0) c.back() = 1;
        const Polynomial f = Polynomial::from_coeffs(c);
        REQUIRE(recompose(even_odd_split(f)) == f);
    }
}

TEST_CASE("hadamard product") {
    const Polynomial f = testing::example_f();
    const Polynomial g = testing::example_g_w5();
    CHECK(hadamard(f, g) == P("74.56,51.2,1085.68,716.8,1472,617"));
    CHECK(hadamard(f, identity_poly(5)) == f);
    CHECK(hadamard(f, identity_poly(7)) == f);

    const HadamardProduct truncated = hadamard_product(f, P("1,1,1"));
    CHECK(truncated.nominal_degree == 2);
    CHECK(truncated.poly == P("16,8,164"));
    CHECK_FALSE(truncated.degree_dropped());

    const HadamardProduct dropped = hadamard_product(P("1,0,1"), P("1,1"));
    CHECK(dropped.degree_dropped());
    CHECK(dropped.poly == P("1"));
    CHECK(error_of([] { hadamard_product(P("0,1"), P("1")); }) == ErrorCode::ResultIsZero);
}

TEST_CASE("hadamard is commutative and associative") {
    for (long i = 0; i < 1000; ++i) {
        Rng rng = Rng::for_index(5, static_cast<std::uint64_t>(i));
        const int n = static_cast<int>(rng.uniform_int(1, 7));
        const Polynomial a = sample_positive(n, rng);
        const Polynomial b = sample_positive(n, rng);
        const Polynomial c = sample_positive(n, rng);
        REQUIRE(hadamard(a, b) == hadamard(b, a));
        REQUIRE(hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c)));
        REQUIRE(hadamard(a, b) == oracle::coefficientwise(a, b));
    }
}

TEST_CASE("named families") {
    CHECK(identity_poly(3) == P("1,1,1,1"));
    CHECK(identity_poly(0) == P("1"));
    CHECK(basic_quasistable(3) == P("1,1,1,1"));
    CHECK(basic_quasistable(5) == P("1,1,2,2,1,1"));
    CHECK(basic_quasistable(2, 2) == P("0,0,1,0,1"));
    CHECK(basic_quasistable(4) == P("1,0,2,0,1"));
    CHECK(error_of([] { basic_quasistable(1); }) == ErrorCode::InvalidDegree);

    CHECK(shift_divide(P("0,0,1,0,1"), 2) == P("1,0,1"));
    CHECK(shift_divide(P("3,1"), 0) == P("3,1"));
    CHECK(error_of([] { shift_divide(P("1,1"), 1); }) == ErrorCode::NotDivisible);

    // (g * Q^3_1) / x by direct expansion: b1 + b2 x + b3 x^2 + b4 x^3
    const Polynomial g = testing::example_g_y5();
    CHECK(shift_divide(hadamard(g, basic_quasistable(3, 1)), 1) == P("10,4.75,5.5,1"));
}

TEST_CASE("arithmetic") {
    const Polynomial a = P("1,1");
    CHECK(power(a, 3) == P("1,3,3,1"));
    const auto [q, r] = divide(P("1,3,3,1"), P("1,1"));
    CHECK(q == P("1,2,1"));
    CHECK(r.is_zero());
    CHECK(P("1,2,1").derivative() == P("2,2"));
    CHECK(P("2,4").monic() == P("1/2,1"));
    CHECK(substitute_square(P("1,2,1")) == P("1,0,2,0,1"));
    CHECK(P("1,3,3,1").evaluate(-1) == 0);
}
