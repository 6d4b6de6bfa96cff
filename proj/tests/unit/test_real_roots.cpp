#include <doctest.h>

#include "helpers.hpp"
#include "hurwitz/real_roots.hpp"
#include "hurwitz/search.hpp"
#include "oracles.hpp"

using namespace hurwitz;
using testing::error_of;
using testing::P;

TEST_CASE("gcd conventions") {
    CHECK(poly_gcd(P("1,1"), P("1,1")) == P("1,1"));
    CHECK(poly_gcd(P("1,2,1"), Polynomial::zero()) == P("1,2,1"));
    CHECK(poly_gcd(P("2,4,2"), Polynomial::zero()) == P("1,2,1"));
    CHECK(poly_gcd(P("1,3,2"), P("2,3,1")) == P("1,1"));
    CHECK(poly_gcd(P("1,1"), P("2,1")) == P("1"));
    CHECK(error_of([] { poly_gcd(Polynomial::zero(), Polynomial::zero()); }) == ErrorCode::BothZero);
}

TEST_CASE("squarefree factorisation") {
    const Polynomial f = P("1,1") * P("1,1") * P("1,1") * P("2,1") * P("2,1") * P("3,1");
    const auto factors = squarefree_factorization(f);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0] == P("3,1"));
    CHECK(factors[1] == P("2,1"));
    CHECK(factors[2] == P("1,1"));
    CHECK(squarefree_part(f) == P("1,1") * P("2,1") * P("3,1"));
}

TEST_CASE("root counting and isolation") {
    const Polynomial f = oracle::from_real_roots({-3, -1, Rational(1, 2), 2});
    const SturmChain chain(f);
    CHECK(chain.count_all() == 4);
    CHECK(chain.count(Rational(-2), Rational(1)) == 2);
    CHECK(chain.count(std::nullopt, Rational(0)) == 2);
    CHECK(chain.count(Rational(2), std::nullopt) == 0);  // (2, inf)
    CHECK(chain.count(Rational(1), Rational(2)) == 1);   // half-open (1, 2]

    const auto intervals = isolate_real_roots(f);
    REQUIRE(intervals.size() == 4);
    const Rational truth[] = {-3, -1, Rational(1, 2), 2};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(intervals[i].lo <= truth[i]);
        CHECK(truth[i] <= intervals[i].hi);
    }
    CHECK(isolate_real_roots(P("1,0,1")).empty());
}

TEST_CASE("negative zeros") {
    CHECK(has_only_negative_zeros(P("1,2,1")));
    CHECK_FALSE(has_only_negative_zeros(P("1,0,1")));
    CHECK(has_only_negative_zeros(P("1,4,1")));
    CHECK_FALSE(has_only_negative_zeros(P("0,1")));
    CHECK_FALSE(has_only_negative_zeros(P("-1,1")));
    CHECK(has_only_negative_zeros(P("5")));
    CHECK(is_real_rooted(P("-1,0,1")));
    CHECK_FALSE(is_real_rooted(P("1,0,1")));
}

TEST_CASE("interlacing") {
    CHECK(interlaces(P("1,1"), P("1,2,1")).holds);
    CHECK_FALSE(interlaces(P("1,1"), P("1,2,1")).strict);
    CHECK(interlaces(Polynomial::zero(), P("1,1")).holds);
    // zeros -1 and -2, -3 against -1.5: -2 <= -1.5 <= -1 with h of one degree more
    CHECK(interlaces(P("3,2"), P("2,3,1")).holds);
    CHECK(interlaces(P("3,2"), P("2,3,1")).strict);
    CHECK_FALSE(interlaces(P("5,1"), P("2,3,1")).holds);
    CHECK_FALSE(interlaces(P("1,0,1"), P("2,3,1")).holds);

    for (long i = 0; i < 1000; ++i) {
        Rng rng = Rng::for_index(31, static_cast<std::uint64_t>(i));
        const Polynomial f = sample_stable(static_cast<int>(rng.uniform_int(2, 7)), rng);
        const EvenOddParts parts = even_odd_split(f);
        REQUIRE(interlaces(parts.odd, parts.even).holds);
    }
}
