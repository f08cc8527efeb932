#include <catch2/catch_amalgamated.hpp>

#include "fockforge/checks.hpp"
#include "fockforge/laurent.hpp"
#include "fockforge/series.hpp"

#include "oracles.hpp"

using namespace fockforge;

namespace {

TruncatedSeries random_series(SplitMix64& rng, int order, bool zero_constant) {
    TruncatedSeries s("t", "s", order);
    int nterms = static_cast<int>(rng.uniform(1, 6));
    for (int i = 0; i < nterms; ++i) {
        int e0 = static_cast<int>(rng.uniform(zero_constant ? 0 : 0, order));
        int e1 = static_cast<int>(rng.uniform(0, order));
        if (zero_constant && e0 == 0 && e1 == 0) e0 = 1;
        long long num = rng.uniform(-5, 5);
        long long den = rng.uniform(1, 3);
        s.add_term({e0, e1}, make_rational(num, den));
    }
    return s;
}

} // namespace

TEST_CASE("series multiplication basics") {
    TruncatedSeries one_plus_t("t", 4);
    one_plus_t.add_term({0, 0}, Rational(1));
    one_plus_t.add_term({1, 0}, Rational(1));
    TruncatedSeries one_minus_t("t", 4);
    one_minus_t.add_term({0, 0}, Rational(1));
    one_minus_t.add_term({1, 0}, Rational(-1));

    TruncatedSeries prod = one_plus_t * one_minus_t;
    REQUIRE(prod.coeff(0) == Rational(1));
    REQUIRE(prod.coeff(1) == Rational(0));
    REQUIRE(prod.coeff(2) == Rational(-1));

    // (1 - ts)^{-1} times (1 - ts) is 1 up to order.
    TruncatedSeries geom = binomial_power(1, 5);
    TruncatedSeries lin("t", "s", 5);
    lin.add_term({0, 0}, Rational(1));
    lin.add_term({1, 1}, Rational(-1));
    REQUIRE(geom * lin == TruncatedSeries::one(geom));

    SECTION("variable mismatch is a usage error") {
        TruncatedSeries other("z", 4);
        other.add_term({0, 0}, Rational(1));
        REQUIRE_THROWS_AS(one_plus_t * other, UsageError);
    }
}

TEST_CASE("partition generating product") {
    // prod_{n<=4} (1 - z^n)^{-1} starts 1 + z + 2z^2 + 3z^3 + 5z^4
    // (hand enumeration of p(0..4)).
    int order = 4;
    TruncatedSeries prod("z", order);
    prod.add_term({0, 0}, Rational(1));
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries geom("z", order);
        for (int j = 0; j * n <= order; ++j) geom.add_term({j * n, 0}, Rational(1));
        prod *= geom;
    }
    const long expected[] = {1, 1, 2, 3, 5};
    for (int n = 0; n <= order; ++n) REQUIRE(prod.coeff(n) == Rational(expected[n]));
}

TEST_CASE("series exponential") {
    TruncatedSeries zero("t", 3);
    REQUIRE(zero.exp() == TruncatedSeries::one(zero));

    // exp(t) to order 3 is 1 + t + t^2/2 + t^3/6.
    TruncatedSeries t("t", 3);
    t.add_term({1, 0}, Rational(1));
    TruncatedSeries et = t.exp();
    REQUIRE(et.coeff(0) == Rational(1));
    REQUIRE(et.coeff(1) == Rational(1));
    REQUIRE(et.coeff(2) == make_rational(1, 2));
    REQUIRE(et.coeff(3) == make_rational(1, 6));

    // exp(sum t^n / n) = sum t^n: the geometric series, since the argument
    // is -log(1 - t).
    int order = 8;
    TruncatedSeries log_arg("t", order);
    for (int n = 1; n <= order; ++n) log_arg.add_term({n, 0}, make_rational(1, n));
    TruncatedSeries expanded = log_arg.exp();
    for (int n = 0; n <= order; ++n) REQUIRE(expanded.coeff(n) == Rational(1));

    SECTION("nonzero constant term is a usage error") {
        TruncatedSeries bad("t", 3);
        bad.add_term({0, 0}, Rational(2));
        REQUIRE_THROWS_AS(bad.exp(), UsageError);
    }
}

TEST_CASE("binomial power expansion") {
    REQUIRE(binomial_power(0, 5) == TruncatedSeries::one(binomial_power(0, 5)));

    TruncatedSeries k1 = binomial_power(1, 6);
    for (int n = 0; n <= 6; ++n) REQUIRE(k1.coeff(n, n) == Rational(1));

    // k = 2: coefficient of (ts)^3 is 4, the convolution of two geometric
    // series (1,1,1,...)*(1,1,1,...) at degree 3.
    REQUIRE(binomial_power(2, 5).coeff(3, 3) == Rational(4));
    REQUIRE(binomial_power(2, 8) == binomial_power(1, 8) * binomial_power(1, 8));

    // negative exponents terminate: (1-ts)^2
    TruncatedSeries sq = binomial_power(-2, 6);
    REQUIRE(sq.coeff(0, 0) == Rational(1));
    REQUIRE(sq.coeff(1, 1) == Rational(-2));
    REQUIRE(sq.coeff(2, 2) == Rational(1));
    REQUIRE(sq.coeff(3, 3) == Rational(0));
}

TEST_CASE("series ring properties on random triples") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries a = random_series(rng, 5, false);
        TruncatedSeries b = random_series(rng, 5, false);
        TruncatedSeries c = random_series(rng, 5, false);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exponential is additive on commuting arguments") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        TruncatedSeries a = random_series(rng, 4, true);
        TruncatedSeries b = random_series(rng, 4, true);
        REQUIRE((a + b).exp() == a.exp() * b.exp());
    }
}

TEST_CASE("series inverse") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries a = random_series(rng, 5, false);
        a.add_term({0, 0}, Rational(1)); // ensure invertibility
        if (is_zero(a.coeff(0, 0))) a.add_term({0, 0}, Rational(2));
        REQUIRE(a * a.inverse() == TruncatedSeries::one(a));
    }
}

TEST_CASE("q-integers") {
    REQUIRE(q_integer(1) == LaurentPolyQ(Integer(1)));

    LaurentPolyQ q2 = q_integer(2); // q + q^-1
    REQUIRE(q2.coeff(1) == Integer(1));
    REQUIRE(q2.coeff(-1) == Integer(1));
    REQUIRE(q2.coeff(0) == Integer(0));

    // [3] = q^2 + 1 + q^-2: long division of (q^3 - q^-3) by (q - q^-1).
    LaurentPolyQ q3 = q_integer(3);
    REQUIRE(q3.coeff(2) == Integer(1));
    REQUIRE(q3.coeff(0) == Integer(1));
    REQUIRE(q3.coeff(-2) == Integer(1));
    REQUIRE(q3.to_text() == "q^2 + 1 + q^-2");

    REQUIRE_THROWS_AS(q_integer(0), UsageError);

    SECTION("palindromic and counts to n at q = 1") {
        for (long n = 1; n <= 50; ++n) {
            LaurentPolyQ qn = q_integer(n);
            REQUIRE(qn == qn.invert_symbol());
            REQUIRE(evaluate_at(qn, Rational(1)) == Rational(n));
        }
    }

    SECTION("multiplicativity sanity: [2][3] = [4] + [2]") {
        REQUIRE(q_integer(2) * q_integer(3) == q_integer(4) + q_integer(2));
    }
}

TEST_CASE("series text and truncation invariants") {
    TruncatedSeries s("t", "s", 3);
    s.add_term({1, 0}, make_rational(-1, 2));
    s.add_term({0, 0}, Rational(1));
    s.add_term({2, 1}, Rational(3));
    REQUIRE(s.to_text() == "1 - 1/2*t + 3*t^2*s");

    // graded-lex order and no out-of-order surprises on iteration
    int last_total = -1;
    for (const auto& [e, c] : s.terms()) {
        REQUIRE(e[0] + e[1] >= last_total);
        last_total = e[0] + e[1];
    }

    // beyond-order terms are dropped, never stored
    s.add_term({9, 9}, Rational(5));
    for (const auto& [e, c] : s.terms()) {
        REQUIRE(e[0] <= 3);
        REQUIRE(e[1] <= 3);
    }
}
