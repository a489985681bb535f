#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "parastat/factor_ratio.hpp"
#include "parastat/radical.hpp"

using namespace parastat;

namespace {

RadicalSum sqrt_int(long n) { return RadicalSum::sqrt_of(Rational(n)); }

/// Random sums over a fixed square-free radicand pool; deterministic seed.
struct Gen {
    std::mt19937_64 rng{0x5eed5eedULL};
    const std::vector<long> radicands{1, 2, 3, 5, 6, 7, 10, 11, 13, 15};

    Rational rational() {
        std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
        return Rational(num(rng), den(rng));
    }
    RadicalSum sum() {
        std::uniform_int_distribution<int> nterms(0, 3);
        std::uniform_int_distribution<std::size_t> pick(0, radicands.size() - 1);
        RadicalSum s;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i)
            s += RadicalSum(Radical{rational(), Int(radicands[pick(rng)])});
        return s;
    }
};

} // namespace

TEST_CASE("sqrt_normalize pulls out square factors") {
    auto r = sqrt_normalize(Rational(8));
    CHECK(r.coeff == Rational(2));
    CHECK(r.radicand == 2);

    r = sqrt_normalize(Rational(0));
    CHECK(r.coeff == Rational(0));
    CHECK(r.radicand == 1);

    r = sqrt_normalize(Rational(9, 2));
    CHECK(r.coeff == Rational(3, 2));
    CHECK(r.radicand == 2);

    CHECK_THROWS_AS(sqrt_normalize(Rational(-1)), NegativeRadicand);
}

TEST_CASE("sqrt_normalize handles large prime content") {
    // prime beyond sqrt but below the bound squared
    Int p1("1000003"), p2("1000033");
    CHECK_THROWS_AS(sqrt_normalize(Rational(p1 * p2)), FactorBoundExceeded);
    auto r = sqrt_normalize(Rational(p1 * p1)); // perfect square past the bound
    CHECK(r.coeff == Rational(p1));
    CHECK(r.radicand == 1);
    auto s = sqrt_normalize(Rational(Int(999983))); // prime below the bound
    CHECK(s.coeff == Rational(1));
    CHECK(s.radicand == 999983);
}

TEST_CASE("addition renormalizes and cancels") {
    RadicalSum a = sqrt_int(2) + sqrt_int(8) - Rational(3) * sqrt_int(2);
    CHECK(a.is_zero());

    RadicalSum b = RadicalSum(Radical{Rational(1, 2), Int(3)}) +
                   RadicalSum(Radical{Rational(1, 3), Int(3)});
    CHECK(b == RadicalSum(Radical{Rational(5, 6), Int(3)}));

    RadicalSum c = sqrt_int(2) + sqrt_int(3);
    CHECK(c.term_count() == 2);
}

TEST_CASE("multiplication renormalizes radicands") {
    CHECK(sqrt_int(2) * sqrt_int(2) == RadicalSum(Rational(2)));
    CHECK(sqrt_int(2) * sqrt_int(6) == Rational(2) * sqrt_int(3));
    RadicalSum one_plus = RadicalSum(Rational(1)) + sqrt_int(2);
    RadicalSum one_minus = RadicalSum(Rational(1)) - sqrt_int(2);
    CHECK(one_plus * one_minus == RadicalSum(Rational(-1)));
}

TEST_CASE("to_double is a faithful float view") {
    CHECK(std::abs(sqrt_int(2).to_double() - 1.4142135623730951) < 1e-12);
    CHECK(RadicalSum().to_double() == 0.0);
    CHECK((RadicalSum(Rational(2)) + sqrt_int(1)).to_double() == 3.0);
}

TEST_CASE("canonical JSON encoding") {
    RadicalSum v = RadicalSum(Radical{Rational(-3, 2), Int(6)}) + RadicalSum(Rational(1, 2));
    CHECK(v.to_json() ==
          "{\"terms\":[{\"num\":1,\"den\":2,\"radicand\":1},{\"num\":-3,\"den\":2,\"radicand\":6}]}");
    CHECK(RadicalSum().to_json() == "{\"terms\":[]}");
}

TEST_CASE("ring axioms on randomized sums") {
    Gen gen;
    const int kTriples = 10000;
    for (int i = 0; i < kTriples; ++i) {
        RadicalSum a = gen.sum(), b = gen.sum(), c = gen.sum();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - b).is_zero() == (a == b));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("normalization round trips and radical squares") {
    Gen gen;
    std::uniform_int_distribution<std::size_t> pick(0, gen.radicands.size() - 1);
    for (int i = 0; i < 10000; ++i) {
        Rational c = gen.rational().abs();
        Int d(gen.radicands[pick(gen.rng)]);
        auto r = sqrt_normalize(c * c * Rational(d));
        if (c.is_zero()) {
            REQUIRE(r.coeff.is_zero());
        } else {
            REQUIRE(r.coeff == c);
            REQUIRE(r.radicand == d);
        }
        Radical rad{gen.rational(), d};
        RadicalSum sq = RadicalSum(rad) * RadicalSum(rad);
        REQUIRE(sq.is_rational());
        REQUIRE(sq.rational_part() == rad.coeff * rad.coeff * Rational(d));
    }
}

TEST_CASE("factor ratio pairs zeros before dividing") {
    FactorRatio fr;
    fr.num(Int(0));
    fr.num(Int(6));
    fr.den(Int(0));
    fr.den(Int(3));
    auto res = fr.collapse("test");
    CHECK(res.status == FactorRatio::Status::Value);
    CHECK(res.value == Rational(2));
    CHECK(res.cancelled == 1);

    FactorRatio zero_left;
    zero_left.num(Int(0));
    zero_left.den(Int(5));
    CHECK(zero_left.collapse("test").status == FactorRatio::Status::Zero);

    FactorRatio singular;
    singular.num(Int(5));
    singular.den(Int(0));
    CHECK(singular.collapse("test").status == FactorRatio::Status::Singular);
}

TEST_CASE("cancellation events are audited") {
    clear_cancellation_log();
    FactorRatio fr;
    fr.num(Int(0));
    fr.den(Int(0));
    fr.collapse("audit-me");
    auto events = cancellation_events();
    REQUIRE(events.size() == 1);
    CHECK(events[0].context == "audit-me");
    CHECK(events[0].pairs == 1);
    clear_cancellation_log();
}

TEST_CASE("text rendering") {
    RadicalSum v = Rational(-2) * sqrt_int(3) + RadicalSum(Rational(1, 2));
    CHECK(v.to_text() == "1/2 - 2√3");
    CHECK(sqrt_int(2).to_text() == "√2");
    CHECK(RadicalSum().to_text() == "0");
}
