#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parastat/closed_forms.hpp"
#include "parastat/reduced_elements.hpp"

using namespace parastat;
using gz::Signature;

TEST_CASE("vacuum creation amplitude is sqrt(p)") {
    for (auto [m, n, p] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 1, 1}, {2, 2, 3}, {1, 2, 4}}) {
        Signature sig{m, n, p, 4};
        std::vector<int> vac(m + n, 0);
        CHECK(reduced::reduced_element(1, vac, sig) == RadicalSum::sqrt_of(Rational(p)));
    }
}

TEST_CASE("the boundary indeterminate case is resolved by pairing and audited") {
    clear_cancellation_log();
    Signature sig{1, 1, 2, 4};
    CHECK(reduced::reduced_element(1, {0, 0}, sig) == RadicalSum::sqrt_of(Rational(2)));
    auto events = cancellation_events();
    REQUIRE(events.size() == 1);
    CHECK(events[0].pairs == 1);
    clear_cancellation_log();
}

TEST_CASE("first family dies at the order cap, keeping the module invariant") {
    Signature sig{1, 1, 2, 8};
    CHECK(reduced::reduced_element(1, {2, 0}, sig).is_zero());
    CHECK(reduced::reduced_element(1, {2, 1}, sig).is_zero());
    Signature sig21{2, 1, 3, 8};
    CHECK(reduced::reduced_element(1, {3, 1, 0}, sig21).is_zero());
}

TEST_CASE("raised rows violating the ordering or hook give zero") {
    Signature sig{1, 1, 3, 8};
    CHECK(reduced::reduced_element(2, {0, 0}, sig).is_zero()); // hook: no first-column label
    Signature sig21{2, 1, 3, 8};
    CHECK(reduced::reduced_element(2, {1, 1, 0}, sig21).is_zero()); // ordering
    CHECK_FALSE(reduced::reduced_element(2, {2, 1, 0}, sig21).is_zero());
}

TEST_CASE("m=n=1 values match the parity-split closed forms on levels <= 8") {
    for (int p : {1, 2, 3}) {
        Signature sig{1, 1, p, 9};
        for (int a = 0; a <= std::min(8, p); ++a)
            for (int b = 0; a + b <= 8; ++b) {
                if (b > 0 && a == 0) continue;
                std::vector<int> top{a, b};
                CHECK(reduced::reduced_element(1, top, sig) == fock::m1n1::g1(a, b, p));
                // the second slot needs a valid raised row (a >= 1)
                if (a >= 1)
                    CHECK(reduced::reduced_element(2, top, sig) == fock::m1n1::g2(a, b, p));
            }
    }
}

TEST_CASE("spot value from the closed table") {
    Signature sig{1, 1, 2, 8};
    CHECK(reduced::reduced_element(2, {1, 0}, sig) == RadicalSum::sqrt_of(Rational(2)));
}

TEST_CASE("sign twist: first block flips with level parity, rest unchanged") {
    Signature sig{2, 2, 3, 8};
    std::vector<int> vac(4, 0);
    for (int k = 1; k <= 2; ++k)
        CHECK(reduced::reduced_element_twisted(k, vac, sig) ==
              reduced::reduced_element(k, vac, sig));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 2);
    for (int it = 0; it < 200; ++it) {
        std::vector<int> top{d(rng) + 1, d(rng), d(rng), 0};
        std::sort(top.begin(), top.begin() + 2, std::greater<>());
        std::sort(top.begin() + 2, top.end(), std::greater<>());
        if (top[0] > sig.p || !gz::top_row_ok(top, sig)) continue;
        long level = top[0] + top[1] + top[2] + top[3];
        for (int k = 1; k <= 4; ++k) {
            auto g = reduced::reduced_element(k, top, sig);
            auto gt = reduced::reduced_element_twisted(k, top, sig);
            if (k > 2 || level % 2 == 0) {
                CHECK(gt == g);
            } else {
                CHECK(gt == -g);
            }
            CHECK(gt * gt == g * g); // |twisted| == |plain|
        }
    }
}

TEST_CASE("the anticommutator recurrence pins the values on every basis vector") {
    for (auto [m, n, p] : std::vector<std::array<int, 3>>{{1, 1, 2}, {2, 1, 2}, {1, 2, 1}}) {
        Signature sig{m, n, p, 4};
        for (fock::Variant v : {fock::Variant::Osp, fock::Variant::Pso}) {
            auto rep = fock::verify_cartan_recurrence(sig, v);
            INFO(rep.to_json());
            CHECK(rep.all_ok());
        }
    }
}
