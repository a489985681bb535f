#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastat/gz_basis.hpp"
#include "parastat/tableaux.hpp"

using namespace parastat;
using gz::GZPattern;
using gz::Signature;

TEST_CASE("vacuum pattern is valid for any signature") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        Signature sig{m, n, 2, 4};
        CHECK(gz::validate(GZPattern::zero(m + n), sig).ok);
    }
}

TEST_CASE("top row hook constraint is condition 1") {
    Signature sig{1, 1, 3, 4};
    for (int fill : {0, 1}) {
        auto res = gz::validate(GZPattern({{0, 1}, {fill}}), sig);
        CHECK_FALSE(res.ok);
        CHECK(res.condition == 1);
    }
    CHECK(gz::validate(GZPattern({{1, 0}, {1}}), sig).ok);
    CHECK(gz::validate(GZPattern({{1, 0}, {0}}), sig).ok);
}

TEST_CASE("each condition is reported by index") {
    Signature sig{1, 1, 5, 9};
    CHECK(gz::validate(GZPattern({{3, 1}, {1}}), sig).condition == 2);  // theta = 2
    CHECK(gz::validate(GZPattern({{0, 0}, {-1}}), sig).condition == 4); // theta at zero label
    Signature sig12{1, 2, 5, 9};
    CHECK(gz::validate(GZPattern({{1, 1, 0}, {0, 1}, {0}}), sig12).condition == 3);
    Signature sig22{2, 2, 5, 9};
    CHECK(gz::validate(GZPattern({{1, 1, 1, 0}, {0, 1, 0}, {0, 0}, {0}}), sig22).condition == 5);
    CHECK(gz::validate(GZPattern({{2, 2, 0, 0}, {2, 2, 0}, {2, 2}, {0}}), sig22).condition == 6);
}

TEST_CASE("malformed shapes throw") {
    Signature sig{1, 1, 2, 4};
    CHECK_THROWS_AS(gz::validate(GZPattern({{1, 0}}), sig), ShapeError);
    CHECK_THROWS_AS(gz::validate(GZPattern({{1, 0, 0}, {0, 0}, {0}}), sig), ShapeError);
}

TEST_CASE("enumeration with a fixed top row") {
    Signature sig{1, 1, 2, 6};
    auto two = gz::enumerate_with_top({1, 0}, sig);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == GZPattern({{1, 0}, {0}}));
    CHECK(two[1] == GZPattern({{1, 0}, {1}}));
    CHECK(gz::enumerate_with_top({0, 0}, sig).size() == 1);
    CHECK_THROWS_AS(gz::enumerate_with_top({0, 1}, sig), TopRowError);

    Signature sig22{2, 2, 3, 6};
    auto pats = gz::enumerate_with_top({1, 0, 0, 0}, sig22);
    CHECK(static_cast<long>(pats.size()) == tableaux::covariant_dimension({1}, 2, 2));
}

TEST_CASE("basis respects the order cap and the level cap") {
    CHECK(gz::basis_patterns({1, 1, 1, 0}).size() == 1);
    auto b = gz::basis_patterns({1, 1, 2, 1});
    REQUIRE(b.size() == 3);
    CHECK(b[0] == GZPattern::zero(2));

    for (const auto& pat : gz::basis_patterns({1, 1, 1, 3}))
        CHECK(pat.mu(1, 2) <= 1); // no top label beyond p survives
}

TEST_CASE("every enumerated pattern validates") {
    Signature sig{2, 2, 2, 4};
    for (const auto& pat : gz::basis_patterns(sig)) CHECK(gz::validate(pat, sig).ok);
}

TEST_CASE("weights") {
    Signature sig{1, 1, 3, 4};
    auto wvac = gz::weight(GZPattern::zero(2), sig);
    CHECK(wvac[0] == Rational(-3, 2));
    CHECK(wvac[1] == Rational(3, 2));
    auto w = gz::weight(GZPattern({{1, 0}, {1}}), sig);
    CHECK(w[0] == Rational(-3, 2) + Rational(1));
    CHECK(w[1] == Rational(3, 2));

    // last component restated: 2 h_r - p = 2 (level - next row sum)
    Signature sig21{2, 1, 2, 3};
    for (const auto& pat : gz::basis_patterns(sig21)) {
        auto ww = gz::weight(pat, sig21);
        Rational lhs = Rational(2) * ww[2] - Rational(sig21.p);
        CHECK(lhs == Rational(2 * (pat.level() - pat.row_sum(2))));
    }
}

TEST_CASE("weight shift from the vacuum is nonnegative integral with total = level") {
    Signature sig{2, 2, 3, 4};
    auto vac = gz::weight(GZPattern::zero(4), sig);
    for (const auto& pat : gz::basis_patterns(sig)) {
        auto w = gz::weight(pat, sig);
        int total = 0;
        for (int i = 0; i < 4; ++i) {
            Rational d = w[i] - vac[i];
            CHECK(d.is_integer());
            CHECK(d.sign() >= 0);
            total += static_cast<int>(d.num().get_si());
        }
        CHECK(total == pat.level());
    }
}

TEST_CASE("levels stratify: one added box lands one level up or nowhere") {
    Signature sig{2, 1, 2, 3};
    for (const auto& pat : gz::basis_patterns(sig)) {
        for (int k = 1; k <= sig.r(); ++k) {
            auto top = pat.top();
            top[k - 1] += 1;
            if (!gz::top_row_ok(top, sig)) continue;
            for (const auto& filled : gz::enumerate_with_top(top, sig))
                CHECK(filled.level() == pat.level() + 1);
        }
    }
}

TEST_CASE("per-top pattern counts equal the tableau oracle") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        Signature sig{m, n, 9, 6};
        for (int weight = 0; weight <= 6; ++weight)
            for (const auto& lam : tableaux::hook_partitions(m, n, weight)) {
                auto top = tableaux::top_row_for_partition(lam, m, n);
                REQUIRE(gz::top_row_ok(top, sig));
                CHECK(static_cast<long>(gz::enumerate_with_top(top, sig).size()) ==
                      tableaux::covariant_dimension(lam, m, n));
            }
    }
}

TEST_CASE("pattern JSON and text round trip") {
    GZPattern pat({{1, 0}, {1}});
    CHECK(pat.to_json(1, 1) == "{\"m\":1,\"n\":1,\"rows\":[[1,0],[1]]}");
    CHECK(pat.to_text() == "1,0/1");
    CHECK(GZPattern::from_text("1,0/1") == pat);
}

TEST_CASE("basis order is deterministic: level, then top row, then fill") {
    Signature sig{1, 1, 2, 2};
    auto b = gz::basis_patterns(sig);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
    gz::Basis basis(sig);
    for (int i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis.pattern(i)) == i);
}
