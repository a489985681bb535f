#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastat/defining_rep.hpp"

using namespace parastat;
using namespace parastat::defrep;
using fock::Variant;
using fock::Z2Z2Degree;

namespace {

RadicalSum rt2() { return RadicalSum(Radical{Rational(1), Int(2)}); }

GradedMatrix unit_pair(int dim, Z2Z2Degree deg, int i1, int j1, int s1, int i2, int j2, int s2) {
    GradedMatrix out(dim, deg);
    out.at(i1, j1) += s1 > 0 ? rt2() : -rt2();
    out.at(i2, j2) += s2 > 0 ? rt2() : -rt2();
    return out;
}

} // namespace

TEST_CASE("generator matrices in dimension five") {
    // m = n = 1: indices (1..5) split 1 | 2 | 3 | 4 | 5
    auto fp = generator(fock::F(1, +1, Variant::Pso), 1, 1);
    CHECK(fp == unit_pair(5, {1, 1}, 1, 3, +1, 3, 2, -1));
    CHECK(fp.degree() == Z2Z2Degree{1, 1});

    auto bm = generator(fock::B(1, -1, Variant::Pso), 1, 1);
    CHECK(bm == unit_pair(5, {1, 0}, 3, 4, +1, 5, 3, -1));
    CHECK(bm.degree() == Z2Z2Degree{1, 0});

    auto bp = generator(fock::B(1, +1, Variant::Pso), 1, 1);
    CHECK(bp == unit_pair(5, {1, 0}, 3, 5, +1, 4, 3, +1));

    CHECK((fp.degree() + fp.degree()) == Z2Z2Degree{0, 0});
}

TEST_CASE("Cartan elements from brackets") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}}) {
        const int dim = 2 * m + 2 * n + 1;
        for (int i = 1; i <= m; ++i) {
            auto h = graded_bracket(generator(fock::F(i, -1, Variant::Pso), m, n),
                                    generator(fock::F(i, +1, Variant::Pso), m, n))
                         .scaled(RadicalSum(Rational(-1, 2)));
            GradedMatrix expect(dim, Z2Z2Degree{0, 0});
            expect.at(i, i) += RadicalSum(Rational(1));
            expect.at(i + m, i + m) += RadicalSum(Rational(-1));
            CHECK(h == expect);
        }
        for (int j = 1; j <= n; ++j) {
            auto h = graded_bracket(generator(fock::B(j, -1, Variant::Pso), m, n),
                                    generator(fock::B(j, +1, Variant::Pso), m, n))
                         .scaled(RadicalSum(Rational(1, 2)));
            GradedMatrix expect(dim, Z2Z2Degree{0, 0});
            expect.at(2 * m + 1 + j, 2 * m + 1 + j) += RadicalSum(Rational(1));
            expect.at(2 * m + 1 + n + j, 2 * m + 1 + n + j) += RadicalSum(Rational(-1));
            CHECK(h == expect);
        }
    }
}

TEST_CASE("self-bracket of an odd-paired element is twice its square") {
    auto b = generator(fock::B(1, +1, Variant::Pso), 2, 1);
    CHECK(graded_bracket(b, b) == (b * b).scaled(RadicalSum(Rational(2))));
    auto f = generator(fock::F(1, +1, Variant::Pso), 2, 1);
    CHECK(graded_bracket(f, f).is_zero()); // even pairing: [x,x] = 0
}

TEST_CASE("mixed raising pair squares to zero in the matrix picture") {
    auto f = generator(fock::F(1, +1, Variant::Pso), 1, 1);
    auto b = generator(fock::B(1, +1, Variant::Pso), 1, 1);
    auto w = f * b + b * f;
    CHECK((w * w).is_zero());
}

TEST_CASE("defining relations hold exhaustively") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}}) {
        auto rep = verify_defining_relations(m, n);
        INFO(rep.to_json());
        CHECK(rep.all_ok());
    }
}

TEST_CASE("graded Jacobi identity on random homogeneous triples") {
    CHECK(verify_jacobi_random(2, 1, 200, 1234).all_ok());
    CHECK(verify_jacobi_random(1, 2, 200, 99).all_ok());
}

TEST_CASE("generators and their brackets sit in the right graded blocks") {
    const int m = 2, n = 1;
    std::vector<GradedMatrix> gens;
    for (int j = 1; j <= m; ++j)
        for (int s : {+1, -1}) gens.push_back(generator(fock::F(j, s, Variant::Pso), m, n));
    for (int j = 1; j <= n; ++j)
        for (int s : {+1, -1}) gens.push_back(generator(fock::B(j, s, Variant::Pso), m, n));
    for (const auto& g : gens) {
        CHECK(shape_ok(g, m, n));
        CHECK(degree_blocks_ok(g, m, n));
        for (const auto& h : gens) {
            auto br = graded_bracket(g, h);
            CHECK(shape_ok(br, m, n));
            CHECK(degree_blocks_ok(br, m, n));
        }
    }
}

TEST_CASE("shape check rejects matrices outside the block form") {
    GradedMatrix bad(5, Z2Z2Degree{0, 0});
    bad.at(3, 3) += RadicalSum(Rational(1)); // center must vanish
    CHECK_FALSE(shape_ok(bad, 1, 1));
}

TEST_CASE("span of the even-plus-first-block part has the classical dimension") {
    CHECK(verify_even_span_dimension(1, 1).all_ok()); // 3 + 3
    CHECK(verify_even_span_dimension(2, 1).all_ok()); // 10 + 3
    CHECK(verify_even_span_dimension(2, 2).all_ok()); // 10 + 10
}

TEST_CASE("rank helper") {
    CHECK(bareiss_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
    CHECK(bareiss_rank({{Int(1), Int(0), Int(3)}, {Int(0), Int(5), Int(1)}, {Int(1), Int(5), Int(4)}}) == 2);
    CHECK(bareiss_rank({{Int(2), Int(1)}, {Int(1), Int(1)}}) == 2);
}

TEST_CASE("dimension mismatch is an error") {
    auto a = generator(fock::F(1, +1, Variant::Pso), 1, 1);
    auto b = generator(fock::F(1, +1, Variant::Pso), 2, 1);
    CHECK_THROWS_AS(graded_bracket(a, b), Error);
}
