#include <catch2/catch_amalgamated.hpp>

#include "grmod/polynomial.hpp"
#include "support.hpp"

using namespace grmod;
using grmod::testing::random_isobaric;
using grmod::testing::segre_cubic;
using grmod::testing::segre_ring;
using grmod::testing::var;

TEST_CASE("ring construction validates input") {
    CHECK_THROWS_AS(make_ring({"T1", "T1"}, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring({"X"}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring({"X"}, {5}, CoefficientField::prime_field(5)), std::invalid_argument);
    auto r = make_ring({"X", "Y"}, {1, 2});
    CHECK(r->nvars() == 2);
}

TEST_CASE("basic arithmetic") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0), T2 = var(ring, 1);

    CHECK((T1 + T2) * (T1 - T2) == T1 * T1 - T2 * T2);

    auto S = segre_cubic(ring);
    CHECK((S - S).is_zero());
}

TEST_CASE("term count of the expanded sum cube") {
    auto ring = segre_ring();
    Polynomial<Rational> sum(ring);
    for (std::size_t i = 0; i < 5; ++i) sum = sum + var(ring, i);
    auto cube = sum.pow(3);
    // oracle: the cube is dense, so its support is every monomial of plain
    // degree 3 in five variables
    std::size_t expected = 0;
    for (const auto& m : monomials_of_degree(*ring, 9)) {
        (void)m;
        ++expected;
    }
    CHECK(expected == 35);
    CHECK(cube.size() == expected);
}

TEST_CASE("weighted degree") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0);
    auto S = segre_cubic(ring);

    CHECK(T1.weighted_degree() == 3);
    CHECK(S.weighted_degree() == 9);
    CHECK_FALSE((T1 + T1 * T1).weighted_degree().has_value());
    CHECK_THROWS_AS(Polynomial<Rational>::zero(ring).weighted_degree(), std::domain_error);
}

TEST_CASE("partial derivatives") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0);
    auto S = segre_cubic(ring);

    CHECK(T1.pow(3).derivative(0) == T1.pow(2).scaled(3));

    Polynomial<Rational> sum(ring);
    for (std::size_t i = 0; i < 5; ++i) sum = sum + var(ring, i);
    CHECK(S.derivative(0) == T1.pow(2).scaled(3) - sum.pow(2).scaled(3));

    CHECK(var(ring, 0).derivative(1).is_zero());
}

TEST_CASE("euler identity on fixtures") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0), T2 = var(ring, 1);
    CHECK(euler_check(segre_cubic(ring)));
    CHECK(euler_check(T1));
    CHECK(euler_check(T1 * T2));
    CHECK_THROWS_AS(euler_check(T1 + T1 * T1), std::invalid_argument);
}

TEST_CASE("euler and leibniz over random isobaric polynomials") {
    auto ring = segre_ring();
    std::mt19937 rng(20140901);
    for (int iter = 0; iter < 100; ++iter) {
        long da = 3 * (1 + iter % 4), db = 3 * (1 + (iter / 4) % 3);
        auto a = random_isobaric(ring, da, rng);
        auto b = random_isobaric(ring, db, rng);
        CHECK(euler_check(a));
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            auto lhs = (a * b).derivative(v);
            auto rhs = a * b.derivative(v) + b * a.derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("grading is multiplicative") {
    auto ring = make_ring({"X", "Y", "Z"}, {1, 2, 3});
    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        auto a = random_isobaric(ring, 2 + iter % 5, rng);
        auto b = random_isobaric(ring, 1 + iter % 4, rng);
        auto p = a * b;
        if (p.is_zero()) continue;
        CHECK(p.weighted_degree() == *a.weighted_degree() + *b.weighted_degree());
    }
}

TEST_CASE("concrete bracket") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0), T2 = var(ring, 1);

    auto b = bracket_concrete(T1, T2);
    CHECK(b[0] == T2.scaled(3));
    CHECK(b[1] == -T1.scaled(3));
    CHECK(b[2].is_zero());
    CHECK(b[3].is_zero());
    CHECK(b[4].is_zero());

    auto diag = bracket_concrete(T1 * T2, T1 * T2);
    for (const auto& c : diag) CHECK(c.is_zero());

    // weights (6, 3) example
    auto bb = bracket_concrete(T1 * T1, T2);
    CHECK(bb[0] == (T1 * T2).scaled(6));
    CHECK(bb[1] == -(T1 * T1).scaled(6));
}

TEST_CASE("bracket skew symmetry and cocycle rule") {
    auto ring = segre_ring();
    std::mt19937 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        auto f = random_isobaric(ring, 3 * (1 + iter % 3), rng);
        auto g = random_isobaric(ring, 3 * (1 + (iter / 3) % 3), rng);
        auto h = random_isobaric(ring, 3 * (1 + (iter / 9) % 2), rng);
        auto fg = bracket_concrete(f, g);
        auto gf = bracket_concrete(g, f);
        auto fh = bracket_concrete(f, h);
        auto hg = bracket_concrete(h, g);
        long df = *f.weighted_degree(), dg = *g.weighted_degree(), dh = *h.weighted_degree();
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            CHECK((fg[v] + gf[v]).is_zero());
            auto lhs = (h * fg[v]).scaled(dh);
            auto rhs = (g * fh[v]).scaled(dg) + (f * hg[v]).scaled(df);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("denominator-cleared alternate bracket formula") {
    auto ring = segre_ring();
    std::mt19937 rng(271828);
    for (int iter = 0; iter < 40; ++iter) {
        auto f = random_isobaric(ring, 3, rng);
        auto g = random_isobaric(ring, 3 * (1 + iter % 2), rng);
        long a = *f.weighted_degree(), b = *g.weighted_degree();
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            auto df = f.derivative(v);
            auto dg = g.derivative(v);
            auto lhs = g.pow(static_cast<unsigned>(a) + 1) *
                       (f.pow(static_cast<unsigned>(b) - 1) * g.pow(static_cast<unsigned>(a)) * df.scaled(b) -
                        f.pow(static_cast<unsigned>(b)) * g.pow(static_cast<unsigned>(a) - 1) * dg.scaled(a));
            auto rhs = g.pow(2 * static_cast<unsigned>(a)) * f.pow(static_cast<unsigned>(b) - 1) *
                       (g * df.scaled(b) - f * dg.scaled(a));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("prime field cross-check of polynomial arithmetic") {
    auto field = CoefficientField::prime_field(1000003);
    auto ring = make_ring({"T1", "T2", "T3", "T4", "T5"}, {3, 3, 3, 3, 3}, field);
    auto S = segre_cubic<Fp>(ring);
    CHECK(S.weighted_degree() == 9);
    CHECK(euler_check(S));
}

TEST_CASE("exact division") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0), T2 = var(ring, 1);
    auto p = (T1 + T2) * (T1 - T2);
    auto q = p.exact_divide(T1 + T2);
    REQUIRE(q.has_value());
    CHECK(*q == T1 - T2);
    CHECK_FALSE(p.exact_divide(var(ring, 2)).has_value());
}

TEST_CASE("canonical serialization") {
    auto ring = segre_ring();
    auto T1 = var(ring, 0), T2 = var(ring, 1);
    auto p = T1 * T1 - (T1 * T2).scaled(Rational(1, 2));
    CHECK(p.str() == "T1^2 - 1/2*T1*T2");
    CHECK(Polynomial<Rational>::zero(ring).str() == "0");
}
