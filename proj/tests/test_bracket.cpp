#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "grmod/bracket.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

TEST_CASE("slot indexing is a bijection on ordered pairs") {
    for (std::size_t m = 2; m <= 6; ++m) {
        REQUIRE(bracket_slot_count(m) == m * (m - 1) / 2);
        std::size_t s = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                REQUIRE(bracket_slot(i, j, m) == s);
                auto [a, b] = bracket_slot_pair(s, m);
                REQUIRE(a == i);
                REQUIRE(b == j);
                ++s;
            }
        REQUIRE_THROWS_AS(bracket_slot_pair(s, m), std::out_of_range);
    }
}

TEST_CASE("two generators give a free rank-one module") {
    auto ring = make_ring({"X1", "X2"}, {2, 3});
    AlgebraPresentation<Rational> alg{ring, {}, {}, {}};
    auto b = build_nprime(alg);
    REQUIRE(b.num_generators == 2);
    REQUIRE(b.presentation.free->rank == 1);
    REQUIRE(b.presentation.free->shifts == std::vector<long>{4});
    REQUIRE(b.presentation.relations.generators.empty());
}

TEST_CASE("three generators give the single koszul-type relation") {
    auto ring = make_ring({"X1", "X2", "X3"}, {3, 3, 3});
    AlgebraPresentation<Rational> alg{ring, {}, {}, {}};
    auto b = build_nprime(alg);
    REQUIRE(b.presentation.free->rank == 3);
    REQUIRE(b.presentation.free->shifts == std::vector<long>({5, 5, 5}));
    REQUIRE(b.presentation.relations.generators.size() == 1);

    const auto& F = b.presentation.free;
    auto expected = ModuleElement<Rational>::from_component(F, b.slot(0, 1),
                                                            var(ring, 2).scaled(3)) -
                    ModuleElement<Rational>::from_component(F, b.slot(0, 2),
                                                            var(ring, 1).scaled(3)) +
                    ModuleElement<Rational>::from_component(F, b.slot(1, 2),
                                                            var(ring, 0).scaled(3));
    REQUIRE((b.presentation.relations.generators[0] - expected).is_zero());

    // its concrete realization vanishes identically
    REQUIRE(kaehler_realize(alg, expected).is_zero());
}

TEST_CASE("segre instance has the expected shape") {
    auto ring = segre_ring();
    AlgebraPresentation<Rational> alg{ring, {segre_cubic(ring)}, {"S"}, {{4, 0}}};
    auto b = build_nprime(alg);

    REQUIRE(b.presentation.free->rank == 10);
    REQUIRE(b.presentation.free->shifts == std::vector<long>(10, 5));

    const auto& gens = b.presentation.relations.generators;
    REQUIRE(gens.size() == 25);
    std::map<long, int> by_degree;
    for (const auto& g : gens) ++by_degree[*g.degree()];
    REQUIRE(by_degree == std::map<long, int>({{8, 10}, {11, 5}, {14, 10}}));

    // every relation realizes to zero over the quotient ring
    auto zero_module = differential_relations(alg);
    auto gb = groebner(zero_module);
    for (const auto& g : gens) {
        auto image = kaehler_realize(alg, g);
        REQUIRE((image.is_zero() || is_member(image, gb)));
    }
}

TEST_CASE("random presentations produce well-defined relations") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<unsigned> weights;
        std::size_t m = 3 + trial % 2;
        for (std::size_t i = 0; i < m; ++i) weights.push_back(1 + rng() % 3);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < m; ++i) names.push_back("X" + std::to_string(i + 1));
        auto ring = make_ring(names, weights);

        std::vector<Polynomial<Rational>> rels;
        for (int r = 0; r < 1 + trial % 2; ++r) {
            auto p = random_isobaric(ring, 3 + static_cast<long>(rng() % 3), rng);
            if (!p.is_zero()) rels.push_back(p);
        }
        AlgebraPresentation<Rational> alg{ring, rels, {}, {}};
        auto b = build_nprime(alg);
        auto zero_module = differential_relations(alg);
        auto gb = groebner(zero_module);
        for (const auto& g : b.presentation.relations.generators) {
            auto image = kaehler_realize(alg, g);
            REQUIRE((image.is_zero() || is_member(image, gb)));
        }
    }
}

TEST_CASE("algebra presentation validation") {
    auto ring = segre_ring();
    auto S = segre_cubic(ring);

    // non-isobaric relation
    auto bad = S + var(ring, 0);
    REQUIRE_THROWS_AS((AlgebraPresentation<Rational>{ring, {bad}, {}, {}}.validate()),
                      std::invalid_argument);

    // dependent variable not involved in its relation
    auto cube = var(ring, 0).pow(3);
    REQUIRE_THROWS_AS((AlgebraPresentation<Rational>{ring, {cube}, {}, {{4, 0}}}.validate()),
                      std::invalid_argument);

    AlgebraPresentation<Rational> good{ring, {S}, {"S"}, {{4, 0}}};
    REQUIRE_NOTHROW(good.validate());
    REQUIRE(good.independent_vars() == std::vector<std::size_t>({0, 1, 2, 3}));
}

TEST_CASE("projection system holds for the segre syzygy") {
    auto ring = segre_ring();
    AlgebraPresentation<Rational> alg{ring, {segre_cubic(ring)}, {"S"}, {{4, 0}}};
    auto b = build_nprime(alg);

    // the relation derived from S in the first column
    const auto& rel = b.presentation.relations.generators[10];
    REQUIRE(*rel.degree() == 11);

    auto section = lemma13_project(alg, rel);
    REQUIRE(section.checks.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        REQUIRE(section.checks[j].name == "projection-j" + std::to_string(j + 1));
        REQUIRE(section.checks[j].ok());
    }
}

TEST_CASE("projection rejects non-syzygies") {
    auto ring = segre_ring();
    AlgebraPresentation<Rational> alg{ring, {segre_cubic(ring)}, {"S"}, {{4, 0}}};
    auto b = build_nprime(alg);
    auto e12 = ModuleElement<Rational>::basis_vector(b.presentation.free, 0);
    REQUIRE_THROWS_AS(lemma13_project(alg, e12), std::invalid_argument);
}

TEST_CASE("torsion certificate on a free presentation") {
    auto ring = make_ring({"X1", "X2", "X3"}, {3, 3, 3});
    AlgebraPresentation<Rational> alg{ring, {}, {}, {}};
    auto b = build_nprime(alg);
    auto section = prop14_certificate(b, alg, true);
    REQUIRE(section.checks.size() == 3);
    REQUIRE(section.ok());
}

TEST_CASE("torsion certificate detects a corrupted presentation") {
    auto ring = make_ring({"X1", "X2"}, {2, 3});
    AlgebraPresentation<Rational> alg{ring, {}, {}, {}};
    auto F = make_free_module(ring, 1, {4});
    auto torsion = ModuleElement<Rational>::from_component(F, 0, var(ring, 0));
    BracketModulePresentation<Rational> b{
        Presentation<Rational>(F, Submodule<Rational>(F, {torsion})), -1, 2};
    auto section = prop14_certificate(b, alg, true);
    REQUIRE_FALSE(section.ok());
}
