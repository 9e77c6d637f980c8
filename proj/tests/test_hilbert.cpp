#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "grmod/bracket.hpp"
#include "grmod/hilbert.hpp"
#include "grmod/oracle.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

TEST_CASE("integer polynomial helpers") {
    IntPoly a{1, 0, -1};          // 1 - t^2
    IntPoly b{1, 1};              // 1 + t
    REQUIRE(ip_mul(a, b) == IntPoly({1, 1, -1, -1}));
    REQUIRE(*ip_divide_exact(a, b) == IntPoly({1, -1}));
    REQUIRE_FALSE(ip_divide_exact(IntPoly{1, 1, 1}, a).has_value());
    REQUIRE(ip_shift(IntPoly{0, 0, 1}, -2) == IntPoly({1}));
    REQUIRE_THROWS_AS(ip_shift(IntPoly{1}, -1), std::domain_error);
    REQUIRE(ip_str(IntPoly{11, 0, 0, 0, 0, 8}) == "11 + 8*t^5");
}

TEST_CASE("free module over the weighted ring") {
    auto ring = segre_ring();
    auto F = make_free_module(ring, 1);
    Presentation<Rational> pres(F, Submodule<Rational>(F, {}));
    auto series = hilbert_of_presentation(pres);
    REQUIRE(series.numerator == IntPoly({1}));
    REQUIRE(series.denominator_factors ==
            std::vector<std::pair<unsigned, unsigned>>({{3, 5}}));

    auto exp = expand(series, 15);
    for (long d = 0; d <= 15; ++d)
        REQUIRE(exp.at(d) == static_cast<long long>(monomials_of_degree(*ring, d).size()));
}

TEST_CASE("hypersurface quotient") {
    auto ring = segre_ring();
    auto F = make_free_module(ring, 1);
    auto S = segre_cubic(ring);
    Presentation<Rational> pres(F, Submodule<Rational>(F, {ModuleElement<Rational>::from_component(F, 0, S)}));
    auto series = hilbert_of_presentation(pres);

    auto num = numerator_over(series, 3, 5);
    REQUIRE(num.has_value());
    IntPoly expected(10, 0);
    expected[0] = 1;
    expected[9] = -1; // 1 - t^9
    REQUIRE(*num == expected);

    auto normalized = series.normalized();
    REQUIRE(normalized.numerator == IntPoly({1, 0, 0, 1, 0, 0, 1})); // 1 + t^3 + t^6
    REQUIRE(normalized.denominator_factors ==
            std::vector<std::pair<unsigned, unsigned>>({{3, 4}}));

    auto exp = expand(series, 12);
    REQUIRE(exp.at(0) == 1);
    REQUIRE(exp.at(3) == 5);
    REQUIRE(exp.at(9) == 34);
    auto oracle = dims_oracle(pres, 12);
    REQUIRE(oracle == exp);
}

TEST_CASE("weighted example with mixed weights") {
    auto ring = make_ring({"X", "Y"}, {2, 3});
    auto F = make_free_module(ring, 1);
    Presentation<Rational> pres(F, Submodule<Rational>(F, {}));
    auto series = hilbert_of_presentation(pres);
    auto exp = expand(series, 12);
    // partitions of d into parts 2 and 3
    REQUIRE(exp.at(1) == 0);
    REQUIRE(exp.at(6) == 2);
    REQUIRE(exp.at(12) == 3);
    REQUIRE(dims_oracle(pres, 12) == exp);
}

TEST_CASE("bracket module hilbert function") {
    auto ring = segre_ring();
    AlgebraPresentation<Rational> alg{ring, {segre_cubic(ring)}, {"S"}, {{4, 0}}};
    auto b = build_nprime(alg);
    auto series = hilbert_of_presentation(b.presentation);

    // HS = (10 t^5 - t^14) / (1 - t^3)^4, cross-checked against the sparse
    // linear-algebra oracle and an independent rational-elimination script.
    auto num = numerator_over(series, 3, 4);
    REQUIRE(num.has_value());
    IntPoly expected(15, 0);
    expected[5] = 10;
    expected[14] = -1;
    REQUIRE(*num == expected);

    // The series is not polynomial over (1 - t^3)^3: the module has depth 4.
    REQUIRE_FALSE(numerator_over(series, 3, 3).has_value());

    auto exp = expand(series, 20);
    REQUIRE(exp.at(5) == 10);
    REQUIRE(exp.at(8) == 40);
    REQUIRE(exp.at(11) == 100);
    REQUIRE(exp.at(14) == 199);
    REQUIRE(exp.at(17) == 346);
    REQUIRE(exp.at(20) == 550);
    for (long d = 0; d <= 20; ++d)
        if ((d - 5) % 3 != 0 || d < 5) REQUIRE(exp.at(d) == 0);

    auto oracle = dims_oracle(b.presentation, 14, 4);
    REQUIRE(oracle == expand(series, 14));
}

TEST_CASE("oracle agrees over a prime field") {
    auto field = CoefficientField::prime_field(10007);
    auto ring = make_ring({"T1", "T2", "T3", "T4", "T5"}, {3, 3, 3, 3, 3}, field);
    auto F = make_free_module(ring, 1);
    auto S = segre_cubic<Fp>(ring);
    Presentation<Fp> pres(F, Submodule<Fp>(F, {ModuleElement<Fp>::from_component(F, 0, S)}));
    auto series = hilbert_of_presentation(pres);
    REQUIRE(dims_oracle(pres, 12, 2) == expand(series, 12));
}

TEST_CASE("hilbert numerator is invariant under generator order") {
    auto ring = segre_ring();
    AlgebraPresentation<Rational> alg{ring, {segre_cubic(ring)}, {"S"}, {{4, 0}}};
    auto b = build_nprime(alg);
    auto reference = hilbert_of_presentation(b.presentation);

    auto gens = b.presentation.relations.generators;
    std::mt19937 rng(7);
    std::shuffle(gens.begin(), gens.end(), rng);
    Presentation<Rational> shuffled(b.presentation.free,
                                    Submodule<Rational>(b.presentation.free, gens));
    REQUIRE(hilbert_of_presentation(shuffled) == reference);
}

TEST_CASE("oracle thread count does not change the result") {
    auto ring = segre_ring();
    auto F = make_free_module(ring, 1);
    auto S = segre_cubic(ring);
    Presentation<Rational> pres(F, Submodule<Rational>(F, {ModuleElement<Rational>::from_component(F, 0, S)}));
    auto one = dims_oracle(pres, 15, 1);
    auto four = dims_oracle(pres, 15, 4);
    REQUIRE(one == four);
}

TEST_CASE("oracle respects the column budget") {
    auto ring = segre_ring();
    auto F = make_free_module(ring, 1);
    Presentation<Rational> pres(F, Submodule<Rational>(F, {}));
    REQUIRE_THROWS_AS(dims_oracle(pres, 15, 1, 10), std::runtime_error);
}
