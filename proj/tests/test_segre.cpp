#include <catch2/catch_amalgamated.hpp>

#include "grmod/segre.hpp"
#include "support.hpp"

using namespace grmod;
using namespace grmod::testing;

TEST_CASE("standard instance invariants") {
    auto data = SegreData<Rational>::standard();
    const auto& S = data.algebra.relations.front();
    REQUIRE(S == segre_cubic(data.algebra.ring));
    REQUIRE(S.is_isobaric());
    REQUIRE(*S.weighted_degree() == 9);
    REQUIRE(euler_check(S));

    REQUIRE(data.partials.size() == 5);
    for (std::size_t v = 0; v < 5; ++v) REQUIRE(data.partials[v] == S.derivative(v));

    const auto& w = data.special_vector;
    REQUIRE(w.is_homogeneous());
    REQUIRE(*w.degree() == 11);
    for (std::size_t s = 0; s < 10; ++s) {
        auto [i, j] = bracket_slot_pair(s, 5);
        bool expected_nonzero = i == 0; // only the e_1j slots carry w
        REQUIRE(w.component(s).is_zero() != expected_nonzero);
    }
    // first slot: 2T1T3 + T3^2 + ... (nine terms)
    REQUIRE(w.component(bracket_slot(0, 1, 5)).terms().size() == 9);
}

TEST_CASE("section-1 identity suite") {
    auto data = SegreData<Rational>::standard();
    SuiteConfig config;
    config.random_trials = 100;
    auto section = verify_identities(data, config);
    for (const auto& check : section.checks) {
        INFO(check.name);
        REQUIRE(check.ok());
    }
}

TEST_CASE("special vector memberships") {
    auto data = SegreData<Rational>::standard();
    MRepresentation<Rational> stub{data.relations(), -6};
    auto section = verify_lemma56(data, stub);

    auto find = [&](const std::string& name) -> const CheckResult& {
        for (const auto& c : section.checks)
            if (c.name == name) return c;
        FAIL("missing check " + name);
        return section.checks.front();
    };
    REQUIRE(find("w-in-T1F+U").pass);
    REQUIRE_FALSE(find("w-in-T2F+U").pass);          // refuted membership
    REQUIRE(find("w-not-in-T1T2F+U").pass);
    REQUIRE(find("no-witness-certificate").pass);    // joint unsatisfiability
    REQUIRE_FALSE(find("lift-exists").pass);
    REQUIRE(section.ok());
}

TEST_CASE("report rendering is deterministic") {
    auto data = SegreData<Rational>::standard();
    SuiteConfig config;
    config.random_trials = 20;
    auto a = verify_identities(data, config);
    auto b = verify_identities(data, config);
    Report ra, rb;
    ra.sections.push_back(a);
    rb.sections.push_back(b);
    std::ostringstream sa, sb;
    ra.render_kv(sa);
    rb.render_kv(sb);
    REQUIRE(sa.str() == sb.str());
}
