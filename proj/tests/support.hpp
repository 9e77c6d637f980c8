#ifndef GRMOD_TESTS_SUPPORT_HPP
#define GRMOD_TESTS_SUPPORT_HPP

#include <random>

#include "grmod/polynomial.hpp"

namespace grmod::testing {

inline RingPtr segre_ring() {
    return make_ring({"T1", "T2", "T3", "T4", "T5"}, {3, 3, 3, 3, 3});
}

template <class K = Rational>
Polynomial<K> var(const RingPtr& ring, std::size_t i) {
    return Polynomial<K>::variable(ring, i);
}

template <class K = Rational>
Polynomial<K> segre_cubic(const RingPtr& ring) {
    Polynomial<K> sum(ring);
    Polynomial<K> cubes(ring);
    for (std::size_t i = 0; i < 5; ++i) {
        sum = sum + var<K>(ring, i);
        cubes = cubes + var<K>(ring, i).pow(3);
    }
    return cubes - sum.pow(3);
}

// Random isobaric polynomial of the given weighted degree (possibly zero when
// no monomial has that degree).
template <class K = Rational>
Polynomial<K> random_isobaric(const RingPtr& ring, long degree, std::mt19937& rng) {
    auto monos = monomials_of_degree(*ring, degree);
    Polynomial<K> p(ring);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    for (const auto& m : monos) {
        if (pick(rng) != 0) continue;
        int c = coeff(rng);
        if (c == 0) continue;
        p = p + Polynomial<K>::term(ring, m, FieldOps<K>::from_int(c, ring->field));
    }
    if (p.is_zero() && !monos.empty())
        p = Polynomial<K>::term(ring, monos.front(), FieldOps<K>::from_int(1, ring->field));
    return p;
}

} // namespace grmod::testing

#endif
