#ifndef GRMOD_RING_HPP
#define GRMOD_RING_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "grmod/field.hpp"

namespace grmod {

// Polynomial ring with a positive weight per variable.
struct GradedRing {
    std::vector<std::string> variable_names;
    std::vector<unsigned> weights;
    CoefficientField field;

    std::size_t nvars() const { return variable_names.size(); }

    bool operator==(const GradedRing&) const = default;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline RingPtr make_ring(std::vector<std::string> names, std::vector<unsigned> weights,
                         CoefficientField field = CoefficientField::rationals()) {
    if (names.size() != weights.size())
        throw std::invalid_argument("ring: name/weight count mismatch");
    if (names.empty())
        throw std::invalid_argument("ring: no variables");
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw std::invalid_argument("ring: duplicate variable " + n);
    unsigned maxw = 0;
    for (unsigned w : weights) {
        if (w < 1) throw std::invalid_argument("ring: weights must be >= 1");
        maxw = std::max(maxw, w);
    }
    if (field.kind == CoefficientField::Kind::prime && field.prime <= maxw)
        throw std::invalid_argument("ring: prime must exceed the largest weight");
    auto r = std::make_shared<GradedRing>();
    r->variable_names = std::move(names);
    r->weights = std::move(weights);
    r->field = field;
    return r;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument("ring mismatch");
}

struct Monomial {
    std::vector<unsigned> exponents;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<unsigned>(nvars, 0)}; }

    bool is_one() const {
        return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
    }

    long weighted_degree(const GradedRing& ring) const {
        long d = 0;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            d += static_cast<long>(ring.weights[i]) * exponents[i];
        return d;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > m.exponents[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
        return r;
    }

    // exact quotient; caller guarantees divisibility
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] -= b.exponents[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            r.exponents[i] = std::max(r.exponents[i], b.exponents[i]);
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            r.exponents[i] = std::min(r.exponents[i], b.exponents[i]);
        return r;
    }

    bool coprime(const Monomial& b) const {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > 0 && b.exponents[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic order on weighted degree.  Returns <0, 0, >0
// with "a larger than b" giving a positive result.
inline int compare_grevlex(const Monomial& a, const Monomial& b, const GradedRing& ring) {
    long da = a.weighted_degree(ring), db = b.weighted_degree(ring);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.exponents.size(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] > b.exponents[i] ? -1 : 1;
    }
    return 0;
}

// All monomials of the given weighted degree, in descending grevlex order.
inline void monomials_of_degree_rec(const GradedRing& ring, std::size_t var, long remaining,
                                    Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == ring.nvars()) {
        long w = ring.weights[var];
        if (remaining % w == 0) {
            cur.exponents[var] = static_cast<unsigned>(remaining / w);
            out.push_back(cur);
            cur.exponents[var] = 0;
        }
        return;
    }
    long w = ring.weights[var];
    for (long e = remaining / w; e >= 0; --e) {
        cur.exponents[var] = static_cast<unsigned>(e);
        monomials_of_degree_rec(ring, var + 1, remaining - e * w, cur, out);
    }
    cur.exponents[var] = 0;
}

inline std::vector<Monomial> monomials_of_degree(const GradedRing& ring, long degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur = Monomial::one(ring.nvars());
    monomials_of_degree_rec(ring, 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
        return compare_grevlex(a, b, ring) > 0;
    });
    return out;
}

} // namespace grmod

#endif
