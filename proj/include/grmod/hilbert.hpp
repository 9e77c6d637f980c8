#ifndef GRMOD_HILBERT_HPP
#define GRMOD_HILBERT_HPP

#include <map>
#include <sstream>

#include "grmod/groebner.hpp"

namespace grmod {

// Dense integer polynomial in the series variable t, coefficient at index d.
using IntPoly = std::vector<long long>;

inline void ip_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ip_trim(r);
    return r;
}

inline IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ip_trim(r);
    return r;
}

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ip_trim(r);
    return r;
}

inline IntPoly ip_shift(const IntPoly& a, long k) {
    if (a.empty()) return {};
    if (k < 0) {
        for (long i = 0; i < std::min<long>(-k, static_cast<long>(a.size())); ++i)
            if (a[i] != 0) throw std::domain_error("series shift below degree zero");
        if (static_cast<long>(a.size()) <= -k) return {};
        return IntPoly(a.begin() - k, a.end());
    }
    IntPoly r(a.size() + k, 0);
    std::copy(a.begin(), a.end(), r.begin() + k);
    return r;
}

// 1 - t^w
inline IntPoly ip_one_minus_tw(unsigned w) {
    IntPoly r(w + 1, 0);
    r[0] = 1;
    r[w] = -1;
    return r;
}

inline std::optional<IntPoly> ip_divide_exact(const IntPoly& num, const IntPoly& den) {
    IntPoly n = num, d = den;
    ip_trim(n);
    ip_trim(d);
    if (d.empty()) throw std::domain_error("division by zero polynomial");
    if (n.empty()) return IntPoly{};
    if (n.size() < d.size()) return std::nullopt;
    IntPoly q(n.size() - d.size() + 1, 0);
    long long lead = d.back();
    for (std::size_t i = n.size(); i-- >= d.size();) {
        long long c = n[i];
        if (c == 0) continue;
        if (c % lead != 0) return std::nullopt;
        long long qi = c / lead;
        q[i - d.size() + 1] = qi;
        for (std::size_t j = 0; j < d.size(); ++j) n[i - d.size() + 1 + j] -= qi * d[j];
        if (i + 1 == d.size()) break;
    }
    ip_trim(n);
    if (!n.empty()) return std::nullopt;
    return q;
}

inline std::string ip_str(const IntPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < p.size(); ++d) {
        long long c = p[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        long long a = c < 0 ? -c : c;
        if (a != 1 || d == 0) os << a;
        if (d > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

// Rational generating function  numerator / prod (1 - t^w)^mult.
struct HilbertSeries {
    IntPoly numerator;
    std::vector<std::pair<unsigned, unsigned>> denominator_factors;

    // cancel (1 - t^w) factors as long as the numerator stays polynomial
    HilbertSeries normalized() const {
        HilbertSeries s = *this;
        std::vector<std::pair<unsigned, unsigned>> out;
        for (auto [w, mult] : s.denominator_factors) {
            while (mult > 0) {
                auto q = ip_divide_exact(s.numerator, ip_one_minus_tw(w));
                if (!q) break;
                s.numerator = std::move(*q);
                --mult;
            }
            if (mult > 0) out.emplace_back(w, mult);
        }
        s.denominator_factors = std::move(out);
        return s;
    }

    HilbertSeries shifted(long k) const {
        HilbertSeries s = *this;
        s.numerator = ip_shift(s.numerator, k);
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(" << ip_str(numerator) << ")";
        for (auto [w, mult] : denominator_factors) {
            os << "/(1 - t^" << w << ")";
            if (mult > 1) os << "^" << mult;
        }
        return os.str();
    }

    bool operator==(const HilbertSeries&) const = default;
};

inline HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.denominator_factors != b.denominator_factors)
        throw std::invalid_argument("series_sub: denominator mismatch");
    return HilbertSeries{ip_sub(a.numerator, b.numerator), a.denominator_factors};
}

struct SeriesExpansion {
    std::vector<std::pair<long, long long>> coefficients; // nonzero (degree, dim)
    long bound = 0;

    long long at(long degree) const {
        for (const auto& [d, c] : coefficients)
            if (d == degree) return c;
        return 0;
    }

    bool operator==(const SeriesExpansion&) const = default;
};

inline SeriesExpansion expand(const HilbertSeries& series, long bound) {
    if (bound < 0) throw std::invalid_argument("expand: negative bound");
    std::vector<long long> c(bound + 1, 0);
    for (std::size_t d = 0; d < series.numerator.size() && d <= static_cast<std::size_t>(bound); ++d)
        c[d] = series.numerator[d];
    for (auto [w, mult] : series.denominator_factors)
        for (unsigned rep = 0; rep < mult; ++rep)
            for (long k = w; k <= bound; ++k) c[k] += c[k - w];
    SeriesExpansion out;
    out.bound = bound;
    for (long d = 0; d <= bound; ++d)
        if (c[d] != 0) out.coefficients.emplace_back(d, c[d]);
    return out;
}

// The polynomial q with series = q / (1 - t^w)^mult, when it exists.
inline std::optional<IntPoly> numerator_over(const HilbertSeries& series, unsigned w, unsigned mult) {
    IntPoly n = series.numerator;
    IntPoly target = ip_one_minus_tw(w);
    for (unsigned rep = 0; rep < mult; ++rep) n = ip_mul(n, target);
    for (auto [fw, fm] : series.denominator_factors)
        for (unsigned rep = 0; rep < fm; ++rep) {
            auto q = ip_divide_exact(n, ip_one_minus_tw(fw));
            if (!q) return std::nullopt;
            n = std::move(*q);
        }
    return n;
}

namespace detail {

inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (!(h == g) && h.divides(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

// Numerator of A/I over the full denominator, by pivot decomposition on a
// shared variable.  Memoized on the minimal generator set.
inline IntPoly monomial_ideal_numerator(std::vector<Monomial> gens, const GradedRing& ring,
                                        std::map<std::vector<std::vector<unsigned>>, IntPoly>& memo) {
    gens = minimal_monomials(std::move(gens));
    if (gens.empty()) return IntPoly{1};
    if (gens.front().is_one()) return IntPoly{};

    std::vector<std::vector<unsigned>> key;
    key.reserve(gens.size());
    for (const auto& g : gens) key.push_back(g.exponents);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // base case: pairwise coprime pure powers
    bool pure = true;
    for (const auto& g : gens) {
        int support = 0;
        for (unsigned e : g.exponents)
            if (e > 0) ++support;
        if (support != 1) { pure = false; break; }
    }
    IntPoly result;
    if (pure) {
        result = IntPoly{1};
        for (const auto& g : gens)
            result = ip_mul(result, ip_one_minus_tw(static_cast<unsigned>(g.weighted_degree(ring))));
    } else {
        // pivot on the variable most shared among mixed-support generators,
        // raised to the median exponent seen there; both branches then shrink
        // the mixed generators, so the recursion depth stays moderate.
        auto mixed = [&](const Monomial& g) {
            int support = 0;
            for (unsigned e : g.exponents)
                if (e > 0) ++support;
            return support >= 2;
        };
        std::size_t best_var = 0, best_count = 0;
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            std::size_t count = 0;
            for (const auto& g : gens)
                if (mixed(g) && g.exponents[v] > 0) ++count;
            if (count > best_count) { best_count = count; best_var = v; }
        }
        std::vector<unsigned> exps;
        for (const auto& g : gens)
            if (mixed(g) && g.exponents[best_var] > 0) exps.push_back(g.exponents[best_var]);
        std::sort(exps.begin(), exps.end());
        Monomial pivot = Monomial::one(ring.nvars());
        pivot.exponents[best_var] = exps[exps.size() / 2];
        std::vector<Monomial> plus = gens;
        plus.push_back(pivot);
        std::vector<Monomial> quot;
        for (const auto& g : gens) quot.push_back(g / gcd(g, pivot));
        IntPoly a = monomial_ideal_numerator(std::move(plus), ring, memo);
        IntPoly b = monomial_ideal_numerator(std::move(quot), ring, memo);
        result = ip_add(a, ip_shift(b, pivot.weighted_degree(ring)));
    }
    memo[key] = result;
    return result;
}

} // namespace detail

template <class K>
HilbertSeries hilbert_from_groebner(const FreeModulePtr& free, const GroebnerBasis<K>& gb) {
    std::vector<std::vector<Monomial>> lead_by_pos(free->rank);
    for (const auto& g : gb.elements) lead_by_pos[g.leading().pos].push_back(g.leading().mono);

    std::map<std::vector<std::vector<unsigned>>, IntPoly> memo;
    IntPoly numerator;
    for (std::size_t j = 0; j < free->rank; ++j) {
        IntPoly nj = detail::monomial_ideal_numerator(lead_by_pos[j], *free->ring, memo);
        numerator = ip_add(numerator, ip_shift(nj, free->shifts[j]));
    }
    std::map<unsigned, unsigned> weight_mult;
    for (unsigned w : free->ring->weights) ++weight_mult[w];
    HilbertSeries s;
    s.numerator = std::move(numerator);
    for (auto [w, mult] : weight_mult) s.denominator_factors.emplace_back(w, mult);
    return s;
}

// Hilbert series of free/relations via the leading module of the reduced
// basis.  The result keeps the full ring denominator; normalized() cancels.
template <class K>
HilbertSeries hilbert_of_presentation(const Presentation<K>& p) {
    return hilbert_from_groebner(p.free, groebner(p.relations));
}

} // namespace grmod

#endif
