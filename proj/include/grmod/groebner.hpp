#ifndef GRMOD_GROEBNER_HPP
#define GRMOD_GROEBNER_HPP

#include <limits>
#include <optional>

#include "grmod/module.hpp"

namespace grmod {

namespace detail {

template <class K>
std::optional<std::size_t> single_position(const ModuleElement<K>& g) {
    std::size_t p = g.terms().front().pos;
    for (const auto& e : g.terms())
        if (e.pos != p) return std::nullopt;
    return p;
}

// Full normal form of h against the (monic) reducers in basis.  by_pos maps
// position to the indices of reducers whose leading term lives there.
template <class K>
ModuleElement<K> reduce_full(ModuleElement<K> h, const std::vector<ModuleElement<K>>& basis,
                             const std::vector<std::vector<std::size_t>>& by_pos) {
    std::vector<typename ModuleElement<K>::Entry> done;
    while (!h.is_zero()) {
        const auto& lt = h.leading();
        const ModuleElement<K>* reducer = nullptr;
        if (lt.pos < by_pos.size()) {
            for (std::size_t idx : by_pos[lt.pos]) {
                if (basis[idx].leading().mono.divides(lt.mono)) {
                    reducer = &basis[idx];
                    break;
                }
            }
        }
        if (reducer) {
            h = h - reducer->scaled(lt.mono / reducer->leading().mono, lt.coeff);
        } else {
            done.push_back(lt);
            h.pop_leading();
        }
    }
    return ModuleElement<K>::from_entries(h.ambient(), std::move(done), h.order_split());
}

template <class K>
std::vector<std::vector<std::size_t>> index_by_position(const std::vector<ModuleElement<K>>& basis,
                                                        std::size_t rank) {
    std::vector<std::vector<std::size_t>> by_pos(rank);
    for (std::size_t i = 0; i < basis.size(); ++i)
        by_pos[basis[i].leading().pos].push_back(i);
    return by_pos;
}

template <class K>
ModuleElement<K> make_monic(const ModuleElement<K>& g) {
    const K& lc = g.leading().coeff;
    K inv = FieldOps<K>::from_int(1, g.ambient()->ring->field) / lc;
    return g.scaled(inv);
}

// Buchberger with Gebauer-Moeller pair pruning.  Input generators must be
// homogeneous; the result is the unique reduced basis for the order with the
// given block split, sorted ascending by leading term.
template <class K>
std::vector<ModuleElement<K>> buchberger(const FreeModulePtr& ambient,
                                         const std::vector<ModuleElement<K>>& input,
                                         std::size_t split) {
    ModuleOrder order{ambient.get(), split};

    std::vector<ModuleElement<K>> gens;
    for (const auto& g : input) {
        if (g.is_zero()) continue;
        gens.push_back(make_monic(g.with_order(split)));
    }
    std::sort(gens.begin(), gens.end(), [&order](const auto& a, const auto& b) {
        const auto& la = a.leading();
        const auto& lb = b.leading();
        int c = order.compare(la.pos, la.mono, lb.pos, lb.mono);
        if (c != 0) return c < 0;
        return false;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<ModuleElement<K>> G;
    std::vector<std::optional<std::size_t>> ideal_pos; // single-position support
    struct Pair {
        std::size_t i, j;
        Monomial lcm_mono;
        std::size_t pos;
        bool alive = true;
    };
    std::vector<Pair> pairs;

    auto lead = [&G](std::size_t i) -> const auto& { return G[i].leading(); };

    auto add_element = [&](ModuleElement<K> h) {
        std::size_t t = G.size();
        G.push_back(std::move(h));
        ideal_pos.push_back(single_position(G[t]));
        const auto& lt = lead(t);

        // candidate pairs with matching leading position
        struct Cand { std::size_t i; Monomial l; };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < t; ++i)
            if (lead(i).pos == lt.pos)
                cands.push_back(Cand{i, lcm(lead(i).mono, lt.mono)});

        // prune old pairs (chain criterion)
        for (auto& p : pairs) {
            if (!p.alive || p.pos != lt.pos) continue;
            if (!lt.mono.divides(p.lcm_mono)) continue;
            Monomial li = lcm(lead(p.i).mono, lt.mono);
            Monomial lj = lcm(lead(p.j).mono, lt.mono);
            if (!(li == p.lcm_mono) && !(lj == p.lcm_mono)) p.alive = false;
        }

        // keep candidates whose lcm is not divisible by a kept smaller lcm
        std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
            int c = compare_grevlex(a.l, b.l, *ambient->ring);
            if (c != 0) return c < 0;
            return a.i < b.i;
        });
        std::vector<Cand> kept;
        for (const auto& c : cands) {
            bool redundant = false;
            for (const auto& k : kept)
                if (k.l.divides(c.l)) { redundant = true; break; }
            if (!redundant) kept.push_back(c);
        }
        for (const auto& c : kept)
            pairs.push_back(Pair{c.i, t, c.l, lt.pos, true});
    };

    for (auto& g : gens) add_element(std::move(g));

    auto pair_less = [&](const Pair& a, const Pair& b) {
        long da = a.lcm_mono.weighted_degree(*ambient->ring) + ambient->shifts[a.pos];
        long db = b.lcm_mono.weighted_degree(*ambient->ring) + ambient->shifts[b.pos];
        if (da != db) return da < db;
        int c = order.compare(a.pos, a.lcm_mono, b.pos, b.lcm_mono);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    while (true) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (!pairs[k].alive) continue;
            if (best == std::numeric_limits<std::size_t>::max() || pair_less(pairs[k], pairs[best]))
                best = k;
        }
        if (best == std::numeric_limits<std::size_t>::max()) break;
        Pair p = pairs[best];
        pairs[best].alive = false;

        // product criterion, valid only in the genuinely polynomial situation
        if (ideal_pos[p.i] && ideal_pos[p.j] && *ideal_pos[p.i] == *ideal_pos[p.j] &&
            lead(p.i).mono.coprime(lead(p.j).mono))
            continue;

        ModuleElement<K> s = G[p.i].scaled(p.lcm_mono / lead(p.i).mono,
                                           FieldOps<K>::from_int(1, ambient->ring->field)) -
                             G[p.j].scaled(p.lcm_mono / lead(p.j).mono,
                                           FieldOps<K>::from_int(1, ambient->ring->field));
        auto by_pos = index_by_position(G, ambient->rank);
        ModuleElement<K> r = reduce_full(std::move(s), G, by_pos);
        if (!r.is_zero()) add_element(make_monic(r));
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<std::size_t> idx(G.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto& la = lead(a);
        const auto& lb = lead(b);
        int c = order.compare(la.pos, la.mono, lb.pos, lb.mono);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<ModuleElement<K>> minimal;
    for (std::size_t i : idx) {
        const auto& lt = lead(i);
        bool redundant = false;
        for (const auto& m : minimal) {
            const auto& lm = m.leading();
            if (lm.pos == lt.pos && lm.mono.divides(lt.mono)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // tail reduction to the reduced basis
    std::vector<ModuleElement<K>> reduced = minimal;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModuleElement<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto by_pos = index_by_position(others, ambient->rank);
        reduced[i] = reduce_full(minimal[i], others, by_pos);
    }
    std::sort(reduced.begin(), reduced.end(), [&order](const auto& a, const auto& b) {
        const auto& la = a.leading();
        const auto& lb = b.leading();
        return order.compare(la.pos, la.mono, lb.pos, lb.mono) < 0;
    });
    return reduced;
}

} // namespace detail

template <class K>
GroebnerBasis<K> groebner(const Submodule<K>& sub) {
    GroebnerBasis<K> gb;
    gb.ambient = sub.ambient;
    gb.block_split = sub.ambient->rank;
    gb.elements = detail::buchberger(sub.ambient, sub.generators, gb.block_split);
    gb.reduced = true;
    return gb;
}

template <class K>
ModuleElement<K> normal_form(const ModuleElement<K>& v, const GroebnerBasis<K>& gb) {
    require_same_ambient(v.ambient(), gb.ambient);
    auto by_pos = detail::index_by_position(gb.elements, gb.ambient->rank);
    return detail::reduce_full(v.with_order(gb.block_split), gb.elements, by_pos)
        .with_order(v.order_split());
}

template <class K>
bool is_member(const ModuleElement<K>& v, const GroebnerBasis<K>& gb) {
    return normal_form(v, gb).is_zero();
}

template <class K>
bool is_member(const ModuleElement<K>& v, const Submodule<K>& sub) {
    require_same_ambient(v.ambient(), sub.ambient);
    return is_member(v, groebner(sub));
}

// Generating set of { (s_1..s_r) : sum s_i g_i = 0 }, living in a fresh free
// module whose shifts are the generator degrees.
template <class K>
Submodule<K> syzygy_basis(const std::vector<ModuleElement<K>>& gens) {
    if (gens.empty())
        throw std::invalid_argument("syzygy_basis: no generators");
    FreeModulePtr ambient = gens.front().ambient();
    std::size_t m = ambient->rank, r = gens.size();
    std::vector<long> shifts = ambient->shifts;
    for (const auto& g : gens) {
        require_same_ambient(ambient, g.ambient());
        if (g.is_zero()) throw std::invalid_argument("syzygy_basis: zero generator");
        auto d = g.degree();
        if (!d) throw std::invalid_argument("syzygy_basis: heterogeneous generator");
        shifts.push_back(*d);
    }
    FreeModulePtr big = make_free_module(ambient->ring, m + r, shifts);
    Monomial one = Monomial::one(ambient->ring->nvars());
    K unit = FieldOps<K>::from_int(1, ambient->ring->field);

    std::vector<ModuleElement<K>> aug;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<typename ModuleElement<K>::Entry> es;
        for (const auto& e : gens[i].terms()) es.push_back({e.pos, e.mono, e.coeff});
        es.push_back({m + i, one, unit});
        aug.push_back(ModuleElement<K>::from_entries(big, std::move(es), m));
    }
    auto basis = detail::buchberger(big, aug, m);

    FreeModulePtr syz_ambient = make_free_module(ambient->ring, r,
                                                 std::vector<long>(shifts.begin() + m, shifts.end()));
    std::vector<ModuleElement<K>> syz;
    for (const auto& b : basis) {
        bool pure = true;
        for (const auto& e : b.terms())
            if (e.pos < m) { pure = false; break; }
        if (!pure) continue;
        std::vector<typename ModuleElement<K>::Entry> es;
        for (const auto& e : b.terms()) es.push_back({e.pos - m, e.mono, e.coeff});
        syz.push_back(ModuleElement<K>::from_entries(syz_ambient, std::move(es),
                                                     syz_ambient->rank));
    }
    return Submodule<K>(syz_ambient, std::move(syz));
}

// Canonical generators (the reduced basis) of the span of the given elements.
template <class K>
Submodule<K> canonical_span(const FreeModulePtr& ambient, std::vector<ModuleElement<K>> gens) {
    Submodule<K> raw(ambient, std::move(gens));
    auto gb = groebner(raw);
    return Submodule<K>(ambient, std::move(gb.elements));
}

template <class K>
Submodule<K> intersect(const Submodule<K>& a, const Submodule<K>& b) {
    require_same_ambient(a.ambient, b.ambient);
    if (a.generators.empty() || b.generators.empty())
        return Submodule<K>(a.ambient, {});
    std::vector<ModuleElement<K>> all = a.generators;
    all.insert(all.end(), b.generators.begin(), b.generators.end());
    Submodule<K> syz = syzygy_basis(all);
    std::vector<ModuleElement<K>> gens;
    for (const auto& s : syz.generators) {
        ModuleElement<K> v = ModuleElement<K>::zero(a.ambient);
        for (std::size_t i = 0; i < a.generators.size(); ++i)
            v = v + s.component(i) * a.generators[i];
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return canonical_span(a.ambient, std::move(gens));
}

// Submodule of all f on which multiplication lands in sub:  { x : f x in sub }.
template <class K>
Submodule<K> colon(const Submodule<K>& sub, const Polynomial<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("colon: zero divisor polynomial");
    if (!f.is_isobaric()) throw std::invalid_argument("colon: divisor not isobaric");
    const FreeModulePtr& F = sub.ambient;
    std::vector<ModuleElement<K>> ffree;
    for (std::size_t j = 0; j < F->rank; ++j)
        ffree.push_back(ModuleElement<K>::from_component(F, j, f));
    Submodule<K> inter = intersect(sub, Submodule<K>(F, std::move(ffree)));
    std::vector<ModuleElement<K>> gens;
    for (const auto& g : inter.generators) {
        std::vector<Polynomial<K>> comps;
        for (std::size_t j = 0; j < F->rank; ++j) {
            auto q = g.component(j).exact_divide(f);
            if (!q) throw std::logic_error("colon: inexact component division");
            comps.push_back(std::move(*q));
        }
        gens.push_back(ModuleElement<K>::from_components(F, comps));
    }
    return canonical_span(F, std::move(gens));
}

// Some v with f v = w modulo rel, when w lies in f F + rel; the returned
// representative is the normal form against rel.
template <class K>
std::optional<ModuleElement<K>> quotient_divide(const ModuleElement<K>& w, const Polynomial<K>& f,
                                                const Submodule<K>& rel) {
    if (f.is_zero()) throw std::invalid_argument("quotient_divide: zero divisor");
    auto fdeg = f.weighted_degree();
    if (!fdeg) throw std::invalid_argument("quotient_divide: divisor not isobaric");
    const FreeModulePtr& F = w.ambient();
    if (rel.ambient) require_same_ambient(F, rel.ambient);
    if (w.is_zero()) return ModuleElement<K>::zero(F);
    if (!w.is_homogeneous()) throw std::invalid_argument("quotient_divide: w not homogeneous");

    std::size_t m = F->rank;
    std::vector<long> shifts = F->shifts;
    for (std::size_t j = 0; j < m; ++j) shifts.push_back(F->shifts[j] + *fdeg);
    FreeModulePtr big = make_free_module(F->ring, 2 * m, shifts);
    Monomial one = Monomial::one(F->ring->nvars());
    K unit = FieldOps<K>::from_int(1, F->ring->field);

    std::vector<ModuleElement<K>> aug;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<typename ModuleElement<K>::Entry> es;
        for (const auto& [mo, c] : f.terms()) es.push_back({j, mo, c});
        es.push_back({m + j, one, unit});
        aug.push_back(ModuleElement<K>::from_entries(big, std::move(es), m));
    }
    for (const auto& g : rel.generators) {
        std::vector<typename ModuleElement<K>::Entry> es;
        for (const auto& e : g.terms()) es.push_back({e.pos, e.mono, e.coeff});
        aug.push_back(ModuleElement<K>::from_entries(big, std::move(es), m));
    }
    auto basis = detail::buchberger(big, aug, m);

    // lift w and reduce its F-block; reducers all have leading term there
    std::vector<typename ModuleElement<K>::Entry> wes;
    for (const auto& e : w.terms()) wes.push_back({e.pos, e.mono, e.coeff});
    ModuleElement<K> h = ModuleElement<K>::from_entries(big, std::move(wes), m);
    std::vector<ModuleElement<K>> block1;
    for (auto& b : basis)
        if (b.leading().pos < m) block1.push_back(std::move(b));
    auto by_pos = detail::index_by_position(block1, big->rank);
    while (!h.is_zero() && h.leading().pos < m) {
        const auto& lt = h.leading();
        const ModuleElement<K>* reducer = nullptr;
        for (std::size_t idx : by_pos[lt.pos])
            if (block1[idx].leading().mono.divides(lt.mono)) { reducer = &block1[idx]; break; }
        if (!reducer) return std::nullopt;
        h = h - reducer->scaled(lt.mono / reducer->leading().mono, lt.coeff);
    }
    std::vector<typename ModuleElement<K>::Entry> ves;
    for (const auto& e : h.terms()) ves.push_back({e.pos - m, e.mono, -e.coeff});
    ModuleElement<K> v = ModuleElement<K>::from_entries(F, std::move(ves), F->rank);
    if (!rel.generators.empty()) v = normal_form(v, groebner(rel));
    return v;
}

template <class K>
bool submodules_equal(const Submodule<K>& a, const Submodule<K>& b) {
    require_same_ambient(a.ambient, b.ambient);
    return groebner(a).elements == groebner(b).elements;
}

template <class K>
bool mult_injective(const Presentation<K>& p, const Polynomial<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("mult_injective: zero polynomial");
    if (!f.is_isobaric()) throw std::invalid_argument("mult_injective: f not isobaric");
    if (p.relations.generators.empty()) return true;
    return submodules_equal(colon(p.relations, f), p.relations);
}

} // namespace grmod

#endif
