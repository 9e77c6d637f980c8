#ifndef GRMOD_BRACKET_HPP
#define GRMOD_BRACKET_HPP

#include "grmod/groebner.hpp"
#include "grmod/report.hpp"

namespace grmod {

// Generators-and-relations description of a graded algebra K[X_1..X_m]/(R_*),
// together with a transcendence split: dependent variables are paired with the
// relation that eliminates them.
template <class K>
struct AlgebraPresentation {
    RingPtr ring;
    std::vector<Polynomial<K>> relations;
    std::vector<std::string> relation_names;
    std::vector<std::pair<std::size_t, std::size_t>> dependent; // (variable, relation)

    void validate() const {
        for (const auto& r : relations) {
            if (r.is_zero() || !r.is_isobaric())
                throw std::invalid_argument("algebra presentation: relation not isobaric");
            if (!euler_check(r))
                throw std::logic_error("algebra presentation: Euler check failed");
        }
        std::vector<bool> seen(ring->nvars(), false);
        for (const auto& [var, rel] : dependent) {
            if (var >= ring->nvars() || rel >= relations.size())
                throw std::invalid_argument("algebra presentation: bad dependent pair");
            if (seen[var]) throw std::invalid_argument("algebra presentation: duplicate dependent");
            seen[var] = true;
            if (!involves(relations[rel], var))
                throw std::invalid_argument(
                    "algebra presentation: relation does not involve its dependent variable");
        }
    }

    std::vector<std::size_t> independent_vars() const {
        std::vector<bool> dep(ring->nvars(), false);
        for (const auto& [var, rel] : dependent) dep[var] = true;
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < ring->nvars(); ++v)
            if (!dep[v]) out.push_back(v);
        return out;
    }

private:
    static bool involves(const Polynomial<K>& p, std::size_t var) {
        for (const auto& [m, c] : p.terms())
            if (m.exponents[var] > 0) return true;
        return false;
    }
};

inline std::size_t bracket_slot_count(std::size_t m) { return m * (m - 1) / 2; }

inline std::size_t bracket_slot(std::size_t i, std::size_t j, std::size_t m) {
    // pairs (i<j) in lexicographic order
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

inline std::pair<std::size_t, std::size_t> bracket_slot_pair(std::size_t slot, std::size_t m) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::size_t row = m - i - 1;
        if (slot < row) return {i, i + 1 + slot};
        slot -= row;
    }
    throw std::out_of_range("bracket slot out of range");
}

// Presentation of the module generated by the bracket symbols, with the index
// map between unordered generator pairs and basis slots.
template <class K>
struct BracketModulePresentation {
    Presentation<K> presentation;
    long shift_constant = -1;
    std::size_t num_generators = 0; // m

    std::size_t slot(std::size_t i, std::size_t j) const {
        return bracket_slot(i, j, num_generators);
    }
    std::pair<std::size_t, std::size_t> slot_pair(std::size_t s) const {
        return bracket_slot_pair(s, num_generators);
    }
};

// Relations of the bracket module over the free polynomial ring:
//   (1) per triple i<j<k:  d_k X_k e_ij - d_j X_j e_ik + d_i X_i e_jk
//   (2) per relation R and column index mu:  sum_nu dR/dX_nu [X_nu, X_mu]
//   plus R e_s per relation and slot, eliminating the quotient structure.
template <class K>
BracketModulePresentation<K> build_nprime(const AlgebraPresentation<K>& alg, long shift_constant = -1) {
    alg.validate();
    const RingPtr& ring = alg.ring;
    std::size_t m = ring->nvars();
    std::size_t rank = bracket_slot_count(m);
    std::vector<long> shifts(rank);
    for (std::size_t s = 0; s < rank; ++s) {
        auto [i, j] = bracket_slot_pair(s, m);
        shifts[s] = static_cast<long>(ring->weights[i]) + static_cast<long>(ring->weights[j]) +
                    shift_constant;
    }
    FreeModulePtr F = make_free_module(ring, rank, shifts);

    auto term_at = [&](std::size_t slot, const Polynomial<K>& p) {
        return ModuleElement<K>::from_component(F, slot, p);
    };
    auto X = [&](std::size_t v) { return Polynomial<K>::variable(ring, v); };

    std::vector<ModuleElement<K>> rels;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                auto r = term_at(bracket_slot(i, j, m), X(k).scaled(static_cast<long>(ring->weights[k]))) -
                         term_at(bracket_slot(i, k, m), X(j).scaled(static_cast<long>(ring->weights[j]))) +
                         term_at(bracket_slot(j, k, m), X(i).scaled(static_cast<long>(ring->weights[i])));
                rels.push_back(std::move(r));
            }
    for (const auto& R : alg.relations)
        for (std::size_t mu = 0; mu < m; ++mu) {
            ModuleElement<K> r = ModuleElement<K>::zero(F);
            for (std::size_t nu = 0; nu < m; ++nu) {
                if (nu == mu) continue;
                auto d = R.derivative(nu);
                if (d.is_zero()) continue;
                if (nu < mu)
                    r = r + term_at(bracket_slot(nu, mu, m), d);
                else
                    r = r - term_at(bracket_slot(mu, nu, m), d);
            }
            if (!r.is_zero()) rels.push_back(std::move(r));
        }
    for (const auto& R : alg.relations)
        for (std::size_t s = 0; s < rank; ++s) rels.push_back(term_at(s, R));

    BracketModulePresentation<K> out{
        Presentation<K>(F, Submodule<K>(F, std::move(rels))), shift_constant, m};
    return out;
}

// Ambient of the concrete differential realization: rank-m free module over
// the basis dX_1..dX_m with shifts equal to the variable weights.
template <class K>
FreeModulePtr differential_module(const AlgebraPresentation<K>& alg) {
    std::vector<long> shifts(alg.ring->weights.begin(), alg.ring->weights.end());
    return make_free_module(alg.ring, alg.ring->nvars(), shifts);
}

// Image of a bracket-basis element under  e_ij -> {X_i, X_j}.
template <class K>
ModuleElement<K> kaehler_realize(const AlgebraPresentation<K>& alg, const ModuleElement<K>& v) {
    std::size_t m = alg.ring->nvars();
    FreeModulePtr omega = differential_module(alg);
    if (v.ambient()->rank != bracket_slot_count(m))
        throw std::invalid_argument("kaehler_realize: ambient mismatch");
    ModuleElement<K> out = ModuleElement<K>::zero(omega);
    for (std::size_t s = 0; s < v.ambient()->rank; ++s) {
        Polynomial<K> c = v.component(s);
        if (c.is_zero()) continue;
        auto [i, j] = bracket_slot_pair(s, m);
        auto b = bracket_concrete(Polynomial<K>::variable(alg.ring, i),
                                  Polynomial<K>::variable(alg.ring, j));
        for (std::size_t nu = 0; nu < m; ++nu) {
            if (b[nu].is_zero()) continue;
            out = out + ModuleElement<K>::from_component(omega, nu, c * b[nu]);
        }
    }
    return out;
}

// The submodule of the differential module that realizes "zero over the
// quotient ring": gradient vectors of the relations plus R times each slot.
template <class K>
Submodule<K> differential_relations(const AlgebraPresentation<K>& alg) {
    FreeModulePtr omega = differential_module(alg);
    std::size_t m = alg.ring->nvars();
    std::vector<ModuleElement<K>> gens;
    for (const auto& R : alg.relations) {
        ModuleElement<K> grad = ModuleElement<K>::zero(omega);
        for (std::size_t nu = 0; nu < m; ++nu) {
            auto d = R.derivative(nu);
            if (!d.is_zero()) grad = grad + ModuleElement<K>::from_component(omega, nu, d);
        }
        gens.push_back(std::move(grad));
        for (std::size_t nu = 0; nu < m; ++nu)
            gens.push_back(ModuleElement<K>::from_component(omega, nu, R));
    }
    return Submodule<K>(omega, std::move(gens));
}

// The projection system satisfied by the coefficients of any syzygy of the
// bracket generators: with P_j = sum_{i<j} d_i X_i P_ij - sum_{i>j} d_i X_i P_ji
// and Pi the product of the dependent-relation partials, checks
//   P_j Pi = sum_k (d R_k / d X_j) P_k Pi^(k)
// for every independent j, as identities in the quotient ring.
template <class K>
ReportSection lemma13_project(const AlgebraPresentation<K>& alg, const ModuleElement<K>& relation) {
    alg.validate();
    std::size_t m = alg.ring->nvars();
    ReportSection section{"lemma13", {}, {}, {}};

    ModuleElement<K> omega_image = kaehler_realize(alg, relation);
    bool syzygy = omega_image.is_zero();
    if (!syzygy && !alg.relations.empty())
        syzygy = is_member(omega_image, differential_relations(alg));
    if (!syzygy)
        throw std::invalid_argument("lemma13_project: input is not a syzygy of the brackets");

    auto X = [&](std::size_t v) { return Polynomial<K>::variable(alg.ring, v); };
    auto P_of = [&](std::size_t i, std::size_t j) {
        return relation.component(bracket_slot(i, j, m));
    };
    std::vector<Polynomial<K>> P;
    for (std::size_t j = 0; j < m; ++j) {
        Polynomial<K> acc(alg.ring);
        for (std::size_t i = 0; i < j; ++i)
            acc = acc + X(i).scaled(static_cast<long>(alg.ring->weights[i])) * P_of(i, j);
        for (std::size_t i = j + 1; i < m; ++i)
            acc = acc - X(i).scaled(static_cast<long>(alg.ring->weights[i])) * P_of(j, i);
        P.push_back(std::move(acc));
    }

    Polynomial<K> pi = Polynomial<K>::constant(alg.ring, 1);
    std::vector<Polynomial<K>> partials;
    for (const auto& [var, rel] : alg.dependent) {
        auto d = alg.relations[rel].derivative(var);
        if (d.is_zero())
            throw std::invalid_argument("lemma13_project: dependent-relation partial is zero");
        partials.push_back(d);
        pi = pi * partials.back();
    }

    // identity check modulo the relation ideal
    FreeModulePtr line = make_free_module(alg.ring, 1);
    std::vector<ModuleElement<K>> ideal_gens;
    for (const auto& R : alg.relations)
        ideal_gens.push_back(ModuleElement<K>::from_component(line, 0, R));
    auto ideal_gb = groebner(Submodule<K>(line, std::move(ideal_gens)));

    for (std::size_t j : alg.independent_vars()) {
        Polynomial<K> rhs(alg.ring);
        for (std::size_t t = 0; t < alg.dependent.size(); ++t) {
            auto [var, rel] = alg.dependent[t];
            auto pik = pi.exact_divide(partials[t]);
            if (!pik) throw std::logic_error("lemma13_project: inexact Pi division");
            rhs = rhs + alg.relations[rel].derivative(j) * P[var] * (*pik);
        }
        Polynomial<K> diff = P[j] * pi - rhs;
        bool pass = diff.is_zero() ||
                    is_member(ModuleElement<K>::from_component(line, 0, diff), ideal_gb);
        auto& c = section.add_check("projection-j" + std::to_string(j + 1), pass);
        if (!pass) c.witness = diff.str();
    }
    return section;
}

// The torsion-freeness certificate: injectivity of multiplication by the
// first independent generator (optionally all generators) and by each
// dependent-relation partial.
template <class K>
ReportSection prop14_certificate(const BracketModulePresentation<K>& b,
                                 const AlgebraPresentation<K>& alg, bool all_generators = false) {
    alg.validate();
    ReportSection section{"torsion-free-certificate", {}, {}, {}};
    auto indep = alg.independent_vars();
    std::vector<std::size_t> vars;
    if (all_generators) {
        for (std::size_t v = 0; v < alg.ring->nvars(); ++v) vars.push_back(v);
    } else if (!indep.empty()) {
        vars.push_back(indep.front());
    }
    for (std::size_t v : vars) {
        bool inj = mult_injective(b.presentation, Polynomial<K>::variable(alg.ring, v));
        section.add_check("mult-" + alg.ring->variable_names[v], inj);
    }
    for (const auto& [var, rel] : alg.dependent) {
        auto d = alg.relations[rel].derivative(var);
        bool inj = mult_injective(b.presentation, d);
        std::string rname = rel < alg.relation_names.size() ? alg.relation_names[rel]
                                                            : std::to_string(rel + 1);
        section.add_check("mult-d" + rname + "/d" + alg.ring->variable_names[var], inj);
    }
    return section;
}

} // namespace grmod

#endif
