#ifndef GRMOD_MODULE_HPP
#define GRMOD_MODULE_HPP

#include <optional>
#include <sstream>
#include <vector>

#include "grmod/polynomial.hpp"

namespace grmod {

// Free graded module with a degree shift per basis slot.
struct FreeModule {
    RingPtr ring;
    std::size_t rank = 0;
    std::vector<long> shifts;

    bool operator==(const FreeModule& o) const {
        return rank == o.rank && shifts == o.shifts && *ring == *o.ring;
    }
};

using FreeModulePtr = std::shared_ptr<const FreeModule>;

inline FreeModulePtr make_free_module(RingPtr ring, std::size_t rank, std::vector<long> shifts) {
    if (shifts.size() != rank) throw std::invalid_argument("free module: shift count != rank");
    auto f = std::make_shared<FreeModule>();
    f->ring = std::move(ring);
    f->rank = rank;
    f->shifts = std::move(shifts);
    return f;
}

inline FreeModulePtr make_free_module(RingPtr ring, std::size_t rank, long shift = 0) {
    return make_free_module(std::move(ring), rank, std::vector<long>(rank, shift));
}

inline void require_same_ambient(const FreeModulePtr& a, const FreeModulePtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !(*a == *b)) throw std::invalid_argument("ambient mismatch");
}

// Term-over-position module order: shifted weighted degree first, then grevlex
// on the monomial, then lower position wins.  Positions below block_split form
// a dominant block (used for elimination in syzygy computations); block_split
// equal to the rank gives the canonical order.
struct ModuleOrder {
    const FreeModule* ambient = nullptr;
    std::size_t block_split = 0;

    int compare(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb) const {
        bool ea = pa >= block_split, eb = pb >= block_split;
        if (ea != eb) return ea ? -1 : 1;
        long da = ma.weighted_degree(*ambient->ring) + ambient->shifts[pa];
        long db = mb.weighted_degree(*ambient->ring) + ambient->shifts[pb];
        if (da != db) return da < db ? -1 : 1;
        int c = compare_grevlex(ma, mb, *ambient->ring);
        if (c != 0) return c;
        if (pa != pb) return pa > pb ? -1 : 1;
        return 0;
    }
};

template <class K>
class ModuleElement {
public:
    struct Entry {
        std::size_t pos;
        Monomial mono;
        K coeff;
        bool operator==(const Entry&) const = default;
    };

    ModuleElement() = default;
    explicit ModuleElement(FreeModulePtr ambient) : ambient_(std::move(ambient)) {}

    static ModuleElement zero(FreeModulePtr ambient) { return ModuleElement(std::move(ambient)); }

    static ModuleElement basis_vector(FreeModulePtr ambient, std::size_t pos) {
        return from_component(ambient, pos,
                              Polynomial<K>::constant(ambient->ring, 1));
    }

    static ModuleElement from_component(FreeModulePtr ambient, std::size_t pos,
                                        const Polynomial<K>& p) {
        if (pos >= ambient->rank) throw std::invalid_argument("module element: bad position");
        require_same_ring(ambient->ring, p.ring());
        ModuleElement v(ambient);
        v.terms_.reserve(p.size());
        for (const auto& [m, c] : p.terms()) v.terms_.push_back(Entry{pos, m, c});
        return v;
    }

    static ModuleElement from_components(FreeModulePtr ambient,
                                         const std::vector<Polynomial<K>>& comps) {
        if (comps.size() != ambient->rank)
            throw std::invalid_argument("module element: component count != rank");
        ModuleElement v(ambient);
        for (std::size_t j = 0; j < comps.size(); ++j)
            v = v + from_component(ambient, j, comps[j]);
        return v;
    }

    // Builds an element from raw entries, sorting for the order with the given
    // block split and combining duplicate module monomials.
    static ModuleElement from_entries(FreeModulePtr ambient, std::vector<Entry> entries,
                                      std::size_t split) {
        ModuleElement v(std::move(ambient));
        v.order_split_ = (split == v.ambient_->rank) ? SIZE_MAX : split;
        ModuleOrder order{v.ambient_.get(), split};
        std::sort(entries.begin(), entries.end(), [&order](const Entry& a, const Entry& b) {
            return order.compare(a.pos, a.mono, b.pos, b.mono) > 0;
        });
        for (auto& e : entries) {
            if (!v.terms_.empty() && v.terms_.back().pos == e.pos && v.terms_.back().mono == e.mono) {
                v.terms_.back().coeff += e.coeff;
                if (FieldOps<K>::is_zero(v.terms_.back().coeff)) v.terms_.pop_back();
            } else if (!FieldOps<K>::is_zero(e.coeff)) {
                v.terms_.push_back(std::move(e));
            }
        }
        return v;
    }

    void pop_leading() { terms_.erase(terms_.begin()); }

    const FreeModulePtr& ambient() const { return ambient_; }
    const std::vector<Entry>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Entry& leading() const { return terms_.front(); }

    Polynomial<K> component(std::size_t pos) const {
        Polynomial<K> p(ambient_->ring);
        std::vector<typename Polynomial<K>::Term> ts;
        for (const auto& e : terms_)
            if (e.pos == pos) ts.emplace_back(e.mono, e.coeff);
        std::sort(ts.begin(), ts.end(), [this](const auto& a, const auto& b) {
            return compare_grevlex(a.first, b.first, *ambient_->ring) > 0;
        });
        for (auto& t : ts) p = p + Polynomial<K>::term(ambient_->ring, t.first, t.second);
        return p;
    }

    std::vector<Polynomial<K>> components() const {
        std::vector<Polynomial<K>> out;
        out.reserve(ambient_->rank);
        for (std::size_t j = 0; j < ambient_->rank; ++j) out.push_back(component(j));
        return out;
    }

    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
        return merge(a, b, false);
    }
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
        return merge(a, b, true);
    }
    ModuleElement operator-() const {
        ModuleElement r(ambient_);
        r.order_split_ = order_split_;
        r.terms_.reserve(terms_.size());
        for (const auto& e : terms_) r.terms_.push_back(Entry{e.pos, e.mono, -e.coeff});
        return r;
    }

    ModuleElement scaled(const Monomial& m, const K& c) const {
        ModuleElement r(ambient_);
        r.order_split_ = order_split_;
        if (FieldOps<K>::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& e : terms_) {
            K nc = e.coeff * c;
            if (!FieldOps<K>::is_zero(nc)) r.terms_.push_back(Entry{e.pos, e.mono * m, std::move(nc)});
        }
        return r;
    }

    ModuleElement scaled(const K& c) const {
        return scaled(Monomial::one(ambient_->ring->nvars()), c);
    }

    friend ModuleElement operator*(const Polynomial<K>& p, const ModuleElement& v) {
        require_same_ring(p.ring(), v.ambient_->ring);
        ModuleElement r(v.ambient_);
        r.order_split_ = v.order_split_;
        for (const auto& [m, c] : p.terms()) r = r + v.scaled(m, c);
        return r;
    }

    // degree of a homogeneous element (component degree + slot shift), or
    // nullopt when the element mixes degrees
    std::optional<long> degree(const ModuleOrder& order) const {
        if (is_zero()) throw std::domain_error("degree: zero module element");
        const auto& ring = *ambient_->ring;
        long d = terms_.front().mono.weighted_degree(ring) + ambient_->shifts[terms_.front().pos];
        for (const auto& e : terms_)
            if (e.mono.weighted_degree(ring) + ambient_->shifts[e.pos] != d) return std::nullopt;
        return d;
    }

    std::optional<long> degree() const { return degree(ModuleOrder{ambient_.get(), ambient_->rank}); }

    bool is_homogeneous() const { return !is_zero() && degree().has_value(); }

    bool operator==(const ModuleElement& o) const { return terms_ == o.terms_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = 0; j < ambient_->rank; ++j) {
            Polynomial<K> c = component(j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*e" << (j + 1);
        }
        return os.str();
    }

    std::size_t order_split() const {
        return order_split_ == SIZE_MAX ? ambient_->rank : order_split_;
    }

    // Copy re-sorted for the order with the given block split.
    ModuleElement with_order(std::size_t split) const {
        ModuleElement r = *this;
        r.order_split_ = split;
        ModuleOrder order{r.ambient_.get(), split};
        std::sort(r.terms_.begin(), r.terms_.end(), [&order](const Entry& a, const Entry& b) {
            return order.compare(a.pos, a.mono, b.pos, b.mono) > 0;
        });
        return r;
    }

private:
    static ModuleElement merge(const ModuleElement& a, const ModuleElement& b, bool subtract) {
        require_same_ambient(a.ambient_, b.ambient_);
        ModuleOrder order{a.ambient_.get(), a.order_split()};
        if (a.order_split() != b.order_split())
            throw std::invalid_argument("module element order mismatch");
        ModuleElement r(a.ambient_);
        r.order_split_ = a.order_split_;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const Entry& ea = a.terms_[i];
            const Entry& eb = b.terms_[j];
            int cmp = order.compare(ea.pos, ea.mono, eb.pos, eb.mono);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back(Entry{eb.pos, eb.mono, subtract ? K(-eb.coeff) : eb.coeff});
                ++j;
            } else {
                K c = subtract ? K(ea.coeff - eb.coeff) : K(ea.coeff + eb.coeff);
                if (!FieldOps<K>::is_zero(c)) r.terms_.push_back(Entry{ea.pos, ea.mono, std::move(c)});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const Entry& eb = b.terms_[j];
            r.terms_.push_back(Entry{eb.pos, eb.mono, subtract ? K(-eb.coeff) : eb.coeff});
        }
        return r;
    }

    friend class ModuleElementAccess;
    FreeModulePtr ambient_;
    std::vector<Entry> terms_;
    std::size_t order_split_ = SIZE_MAX; // SIZE_MAX: canonical order (split = rank)
};

template <class K>
struct Submodule {
    FreeModulePtr ambient;
    std::vector<ModuleElement<K>> generators;

    Submodule() = default;
    Submodule(FreeModulePtr amb, std::vector<ModuleElement<K>> gens)
        : ambient(std::move(amb)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_ambient(ambient, g.ambient());
            if (!g.is_homogeneous())
                throw std::invalid_argument("submodule: heterogeneous generator");
            generators.push_back(std::move(g));
        }
    }
};

template <class K>
struct GroebnerBasis {
    FreeModulePtr ambient;
    std::vector<ModuleElement<K>> elements;
    std::size_t block_split = 0; // equals rank for the canonical order
    bool reduced = false;

    ModuleOrder order() const { return ModuleOrder{ambient.get(), block_split}; }
};

template <class K>
struct Presentation {
    FreeModulePtr free;
    Submodule<K> relations;

    Presentation(FreeModulePtr f, Submodule<K> rel) : free(std::move(f)), relations(std::move(rel)) {
        if (!relations.ambient)
            relations.ambient = free;
        require_same_ambient(free, relations.ambient);
    }
};

} // namespace grmod

#endif
