#ifndef GRMOD_POLYNOMIAL_HPP
#define GRMOD_POLYNOMIAL_HPP

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "grmod/ring.hpp"

namespace grmod {

// Sparse polynomial with exact coefficients.  Terms are kept in descending
// grevlex order with no zero coefficients; zero is the empty term list.
template <class K>
class Polynomial {
public:
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, K c) {
        Polynomial p(ring);
        if (!FieldOps<K>::is_zero(c))
            p.terms_.emplace_back(Monomial::one(ring->nvars()), std::move(c));
        return p;
    }

    static Polynomial constant(RingPtr ring, long n) {
        return constant(ring, FieldOps<K>::from_int(n, ring->field));
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        if (i >= ring->nvars()) throw std::invalid_argument("variable index out of range");
        Monomial m = Monomial::one(ring->nvars());
        m.exponents[i] = 1;
        K one = FieldOps<K>::from_int(1, ring->field);
        return term(std::move(ring), std::move(m), std::move(one));
    }

    static Polynomial term(RingPtr ring, Monomial m, K c) {
        Polynomial p(ring);
        if (!FieldOps<K>::is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.front().first; }
    const K& leading_coefficient() const { return terms_.front().second; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, true);
    }
    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        for (const auto& [m, c] : a.terms_) r = r + b.scaled(m, c);
        return r;
    }

    Polynomial scaled(const Monomial& m, const K& c) const {
        Polynomial r(ring_);
        if (FieldOps<K>::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [tm, tc] : terms_) {
            K nc = tc * c;
            if (!FieldOps<K>::is_zero(nc)) r.terms_.emplace_back(tm * m, std::move(nc));
        }
        return r;
    }

    Polynomial scaled(const K& c) const { return scaled(Monomial::one(ring_->nvars()), c); }

    Polynomial scaled(long n) const {
        return scaled(FieldOps<K>::from_int(n, ring_->field));
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // weight k if every term has weighted degree k, otherwise nullopt
    std::optional<long> weighted_degree() const {
        if (is_zero()) throw std::domain_error("weighted_degree: zero polynomial");
        long k = terms_.front().first.weighted_degree(*ring_);
        for (const auto& [m, c] : terms_)
            if (m.weighted_degree(*ring_) != k) return std::nullopt;
        return k;
    }

    bool is_isobaric() const { return !is_zero() && weighted_degree().has_value(); }

    Polynomial derivative(std::size_t var) const {
        if (var >= ring_->nvars()) throw std::invalid_argument("derivative: bad variable index");
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.exponents[var];
            if (e == 0) continue;
            Monomial nm = m;
            nm.exponents[var] = e - 1;
            K nc = c * FieldOps<K>::from_int(static_cast<long>(e), ring_->field);
            if (!FieldOps<K>::is_zero(nc)) r.terms_.emplace_back(std::move(nm), std::move(nc));
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [this](const Term& a, const Term& b) {
            return compare_grevlex(a.first, b.first, *ring_) > 0;
        });
        return r;
    }

    // remainder-zero division by a single polynomial
    std::optional<Polynomial> exact_divide(const Polynomial& f) const {
        require_same_ring(ring_, f.ring_);
        if (f.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
        Polynomial q(ring_);
        Polynomial h = *this;
        while (!h.is_zero()) {
            const auto& [hm, hc] = h.terms_.front();
            if (!f.leading_monomial().divides(hm)) return std::nullopt;
            Monomial qm = hm / f.leading_monomial();
            K qc = hc / f.leading_coefficient();
            q = q + term(ring_, qm, qc);
            h = h - f.scaled(qm, qc);
        }
        return q;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = FieldOps<K>::str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            bool unit = (cs == "1");
            if (!unit || m.is_one()) os << cs;
            bool printed_var = false;
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                if (m.exponents[i] == 0) continue;
                if (!unit || printed_var) os << "*";
                os << ring_->variable_names[i];
                if (m.exponents[i] > 1) os << "^" << m.exponents[i];
                printed_var = true;
            }
        }
        return os.str();
    }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        require_same_ring(a.ring_, b.ring_);
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int cmp = compare_grevlex(a.terms_[i].first, b.terms_[j].first, *a.ring_);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                const auto& [m, c] = b.terms_[j++];
                r.terms_.emplace_back(m, subtract ? K(-c) : c);
            } else {
                K c = subtract ? K(a.terms_[i].second - b.terms_[j].second)
                               : K(a.terms_[i].second + b.terms_[j].second);
                if (!FieldOps<K>::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& [m, c] = b.terms_[j];
            r.terms_.emplace_back(m, subtract ? K(-c) : c);
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

// true iff  sum_v d_v x_v dp/dx_v = k p  for the isobaric weight k of p
template <class K>
bool euler_check(const Polynomial<K>& p) {
    auto k = p.weighted_degree();
    if (!k) throw std::invalid_argument("euler_check: polynomial is not isobaric");
    const auto& ring = p.ring();
    Polynomial<K> lhs(ring);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        Polynomial<K> t = p.derivative(v) * Polynomial<K>::variable(ring, v);
        lhs = lhs + t.scaled(static_cast<long>(ring->weights[v]));
    }
    return lhs == p.scaled(*k);
}

// Components of  deg(g) g df - deg(f) f dg  over the basis dx_1..dx_m.
template <class K>
std::vector<Polynomial<K>> bracket_concrete(const Polynomial<K>& f, const Polynomial<K>& g) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("bracket_concrete: zero input");
    auto df = f.weighted_degree(), dg = g.weighted_degree();
    if (!df || !dg) throw std::invalid_argument("bracket_concrete: input not isobaric");
    if (*df <= 0 || *dg <= 0)
        throw std::invalid_argument("bracket_concrete: weights must be positive");
    const auto& ring = f.ring();
    std::vector<Polynomial<K>> comps;
    comps.reserve(ring->nvars());
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        Polynomial<K> c = (g * f.derivative(v)).scaled(*dg) - (f * g.derivative(v)).scaled(*df);
        comps.push_back(std::move(c));
    }
    return comps;
}

} // namespace grmod

#endif
