#ifndef GRMOD_FIELD_HPP
#define GRMOD_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace grmod {

// Coefficient field descriptor.  Exact rationals are the default; the prime
// field mode exists for fast probabilistic cross-checks and is flagged as such
// in every report that uses it.
struct CoefficientField {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t prime = 0;

    static CoefficientField rationals() { return {Kind::rationals, 0}; }
    static CoefficientField prime_field(std::uint64_t p);

    bool operator==(const CoefficientField&) const = default;
};

using Rational = mpq_class;

// Z/p with the modulus carried in the value.  A default-constructed Fp is an
// unattached zero that adopts the modulus of whatever it is combined with.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (p == 0) return Fp{};
        return Fp((a.v_ + b.v_) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (p == 0) return Fp{};
        return Fp((a.v_ + p - b.v_) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a, b);
        if (p == 0) return Fp{};
        unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
        return Fp(static_cast<std::uint64_t>(prod % p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const {
        if (p_ == 0) return Fp{};
        return Fp(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::invalid_argument("Fp: modulus mismatch");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_);
        std::int64_t newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

private:
    static std::uint64_t join(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw std::invalid_argument("Fp: modulus mismatch");
        return a.p_ != 0 ? a.p_ : b.p_;
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_probable_prime(std::uint64_t n) {
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

inline CoefficientField CoefficientField::prime_field(std::uint64_t p) {
    if (p <= 3 || !is_probable_prime(p))
        throw std::invalid_argument("prime-field modulus must be a prime > 3");
    return {Kind::prime, p};
}

template <class K> struct FieldOps;

template <> struct FieldOps<Rational> {
    static Rational from_int(long n, const CoefficientField&) { return Rational(n); }
    static Rational from_mpz(const mpz_class& n, const CoefficientField&) { return Rational(n); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static std::string str(const Rational& x) { return x.get_str(); }
    static Rational from_string(const std::string& s, const CoefficientField&) {
        Rational r(s);
        r.canonicalize();
        return r;
    }
};

template <> struct FieldOps<Fp> {
    static Fp from_int(long n, const CoefficientField& f) {
        std::uint64_t p = f.prime;
        std::int64_t m = n % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(m), p);
    }
    static Fp from_mpz(const mpz_class& n, const CoefficientField& f) {
        mpz_class m = n % mpz_class(static_cast<unsigned long>(f.prime));
        if (m < 0) m += mpz_class(static_cast<unsigned long>(f.prime));
        return Fp(m.get_ui(), f.prime);
    }
    static bool is_zero(const Fp& x) { return x.value() == 0; }
    static std::string str(const Fp& x) { return std::to_string(x.value()); }
    static Fp from_string(const std::string& s, const CoefficientField& f) {
        return Fp(std::stoull(s), f.prime);
    }
};

} // namespace grmod

#endif
