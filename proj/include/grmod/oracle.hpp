#ifndef GRMOD_ORACLE_HPP
#define GRMOD_ORACLE_HPP

#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "grmod/hilbert.hpp"

namespace grmod {

namespace detail {

// Sparse exact Gaussian elimination over Q (integer rows after clearing
// denominators).  Rows are sorted (column, coefficient) lists.
using SparseRowZ = std::vector<std::pair<std::size_t, mpz_class>>;

inline void row_strip_content(SparseRowZ& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(row.front().second) < 0) g = -g;
    if (g == 1) return;
    for (auto& [c, v] : row) v /= g;
}

inline std::size_t rank_rows_q(std::vector<SparseRowZ> rows) {
    std::unordered_map<std::size_t, SparseRowZ> pivots;
    std::size_t rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            const SparseRowZ& p = it->second;
            // row <- p_lead * row - row_lead * p
            mpz_class a = p.front().second, b = row.front().second;
            SparseRowZ next;
            next.reserve(row.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < p.size()) {
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    next.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || p[j].first < row[i].first) {
                    next.emplace_back(p[j].first, -b * p[j].second);
                    ++j;
                } else {
                    mpz_class v = a * row[i].second - b * p[j].second;
                    if (v != 0) next.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            row = std::move(next);
            row_strip_content(row);
        }
        if (!row.empty()) {
            row_strip_content(row);
            pivots.emplace(row.front().first, std::move(row));
            ++rank;
        }
    }
    return rank;
}

using SparseRowP = std::vector<std::pair<std::size_t, std::uint64_t>>;

inline std::size_t rank_rows_p(std::vector<SparseRowP> rows, std::uint64_t p) {
    std::unordered_map<std::size_t, SparseRowP> pivots;
    std::size_t rank = 0;
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            const SparseRowP& piv = it->second;
            std::uint64_t a = piv.front().second, b = row.front().second;
            SparseRowP next;
            next.reserve(row.size() + piv.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    next.emplace_back(row[i].first, mulmod(a, row[i].second));
                    ++i;
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    next.emplace_back(piv[j].first, p - mulmod(b, piv[j].second));
                    ++j;
                } else {
                    std::uint64_t v = (mulmod(a, row[i].second) + p - mulmod(b, piv[j].second)) % p;
                    if (v != 0) next.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(next);
        }
        if (!row.empty()) {
            pivots.emplace(row.front().first, std::move(row));
            ++rank;
        }
    }
    return rank;
}

template <class K>
struct OracleCoeffRow;

template <>
struct OracleCoeffRow<Rational> {
    using Row = SparseRowZ;
    static Row build(std::vector<std::pair<std::size_t, Rational>>& entries, std::uint64_t) {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        mpz_class den = 1;
        for (const auto& [c, v] : entries)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        Row row;
        row.reserve(entries.size());
        for (const auto& [c, v] : entries) {
            mpq_class scaled = v * Rational(den);
            row.emplace_back(c, scaled.get_num());
        }
        return row;
    }
    static std::size_t rank(std::vector<Row> rows, std::uint64_t) {
        return rank_rows_q(std::move(rows));
    }
};

template <>
struct OracleCoeffRow<Fp> {
    using Row = SparseRowP;
    static Row build(std::vector<std::pair<std::size_t, Fp>>& entries, std::uint64_t) {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Row row;
        row.reserve(entries.size());
        for (const auto& [c, v] : entries) row.emplace_back(c, v.value());
        return row;
    }
    static std::size_t rank(std::vector<Row> rows, std::uint64_t p) {
        return rank_rows_p(std::move(rows), p);
    }
};

} // namespace detail

// Graded dimension of free/relations in a single degree, by exact rank
// computation on the relation-multiples matrix.  Shares no code with the
// Groebner-based Hilbert path.
template <class K>
long long oracle_dimension(const Presentation<K>& pres, long degree, std::size_t max_columns) {
    const auto& free = *pres.free;
    const auto& ring = *free.ring;
    std::uint64_t p = ring.field.kind == CoefficientField::Kind::prime ? ring.field.prime : 0;

    // columns: monomial basis of the free module in this degree
    std::vector<std::vector<Monomial>> mono_basis(free.rank);
    std::vector<std::map<std::vector<unsigned>, std::size_t>> mono_index(free.rank);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < free.rank; ++j) {
        long d = degree - free.shifts[j];
        if (d < 0) continue;
        mono_basis[j] = monomials_of_degree(ring, d);
        for (std::size_t k = 0; k < mono_basis[j].size(); ++k)
            mono_index[j][mono_basis[j][k].exponents] = ncols + k;
        ncols += mono_basis[j].size();
    }
    if (ncols == 0) return 0;
    if (ncols > max_columns)
        throw std::runtime_error("oracle: column budget exceeded in degree " +
                                 std::to_string(degree));

    using Builder = detail::OracleCoeffRow<K>;
    std::vector<typename Builder::Row> rows;
    for (const auto& g : pres.relations.generators) {
        long dg = *g.degree();
        long mu_deg = degree - dg;
        if (mu_deg < 0) continue;
        for (const auto& mu : monomials_of_degree(ring, mu_deg)) {
            std::vector<std::pair<std::size_t, K>> entries;
            entries.reserve(g.terms().size());
            for (const auto& e : g.terms())
                entries.emplace_back(mono_index[e.pos].at((e.mono * mu).exponents), e.coeff);
            rows.push_back(Builder::build(entries, p));
        }
    }
    return static_cast<long long>(ncols) - static_cast<long long>(Builder::rank(std::move(rows), p));
}

// Expansion of the Hilbert function of free/relations up to bound, one exact
// rank computation per degree.  Deterministic for any thread count.
template <class K>
SeriesExpansion dims_oracle(const Presentation<K>& pres, long bound, unsigned threads = 1,
                            std::size_t max_columns = 200000) {
    if (bound < 0) throw std::invalid_argument("dims_oracle: negative bound");
    std::vector<long long> dims(bound + 1, 0);
    if (threads == 0) threads = 1;
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            long d = next.fetch_add(1);
            if (d > bound) return;
            try {
                dims[d] = oracle_dimension(pres, d, max_columns);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    SeriesExpansion out;
    out.bound = bound;
    for (long d = 0; d <= bound; ++d)
        if (dims[d] != 0) out.coefficients.emplace_back(d, dims[d]);
    return out;
}

} // namespace grmod

#endif
