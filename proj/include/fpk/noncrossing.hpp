#pragma once

#include <cstdlib>
#include <vector>

#include "fpk/error.hpp"
#include "fpk/series.hpp"

namespace fpk {

// A non-crossing partition of {1..n}: disjoint covering blocks, each sorted,
// blocks ordered by minimum element, no a<b<c<d with a,c in one block and
// b,d in another.
struct NCPartition {
    size_t n = 0;
    std::vector<std::vector<int>> blocks;

    size_t block_count() const { return blocks.size(); }
    bool is_valid() const;
};

// Enumeration cap: Catalan growth makes larger n impractical at a desk.
// FPK_NC_CAP in the environment overrides the default of 14.
size_t nc_cap();

// All non-crossing partitions of {1..n}, each exactly once, in a
// deterministic order (recursive first-block placement). |result| = Catalan(n).
// Results are cached per n.
const std::vector<NCPartition>& enumerate_nc(size_t n);

// Kreweras complement via the permutation model: the blocks of K(pi) are the
// cycles of sigma_pi^{-1} . (1 2 ... n), where sigma_pi has the blocks of pi
// as increasing cycles. Satisfies |pi| + |K(pi)| = n + 1.
NCPartition kreweras(const NCPartition& p);

// Brute-force oracle: all set partitions of {1..n} (crossing or not).
// Test-support only; used to cross-check the NC enumeration.
std::vector<NCPartition> all_set_partitions(size_t n);

namespace detail {
inline void check_cap(size_t n) {
    if (n > nc_cap())
        throw DomainError("cap-exceeded",
                          "non-crossing enumeration capped at n = " + std::to_string(nc_cap()) +
                              " (set FPK_NC_CAP to override)");
    if (n == 0) throw DomainError("cap-exceeded", "n must be positive");
}
} // namespace detail

// n-th component of f boxtimes_NS g: literal summation over NC(n) with
// Kreweras complements, sum over pi of a_{|V_1|}...a_{|V_p|} b_{|W_1|}...b_{|W_q|}.
template <class R>
R boxtimes_ns_kernel(const Seq<R>& f, const Seq<R>& g, size_t n) {
    if (f.order() < n || g.order() < n)
        throw DomainError("insufficient-order", "boxtimes_ns kernel needs sequences of order >= n");
    detail::check_cap(n);
    R acc = ring_traits<R>::zero();
    for (const NCPartition& p : enumerate_nc(n)) {
        NCPartition k = kreweras(p);
        R t = ring_traits<R>::one();
        for (const auto& v : p.blocks) t = t * f.at(v.size());
        for (const auto& w : k.blocks) t = t * g.at(w.size());
        acc = acc + t;
    }
    return acc;
}

// m_n = sum over NC(n) of the product of kappa_{|V|}
template <class R>
Seq<R> moments_from_cumulants(const Seq<R>& k) {
    detail::check_cap(std::max<size_t>(k.order(), 1));
    Seq<R> m(k.order());
    for (size_t n = 1; n <= k.order(); ++n) {
        R acc = ring_traits<R>::zero();
        for (const NCPartition& p : enumerate_nc(n)) {
            R t = ring_traits<R>::one();
            for (const auto& v : p.blocks) t = t * k.at(v.size());
            acc = acc + t;
        }
        m.at(n) = acc;
    }
    return m;
}

// triangular inverse: kappa_n = m_n - sum over pi != 1-hat of prod kappa_{|V|}
template <class R>
Seq<R> cumulants_from_moments(const Seq<R>& m) {
    detail::check_cap(std::max<size_t>(m.order(), 1));
    Seq<R> k(m.order());
    for (size_t n = 1; n <= m.order(); ++n) {
        R rest = ring_traits<R>::zero();
        for (const NCPartition& p : enumerate_nc(n)) {
            if (p.block_count() == 1) continue; // the 1-hat term carries kappa_n itself
            R t = ring_traits<R>::one();
            for (const auto& v : p.blocks) t = t * k.at(v.size());
            rest = rest + t;
        }
        k.at(n) = m.at(n) - rest;
    }
    return k;
}

// The boxtimes_NS-inverse of Zeta = (1,1,...), i.e. the unique vector with
// Zeta boxtimes_NS moeb = (1,0,...,0). Comes out as signed Catalans
// (1, -1, 2, -5, 14, -42, ...); the defining identity phi_m . phi_fc = id
// forces the signs.
Seq<Rational> moeb_vector(size_t n);

} // namespace fpk
