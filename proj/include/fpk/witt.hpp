#pragma once

#include <vector>

#include "fpk/multipoly.hpp"
#include "fpk/noncrossing.hpp"
#include "fpk/series.hpp"
#include "fpk/transforms.hpp"

namespace fpk {

// Witt vectors are 1-indexed component lists; all arithmetic is
// ghost-conjugated, so ghost_inverse needs division by n in the ring.
template <class R>
using WittVector = Seq<R>;

// w_n(x) = sum_{d | n} d x_d^{n/d}
template <class R>
Seq<R> ghost(const WittVector<R>& x) {
    size_t n = x.order();
    Seq<R> w(n);
    for (size_t k = 1; k <= n; ++k) {
        R acc = ring_traits<R>::zero();
        for (size_t d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            R p = ring_traits<R>::one();
            for (size_t e = 0; e < k / d; ++e) p = p * x.at(d);
            acc = acc + ring_traits<R>::from_int(static_cast<long>(d)) * p;
        }
        w.at(k) = acc;
    }
    return w;
}

// triangular solve: x_n = (v_n - sum_{d|n, d<n} d x_d^{n/d}) / n
template <class R>
WittVector<R> ghost_inverse(const Seq<R>& v) {
    static_assert(ring_traits<R>::contains_q, "ghost_inverse needs division by integers");
    size_t n = v.order();
    WittVector<R> x(n);
    for (size_t k = 1; k <= n; ++k) {
        R acc = v.at(k);
        for (size_t d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            R p = ring_traits<R>::one();
            for (size_t e = 0; e < k / d; ++e) p = p * x.at(d);
            acc = acc - ring_traits<R>::from_int(static_cast<long>(d)) * p;
        }
        x.at(k) = ring_traits<R>::div_int(acc, static_cast<long>(k));
    }
    return x;
}

template <class R>
WittVector<R> witt_add(const WittVector<R>& x, const WittVector<R>& y) {
    if (x.order() != y.order()) throw DomainError("order-mismatch", "witt_add needs equal orders");
    return ghost_inverse(ghost(x) + ghost(y));
}

template <class R>
WittVector<R> witt_mul(const WittVector<R>& x, const WittVector<R>& y) {
    if (x.order() != y.order()) throw DomainError("order-mismatch", "witt_mul needs equal orders");
    return ghost_inverse(hadamard(ghost(x), ghost(y)));
}

template <class R>
WittVector<R> witt_one(size_t order) {
    WittVector<R> x(order);
    x.at(1) = ring_traits<R>::one();
    return x;
}

enum class WittLaw { S_W, P_W };

// symbolic S_W,n / P_W,n over Q[x,y]; integrality is checked, not assumed
MultiPoly witt_polynomial_law(WittLaw which, size_t n);

// AH(x) = prod_{n <= N} (1 - x_n z^n)^{-1}, truncated at degree N
template <class R>
TruncSeries<R> artin_hasse(const WittVector<R>& x) {
    size_t n = x.order();
    TruncSeries<R> acc = TruncSeries<R>::one(n);
    for (size_t k = 1; k <= n; ++k) {
        TruncSeries<R> f = TruncSeries<R>::one(n);
        if (k <= n) f.coeff(k) = -x.at(k);
        acc = acc * series_mul_inverse(f);
    }
    return acc;
}

// phi = S^{-1} . AH : (W, +_W) -> (G_+, boxtimes)
template <class R>
Seq<R> phi_to_gplus(const WittVector<R>& x) {
    return s_inverse(artin_hasse(x));
}

// Zero-indexed sequences a_0..a_N with a fixed weight lambda.
template <class R>
struct HurwitzSeq {
    R lambda;
    std::vector<R> entries; // a_0 .. a_N

    size_t order() const { return entries.size() - 1; }
    const R& at(size_t i) const { return entries.at(i); }
    R& at(size_t i) { return entries.at(i); }

    static HurwitzSeq make(R lambda, size_t order) {
        return {std::move(lambda), std::vector<R>(order + 1, ring_traits<R>::zero())};
    }
    static HurwitzSeq unit(R lambda, size_t order) {
        HurwitzSeq u = make(std::move(lambda), order);
        u.at(0) = ring_traits<R>::one();
        return u;
    }
    friend bool operator==(const HurwitzSeq& a, const HurwitzSeq& b) {
        return a.lambda == b.lambda && a.entries == b.entries;
    }
};

template <class R>
HurwitzSeq<R> hurwitz_from_seq(const R& lambda, const R& a0, const Seq<R>& tail) {
    HurwitzSeq<R> h = HurwitzSeq<R>::make(lambda, tail.order());
    h.at(0) = a0;
    for (size_t i = 1; i <= tail.order(); ++i) h.at(i) = tail.at(i);
    return h;
}

template <class R>
Seq<R> hurwitz_tail(const HurwitzSeq<R>& h) {
    Seq<R> s(h.order());
    for (size_t i = 1; i <= h.order(); ++i) s.at(i) = h.at(i);
    return s;
}

// (a ._lambda b)_n = sum_k sum_j C(n,k) C(n-k,j) lambda^k a_{n-j} b_{k+j}
template <class R>
HurwitzSeq<R> hurwitz_mul(const HurwitzSeq<R>& a, const HurwitzSeq<R>& b) {
    if (!(a.lambda == b.lambda)) throw DomainError("lambda-mismatch", "hurwitz_mul needs equal weights");
    if (a.order() != b.order()) throw DomainError("order-mismatch", "hurwitz_mul needs equal orders");
    size_t n0 = a.order();
    HurwitzSeq<R> c = HurwitzSeq<R>::make(a.lambda, n0);
    for (size_t n = 0; n <= n0; ++n) {
        R acc = ring_traits<R>::zero();
        R lk = ring_traits<R>::one();
        for (size_t k = 0; k <= n; ++k) {
            for (size_t j = 0; j <= n - k; ++j) {
                if (k + j > n0 || n - j > n0) continue;
                R term = lk * a.at(n - j) * b.at(k + j);
                term = ring_traits<R>::scale(term, binomial(n, k) * binomial(n - k, j));
                acc = acc + term;
            }
            lk = lk * a.lambda;
        }
        c.at(n) = acc;
    }
    return c;
}

// gamma(a)_n = sum_j C(n,j) lambda^j a_j : (A^N, ._lambda) -> (A^N, pointwise)
template <class R>
HurwitzSeq<R> hurwitz_gamma(const HurwitzSeq<R>& a) {
    size_t n0 = a.order();
    HurwitzSeq<R> b = HurwitzSeq<R>::make(a.lambda, n0);
    for (size_t n = 0; n <= n0; ++n) {
        R acc = ring_traits<R>::zero();
        R lj = ring_traits<R>::one();
        for (size_t j = 0; j <= n; ++j) {
            acc = acc + ring_traits<R>::scale(lj * a.at(j), binomial(n, j));
            lj = lj * a.lambda;
        }
        b.at(n) = acc;
    }
    return b;
}

// inverse by binomial inversion: a_n = lambda^{-n} sum_j C(n,j) (-1)^{n-j} b_j
template <class R>
HurwitzSeq<R> hurwitz_gamma_inverse(const HurwitzSeq<R>& b) {
    if (!ring_traits<R>::is_unit(b.lambda))
        throw DomainError("non-invertible-lambda", "gamma inverse needs invertible lambda");
    size_t n0 = b.order();
    R linv = ring_traits<R>::inverse(b.lambda);
    HurwitzSeq<R> a = HurwitzSeq<R>::make(b.lambda, n0);
    for (size_t n = 0; n <= n0; ++n) {
        R acc = ring_traits<R>::zero();
        for (size_t j = 0; j <= n; ++j) {
            R term = ring_traits<R>::scale(b.at(j), binomial(n, j));
            if ((n - j) % 2 == 1) term = -term;
            acc = acc + term;
        }
        R ln = ring_traits<R>::one();
        for (size_t e = 0; e < n; ++e) ln = ln * linv;
        a.at(n) = ln * acc;
    }
    return a;
}

// the shift derivation d(a)_n = a_{n+1}, dropping the order by one
template <class R>
HurwitzSeq<R> hurwitz_shift(const HurwitzSeq<R>& a) {
    if (a.order() < 1) throw DomainError("order-too-small", "shift needs order >= 1");
    HurwitzSeq<R> d = HurwitzSeq<R>::make(a.lambda, a.order() - 1);
    for (size_t i = 0; i < a.order(); ++i) d.at(i) = a.at(i + 1);
    return d;
}

template <class R>
HurwitzSeq<R> hurwitz_truncate(const HurwitzSeq<R>& a, size_t order) {
    HurwitzSeq<R> t = HurwitzSeq<R>::make(a.lambda, order);
    for (size_t i = 0; i <= order && i <= a.order(); ++i) t.at(i) = a.at(i);
    return t;
}

// decalage: drop a_1, keep a_2..a_N
template <class R>
Seq<R> decalage(const Seq<R>& a) {
    if (a.order() < 2) throw DomainError("order-too-small", "decalage needs order >= 2");
    Seq<R> d(a.order() - 1);
    for (size_t i = 1; i < a.order(); ++i) d.at(i) = a.at(i + 1);
    return d;
}

// the Hankel-shift matrix (delta(a))_{m,n} = a_{m+n-1}, row-truncated
template <class R>
std::vector<std::vector<R>> comonad_delta(const Seq<R>& a) {
    size_t n0 = a.order();
    std::vector<std::vector<R>> rows;
    for (size_t m = 1; m <= n0; ++m) {
        std::vector<R> row;
        for (size_t n = 1; m + n - 1 <= n0; ++n) row.push_back(a.at(m + n - 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class R>
R comonad_counit(const Seq<R>& a) {
    if (a.order() < 1) throw DomainError("order-too-small", "counit needs order >= 1");
    return a.at(1);
}

// Adams operation: the n-th free cumulant of the moment sequence
template <class R>
R adams(size_t n, const Seq<R>& m) {
    if (n < 1 || n > m.order()) throw DomainError("index-out-of-range", "adams index exceeds order");
    return cumulants_from_moments(m).at(n);
}

} // namespace fpk
