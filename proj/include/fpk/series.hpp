#pragma once

#include <algorithm>
#include <vector>

#include "fpk/error.hpp"
#include "fpk/rational.hpp"

namespace fpk {

template <class R>
class TruncSeries;

// Indexed sequence a_1..a_N over a coefficient ring; the carrier of moment
// and cumulant data. Indexing starts at 1.
template <class R>
class Seq {
public:
    Seq() = default;
    explicit Seq(size_t order) : entries_(order, ring_traits<R>::zero()) {}
    explicit Seq(std::vector<R> entries) : entries_(std::move(entries)) {}

    size_t order() const { return entries_.size(); }
    const R& at(size_t n) const { return entries_.at(n - 1); } // 1-based
    R& at(size_t n) { return entries_.at(n - 1); }
    const std::vector<R>& entries() const { return entries_; }

    Seq truncated(size_t m) const {
        if (m >= order()) return *this;
        return Seq(std::vector<R>(entries_.begin(), entries_.begin() + m));
    }

    friend bool operator==(const Seq& a, const Seq& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Seq& a, const Seq& b) { return !(a == b); }

    friend Seq operator+(const Seq& a, const Seq& b) {
        size_t n = std::min(a.order(), b.order());
        Seq r(n);
        for (size_t i = 1; i <= n; ++i) r.at(i) = a.at(i) + b.at(i);
        return r;
    }
    friend Seq operator-(const Seq& a, const Seq& b) {
        size_t n = std::min(a.order(), b.order());
        Seq r(n);
        for (size_t i = 1; i <= n; ++i) r.at(i) = a.at(i) - b.at(i);
        return r;
    }
    Seq operator-() const {
        Seq r(order());
        for (size_t i = 1; i <= order(); ++i) r.at(i) = -at(i);
        return r;
    }

    // pointwise (Hadamard) product
    friend Seq hadamard(const Seq& a, const Seq& b) {
        size_t n = std::min(a.order(), b.order());
        Seq r(n);
        for (size_t i = 1; i <= n; ++i) r.at(i) = a.at(i) * b.at(i);
        return r;
    }

    // embeds (a_1..a_N) as a_1 z + ... + a_N z^N
    TruncSeries<R> as_gseries() const;

private:
    std::vector<R> entries_;
};

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N. Binary
// operations truncate to the minimum of the operand orders.
template <class R>
class TruncSeries {
public:
    TruncSeries() : coeffs_(1, ring_traits<R>::zero()) {}
    explicit TruncSeries(size_t order) : coeffs_(order + 1, ring_traits<R>::zero()) {}
    explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(ring_traits<R>::zero());
    }

    static TruncSeries constant(const R& c, size_t order) {
        TruncSeries f(order);
        f.coeffs_[0] = c;
        return f;
    }
    static TruncSeries one(size_t order) { return constant(ring_traits<R>::one(), order); }
    static TruncSeries z(size_t order) {
        TruncSeries f(order);
        if (order >= 1) f.coeffs_[1] = ring_traits<R>::one();
        return f;
    }

    size_t order() const { return coeffs_.size() - 1; }
    const R& coeff(size_t n) const { return coeffs_.at(n); }
    R& coeff(size_t n) { return coeffs_.at(n); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    TruncSeries truncated(size_t m) const {
        if (m >= order()) return *this;
        return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + m + 1));
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }
    // Cauchy product, truncated to min order
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return r;
    }

    // coefficientwise product
    friend TruncSeries hadamard(const TruncSeries& a, const TruncSeries& b) {
        size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] * b.coeffs_[i];
        return r;
    }

    // multiply by z (order grows by one)
    TruncSeries shifted_up() const {
        std::vector<R> c(coeffs_.size() + 1, ring_traits<R>::zero());
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
        return TruncSeries(std::move(c));
    }
    // divide by z; requires c_0 = 0
    TruncSeries shifted_down() const {
        if (!(coeffs_[0] == ring_traits<R>::zero()))
            throw DomainError("nonzero-constant-term", "division by z needs zero constant term");
        if (coeffs_.size() == 1) return TruncSeries(std::vector<R>{ring_traits<R>::zero()});
        return TruncSeries(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()));
    }

    // the Seq of coefficients c_1..c_N
    Seq<R> tail_seq() const {
        return Seq<R>(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()));
    }

private:
    std::vector<R> coeffs_;
};

template <class R>
TruncSeries<R> Seq<R>::as_gseries() const {
    TruncSeries<R> f(order());
    for (size_t i = 1; i <= order(); ++i) f.coeff(i) = at(i);
    return f;
}

// f(g(z)), truncated; g must have zero constant term (f composed with the
// zero series is allowed and yields the constant term of f).
template <class R>
TruncSeries<R> series_compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (!(g.coeff(0) == ring_traits<R>::zero()))
        throw DomainError("nonzero-constant-term", "composition needs zero constant term in the inner series");
    size_t n = std::min(f.order(), g.order());
    TruncSeries<R> ft = f.truncated(n), gt = g.truncated(n);
    // Horner in the truncated ring
    TruncSeries<R> acc = TruncSeries<R>::constant(ft.coeff(n), n);
    for (size_t i = n; i-- > 0;)
        acc = acc * gt + TruncSeries<R>::constant(ft.coeff(i), n);
    return acc;
}

// multiplicative inverse; c_0 must be a unit
template <class R>
TruncSeries<R> series_mul_inverse(const TruncSeries<R>& f) {
    if (!ring_traits<R>::is_unit(f.coeff(0)))
        throw DomainError("non-invertible-constant-term", "series has non-invertible constant term");
    size_t n = f.order();
    TruncSeries<R> g(n);
    R c0inv = ring_traits<R>::inverse(f.coeff(0));
    g.coeff(0) = c0inv;
    for (size_t k = 1; k <= n; ++k) {
        R s = ring_traits<R>::zero();
        for (size_t j = 0; j < k; ++j) s = s + f.coeff(k - j) * g.coeff(j);
        g.coeff(k) = -(s * c0inv);
    }
    return g;
}

// compositional inverse, solved degree by degree; needs c_0 = 0 and c_1 a unit
template <class R>
TruncSeries<R> series_comp_inverse(const TruncSeries<R>& f) {
    if (!(f.coeff(0) == ring_traits<R>::zero()))
        throw DomainError("nonzero-constant-term", "compositional inverse needs zero constant term");
    if (f.order() < 1 || !ring_traits<R>::is_unit(f.coeff(1)))
        throw DomainError("non-invertible-leading-coefficient",
                          "compositional inverse needs an invertible linear coefficient");
    size_t n = f.order();
    R c1inv = ring_traits<R>::inverse(f.coeff(1));
    TruncSeries<R> g(n);
    g.coeff(1) = c1inv;
    for (size_t k = 2; k <= n; ++k) {
        // [z^k] f(g) with g_k still zero; the missing contribution is c_1 g_k
        TruncSeries<R> h = series_compose(f.truncated(k), g.truncated(k));
        g.coeff(k) = -(h.coeff(k) * c1inv);
    }
    return g;
}

// the ghost-map kernel z f'/f; needs c_0 = 1
template <class R>
TruncSeries<R> series_zlogd(const TruncSeries<R>& f) {
    if (!(f.coeff(0) == ring_traits<R>::one()))
        throw DomainError("constant-term-not-one", "z d/dz ln needs constant term 1");
    size_t n = f.order();
    TruncSeries<R> zdf(n); // z f'
    for (size_t k = 1; k <= n; ++k) zdf.coeff(k) = ring_traits<R>::scale(f.coeff(k), Rational(long(k)));
    return zdf * series_mul_inverse(f);
}

// truncated exponential; c_0 = 0, ring must contain Q
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& f) {
    static_assert(ring_traits<R>::contains_q);
    if (!(f.coeff(0) == ring_traits<R>::zero()))
        throw DomainError("nonzero-constant-term", "exp needs zero constant term");
    size_t n = f.order();
    TruncSeries<R> acc = TruncSeries<R>::one(n);
    TruncSeries<R> term = TruncSeries<R>::one(n);
    for (size_t k = 1; k <= n; ++k) {
        term = term * f;
        for (auto i = size_t{0}; i <= n; ++i) term.coeff(i) = ring_traits<R>::div_int(term.coeff(i), long(k));
        acc = acc + term;
    }
    return acc;
}

// truncated logarithm; c_0 = 1, ring must contain Q
template <class R>
TruncSeries<R> series_log(const TruncSeries<R>& f) {
    static_assert(ring_traits<R>::contains_q);
    if (!(f.coeff(0) == ring_traits<R>::one()))
        throw DomainError("constant-term-not-one", "log needs constant term 1");
    size_t n = f.order();
    TruncSeries<R> u = f - TruncSeries<R>::one(n);
    TruncSeries<R> acc(n);
    TruncSeries<R> pw = TruncSeries<R>::one(n);
    for (size_t k = 1; k <= n; ++k) {
        pw = pw * u;
        TruncSeries<R> t = pw;
        long sign = (k % 2 == 1) ? 1 : -1;
        for (size_t i = 0; i <= n; ++i) t.coeff(i) = ring_traits<R>::div_int(t.coeff(i), sign * long(k));
        acc = acc + t;
    }
    return acc;
}

// inverse of the ghost-map kernel: the unique f in 1 + zA[[z]] with
// zlogd(f) tail = s; computed as exp(sum s_n z^n / n)
template <class R>
TruncSeries<R> series_zlogd_inverse(const Seq<R>& s) {
    static_assert(ring_traits<R>::contains_q);
    size_t n = s.order();
    TruncSeries<R> g(n);
    for (size_t k = 1; k <= n; ++k) g.coeff(k) = ring_traits<R>::div_int(s.at(k), long(k));
    return series_exp(g);
}

} // namespace fpk
