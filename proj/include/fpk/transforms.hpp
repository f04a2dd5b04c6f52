#pragma once

#include "fpk/freeconv.hpp"
#include "fpk/gaussian.hpp"
#include "fpk/noncrossing.hpp"
#include "fpk/series.hpp"

namespace fpk {

enum class TransformKind { R, S, F };

// Degree bookkeeping throughout: a moment Seq of order N transforms into a
// series truncated at degree N-1, and the inverse transforms demand exactly
// that degree back, returning a Seq of order N. No silent padding.

// R(m) = kappa_1 + kappa_2 z + ... (free cumulants, constant-indexed)
template <class R>
TruncSeries<R> r_transform(const Seq<R>& m) {
    Seq<R> k = cumulants_from_moments(m);
    TruncSeries<R> t(m.order() - 1);
    for (size_t i = 0; i < m.order(); ++i) t.coeff(i) = k.at(i + 1);
    return t;
}

template <class R>
Seq<R> r_inverse(const TruncSeries<R>& t) {
    Seq<R> k(t.order() + 1);
    for (size_t i = 0; i <= t.order(); ++i) k.at(i + 1) = t.coeff(i);
    return moments_from_cumulants(k);
}

namespace detail {
template <class R>
TruncSeries<R> comp_inverse_of_moment_series(const Seq<R>& m) {
    if (m.order() < 1 || !ring_traits<R>::is_unit(m.at(1)))
        throw DomainError("non-invertible-first-entry",
                          "S/F transform needs an invertible first moment");
    return series_comp_inverse(m.as_gseries());
}
template <class R>
TruncSeries<R> one_plus_z(size_t order) {
    TruncSeries<R> f = TruncSeries<R>::one(order);
    if (order >= 1) f.coeff(1) = ring_traits<R>::one();
    return f;
}
} // namespace detail

// S(m) = ((1+z)/z) f^{-1}(z) for the moment series f
template <class R>
TruncSeries<R> s_transform(const Seq<R>& m) {
    TruncSeries<R> g = detail::comp_inverse_of_moment_series(m).shifted_down();
    return detail::one_plus_z<R>(g.order()) * g;
}

// F(m) = (1/z) f^{-1}(z)
template <class R>
TruncSeries<R> f_transform(const Seq<R>& m) {
    return detail::comp_inverse_of_moment_series(m).shifted_down();
}

template <class R>
Seq<R> s_inverse(const TruncSeries<R>& t) {
    if (!ring_traits<R>::is_unit(t.coeff(0)))
        throw DomainError("non-invertible-constant-term",
                          "inverse S-transform needs an invertible constant term");
    TruncSeries<R> g = (t * series_mul_inverse(detail::one_plus_z<R>(t.order()))).shifted_up();
    return series_comp_inverse(g).tail_seq();
}

template <class R>
Seq<R> f_inverse(const TruncSeries<R>& t) {
    if (!ring_traits<R>::is_unit(t.coeff(0)))
        throw DomainError("non-invertible-constant-term",
                          "inverse F-transform needs an invertible constant term");
    return series_comp_inverse(t.shifted_up()).tail_seq();
}

template <class R>
TruncSeries<R> transform(TransformKind kind, const Seq<R>& m) {
    switch (kind) {
        case TransformKind::R: return r_transform(m);
        case TransformKind::S: return s_transform(m);
        case TransformKind::F: return f_transform(m);
    }
    throw DomainError("unknown-kind", "unknown transform kind");
}

template <class R>
Seq<R> inverse_transform(TransformKind kind, const TruncSeries<R>& t) {
    switch (kind) {
        case TransformKind::R: return r_inverse(t);
        case TransformKind::S: return s_inverse(t);
        case TransformKind::F: return f_inverse(t);
    }
    throw DomainError("unknown-kind", "unknown transform kind");
}

namespace detail {
template <class R>
void require_first_entry_one(const Seq<R>& m, const char* what) {
    if (m.order() < 1 || !(m.at(1) == ring_traits<R>::one()))
        throw DomainError("first-entry-not-one", std::string(what) + " needs first entry 1");
}
} // namespace detail

// log_boxtimes = (z d/dz ln) . S : additive coordinates for boxtimes
template <class R>
Seq<R> log_boxtimes(const Seq<R>& m) {
    detail::require_first_entry_one(m, "log_boxtimes");
    return series_zlogd(s_transform(m)).tail_seq();
}

// log_boxtimes_ns = (z d/dz ln) . F
template <class R>
Seq<R> log_boxtimes_ns(const Seq<R>& k) {
    detail::require_first_entry_one(k, "log_boxtimes_ns");
    return series_zlogd(f_transform(k)).tail_seq();
}

// EXP = S^{-1} . (z d/dz ln)^{-1} . R, mapping an order-N boxplus-coordinate
// Seq to an order-(N+1) G_+ moment Seq with first entry 1.
template <class R>
Seq<R> exp_iso(const Seq<R>& a) {
    return s_inverse(series_zlogd_inverse(cumulants_from_moments(a)));
}

// LOG = R^{-1} . (z d/dz ln) . S, mapping an order-N G_+ moment Seq to an
// order-(N-1) boxplus-coordinate Seq. Mutually inverse with exp_iso.
template <class R>
Seq<R> log_iso(const Seq<R>& m) {
    detail::require_first_entry_one(m, "LOG");
    return moments_from_cumulants(series_zlogd(s_transform(m)).tail_seq());
}

enum class ExpIsoKind { EXP, LOG };

template <class R>
Seq<R> exp_iso(ExpIsoKind kind, const Seq<R>& x) {
    return kind == ExpIsoKind::EXP ? exp_iso(x) : log_iso(x);
}

// mu boxdot nu = R^{-1}( R_mu . R_nu pointwise ): cumulant-wise product
template <class R>
Seq<R> boxdot(const Seq<R>& a, const Seq<R>& b) {
    if (a.order() != b.order()) throw DomainError("order-mismatch", "boxdot needs equal orders");
    return moments_from_cumulants(hadamard(cumulants_from_moments(a), cumulants_from_moments(b)));
}

// second multiplication on Lambda = 1 + zA[[z]], by ghost conjugation
template <class R>
TruncSeries<R> lambda_mul(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    return series_zlogd_inverse(
        hadamard(series_zlogd(f).tail_seq(), series_zlogd(g).tail_seq()));
}

// the lambda-ring unit: ghost all-ones, i.e. 1/(1-z)
template <class R>
TruncSeries<R> lambda_unit(size_t order) {
    TruncSeries<R> f(order);
    for (size_t i = 0; i <= order; ++i) f.coeff(i) = ring_traits<R>::one();
    return f;
}

// a squareast b = S^{-1}(S(a) lambda_mul S(b)): the second ring
// multiplication on (G_+, boxtimes)
template <class R>
Seq<R> squareast(const Seq<R>& a, const Seq<R>& b) {
    detail::require_first_entry_one(a, "squareast");
    detail::require_first_entry_one(b, "squareast");
    return s_inverse(lambda_mul(s_transform(a), s_transform(b)));
}

// the boxtimes_NS counterpart, through F
template <class R>
Seq<R> squareast_ns(const Seq<R>& a, const Seq<R>& b) {
    detail::require_first_entry_one(a, "squareast_ns");
    detail::require_first_entry_one(b, "squareast_ns");
    return f_inverse(lambda_mul(f_transform(a), f_transform(b)));
}

// Formal realization of the exponential semigroup morphisms. exp of a
// nonzero scalar does not exist over Q, so the torus factor e^{v(0)} is kept
// as its logarithm; the G_+ part carries S^{-1}(exp(v - v(0))). The
// homomorphism property reads: log_torus adds, gplus multiplies under
// boxtimes.
template <class R>
struct TorusSplit {
    R log_torus;
    Seq<R> gplus;
};

template <class R>
TorusSplit<R> exp_neg_r(const Seq<R>& m) {
    TruncSeries<R> v = -r_transform(m);
    R c0 = v.coeff(0);
    v.coeff(0) = ring_traits<R>::zero();
    return {c0, s_inverse(series_exp(v))};
}

// mu -> S^{-1}(e^{-i R_mu(i(z+1/2))}) over Q(i); the exponent is expanded
// binomially since the substitution has a constant part
inline TorusSplit<GaussianRational> exp_circle(const Seq<GaussianRational>& m) {
    using G = GaussianRational;
    TruncSeries<G> r = r_transform(m);
    size_t n = r.order();
    G i = G::i();
    G half(Rational(1, 2));
    TruncSeries<G> u(n);
    // u = -i sum_j kappa_{j+1} (i(z+1/2))^j
    TruncSeries<G> inner(n); // i(z + 1/2)
    inner.coeff(0) = i * half;
    if (n >= 1) inner.coeff(1) = i;
    TruncSeries<G> pw = TruncSeries<G>::one(n);
    for (size_t j = 0; j <= n; ++j) {
        u = u + TruncSeries<G>::constant(r.coeff(j), n) * pw;
        pw = pw * inner;
    }
    u = -(TruncSeries<G>::constant(i, n) * u);
    G c0 = u.coeff(0);
    u.coeff(0) = ring_traits<G>::zero();
    return {c0, s_inverse(series_exp(u))};
}

} // namespace fpk
