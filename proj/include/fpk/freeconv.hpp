#pragma once

#include <map>
#include <string>

#include "fpk/multipoly.hpp"
#include "fpk/noncrossing.hpp"

namespace fpk {

enum class ConvKind { boxplus, boxtimes, boxtimes_ns };

inline const char* conv_kind_name(ConvKind k) {
    switch (k) {
        case ConvKind::boxplus: return "boxplus";
        case ConvKind::boxtimes: return "boxtimes";
        case ConvKind::boxtimes_ns: return "boxtimesns";
    }
    return "?";
}

// Neutral elements: (0,...,0) for boxplus, (1,...,1) for boxtimes (moment
// coordinates), (1,0,...,0) for boxtimes_NS (cumulant coordinates).
template <class R>
Seq<R> conv_unit(ConvKind kind, size_t n) {
    Seq<R> u(n);
    switch (kind) {
        case ConvKind::boxplus:
            break;
        case ConvKind::boxtimes:
            for (size_t i = 1; i <= n; ++i) u.at(i) = ring_traits<R>::one();
            break;
        case ConvKind::boxtimes_ns:
            if (n >= 1) u.at(1) = ring_traits<R>::one();
            break;
    }
    return u;
}

template <class R>
Seq<R> convolve_boxtimes_ns(const Seq<R>& a, const Seq<R>& b) {
    size_t n = std::min(a.order(), b.order());
    Seq<R> r(n);
    for (size_t i = 1; i <= n; ++i) r.at(i) = boxtimes_ns_kernel(a, b, i);
    return r;
}

// The evaluation paths are cumulant conjugation throughout: boxplus adds
// free cumulants, boxtimes runs boxtimes_NS on them; both are division-free.
template <class R>
Seq<R> convolve(ConvKind kind, const Seq<R>& a, const Seq<R>& b) {
    if (a.order() != b.order())
        throw DomainError("order-mismatch", "convolve needs sequences of equal order");
    switch (kind) {
        case ConvKind::boxplus:
            return moments_from_cumulants(cumulants_from_moments(a) + cumulants_from_moments(b));
        case ConvKind::boxtimes:
            return moments_from_cumulants(
                convolve_boxtimes_ns(cumulants_from_moments(a), cumulants_from_moments(b)));
        case ConvKind::boxtimes_ns:
            return convolve_boxtimes_ns(a, b);
    }
    throw DomainError("unknown-kind", "unknown convolution kind");
}

// boxtimes_NS inverse, solved degree by degree from the group law: the n-th
// law component is x_n y_1^n + x_1^n y_n + (terms in y_1..y_{n-1}).
template <class R>
Seq<R> conv_inverse_boxtimes_ns(const Seq<R>& a) {
    if (a.order() < 1 || !ring_traits<R>::is_unit(a.at(1)))
        throw DomainError("non-invertible-first-entry",
                          "boxtimes_ns inverse needs an invertible first entry");
    size_t n = a.order();
    R a1inv = ring_traits<R>::inverse(a.at(1));
    Seq<R> y(n);
    y.at(1) = a1inv;
    R a1n = a1inv; // a_1^{-m} running power
    for (size_t m = 2; m <= n; ++m) {
        a1n = a1n * a1inv;
        Seq<R> partial = y.truncated(m);
        partial.at(m) = ring_traits<R>::zero();
        R rest = boxtimes_ns_kernel(a, partial, m);
        y.at(m) = -(rest * a1n);
    }
    return y;
}

template <class R>
Seq<R> conv_inverse(ConvKind kind, const Seq<R>& a) {
    switch (kind) {
        case ConvKind::boxplus:
            return moments_from_cumulants(-cumulants_from_moments(a));
        case ConvKind::boxtimes: {
            // conjugate the boxtimes_NS recursion through the cumulant
            // coordinate change; the defining property is verified in tests
            Seq<R> k = cumulants_from_moments(a);
            if (k.order() < 1 || !ring_traits<R>::is_unit(k.at(1)))
                throw DomainError("non-invertible-first-entry",
                                  "boxtimes inverse needs an invertible first moment");
            return moments_from_cumulants(conv_inverse_boxtimes_ns(k));
        }
        case ConvKind::boxtimes_ns:
            return conv_inverse_boxtimes_ns(a);
    }
    throw DomainError("unknown-kind", "unknown convolution kind");
}

enum class UniversalLaw { P, Q, K, F_boxtimes, F_boxtimes_plus };

// The exact universal polynomial of a law at index n, obtained by running
// the generic convolution code over Q[x_1..x_n, y_1..y_n]. These group laws
// have integer coefficients; a fractional coefficient here signals an
// implementation bug and is reported as such.
MultiPoly universal_polynomial(UniversalLaw law, size_t n);

// Torus decomposition of G: iota is the geometric section a -> (a, a^2, ...),
// project divides out the torus part, project(a)_n = a_n / a_1^n.
template <class R>
Seq<R> torus_iota(const R& a1, size_t n) {
    if (!ring_traits<R>::is_unit(a1))
        throw DomainError("non-invertible-first-entry", "torus section needs an invertible scalar");
    Seq<R> r(n);
    R p = ring_traits<R>::one();
    for (size_t i = 1; i <= n; ++i) {
        p = p * a1;
        r.at(i) = p;
    }
    return r;
}

template <class R>
Seq<R> torus_project(const Seq<R>& a) {
    if (a.order() < 1 || !ring_traits<R>::is_unit(a.at(1)))
        throw DomainError("non-invertible-first-entry", "torus projection needs an invertible first entry");
    size_t n = a.order();
    R inv = ring_traits<R>::inverse(a.at(1));
    Seq<R> r(n);
    R p = ring_traits<R>::one();
    for (size_t i = 1; i <= n; ++i) {
        p = p * inv;
        r.at(i) = a.at(i) * p;
    }
    return r;
}

} // namespace fpk
