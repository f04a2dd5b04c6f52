#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fpk/rational.hpp"
#include "fpk/series.hpp"

namespace fpk {

// Atomic characteristic pair (gamma, sigma): a drift plus a finite atomic
// measure given as (atom, mass) entries with distinct atoms, masses >= 0.
struct CharPair {
    Rational gamma;
    std::vector<std::pair<Rational, Rational>> sigma;

    void validate() const;
    // k-th moment of sigma; m_0 = total mass
    Rational sigma_moment(size_t k) const;
};

enum class MeasureFamily { dirac, semicircle, free_poisson, moments, cumulants, char_pair };

// Symbolic measure: a family tag with exact rational parameters, or raw
// moment/cumulant data, or a characteristic pair.
struct MeasureSpec {
    MeasureFamily family = MeasureFamily::dirac;
    Rational a;              // dirac a; semicircle mean
    Rational r;              // semicircle radius, >= 0
    Rational rate;           // free_poisson rate, >= 0
    Rational jump;           // free_poisson jump size
    Seq<Rational> data{1};   // moments / cumulants payload
    CharPair pair;

    void validate() const;

    static MeasureSpec dirac(Rational a);
    static MeasureSpec semicircle(Rational a, Rational r);
    static MeasureSpec free_poisson(Rational rate, Rational jump);
    static MeasureSpec from_moments(Seq<Rational> m);
    static MeasureSpec from_cumulants(Seq<Rational> k);
    static MeasureSpec from_char_pair(CharPair p);
};

Seq<Rational> cumulants_of(const MeasureSpec& spec, size_t n);
Seq<Rational> moments_of(const MeasureSpec& spec, size_t n);

// R-transform coefficients of an atomic pair:
// kappa_1 = gamma + m_1(sigma), kappa_{n+1} = m_{n-1}(sigma) + m_{n+1}(sigma)
Seq<Rational> charpair_to_r(const CharPair& p, size_t n);

// The (s_1, rho) presentation: rho has the same atoms with masses scaled by
// (1 + atom^2); R(z) = s_1 + sum_{n>=1} m_{n-1}(rho) z^n.
struct RhoPair {
    Rational s1;
    std::vector<std::pair<Rational, Rational>> rho;
};
RhoPair sigma_to_rho(const CharPair& p);
Seq<Rational> rhopair_to_r(const RhoPair& p, size_t n);

// Exact PSD decision for the Hankel matrix H_ij = s_{i+j}, 1 <= i,j <= N/2,
// with a rational witness v (v^T H v < 0) on rejection.
struct CpdResult {
    bool accepted = false;
    std::vector<Rational> witness; // empty iff accepted
    Rational witness_value;        // v^T H v, negative iff rejected
};
CpdResult is_cond_pos_def(const Seq<Rational>& s);

// kappa_n(V mu) = kappa_{n+2}(mu): shift cumulants left by two
Seq<Rational> v_shift(const Seq<Rational>& kappa);

// Frobenius f_n: entrywise n-th power of cumulants (= n-fold boxdot power)
Seq<Rational> frobenius(size_t n, const Seq<Rational>& kappa);

// Teichmueller section tau(a) = nu_{infty,1,a}: cumulants (a, a^2, ...)
Seq<Rational> teichmuller(const Rational& a, size_t n);

// r.mu = delta_r boxplus mu; c.mu = nu_{infty,c,1} boxdot mu (cumulant level)
Seq<Rational> act_shift(const Rational& r, const Seq<Rational>& kappa);
Seq<Rational> act_scale(const Rational& c, const Seq<Rational>& kappa);

// moment-level affine mixture (q in [0,1]) vs cumulant-level conic sum
Seq<Rational> mix_moments(const Rational& q, const Seq<Rational>& ma, const Seq<Rational>& mb);
Seq<Rational> plus_alpha_beta(const Rational& alpha, const Rational& beta,
                              const Seq<Rational>& ka, const Seq<Rational>& kb);

// Finite Giry monad on formal weighted sums of measures.
using GiryMix = std::vector<std::pair<Rational, MeasureSpec>>;
GiryMix giry_unit(MeasureSpec spec);
GiryMix giry_join(const std::vector<std::pair<Rational, GiryMix>>& nested);
// algebra map: R^{-1}(sum_i w_i R_{mu_i}) in cumulant coordinates
Seq<Rational> giry_algebra(const GiryMix& mix, size_t n);

// classical side: componentwise product of classical cumulant sequences
Seq<Rational> star_classical(const Seq<Rational>& c, const Seq<Rational>& d);

enum class ClassicalFamily { dirac, normal, poisson };
Seq<Rational> classical_cumulants(ClassicalFamily family, const Rational& p1, const Rational& p2,
                                  size_t n);

// pair-level Berkovici-Pata transport: free cumulants plus the echoed pair
struct BpImage {
    Seq<Rational> free_cumulants{1};
    CharPair classical_pair;
};
BpImage bp_map(const CharPair& p, size_t n);

} // namespace fpk
