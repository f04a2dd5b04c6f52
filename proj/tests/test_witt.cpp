#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fpk/rng.hpp"
#include "fpk/witt.hpp"

using namespace fpk;
using Q = Rational;

namespace {

Seq<Q> seq(std::initializer_list<long> xs) {
    Seq<Q> s(xs.size());
    size_t i = 1;
    for (long x : xs) s.at(i++) = Q(x);
    return s;
}

}  // namespace

TEST_CASE("ghost components: symbolic forms") {
    Seq<MultiPoly> x(5);
    for (size_t i = 1; i <= 5; ++i)
        x.at(i) = MultiPoly::var("x" + std::to_string(i));
    auto w = ghost(x);
    CHECK(w.at(1).str() == "x1");
    CHECK(w.at(2).str() == "2*x2 + x1^2");
    CHECK(w.at(3).str() == "3*x3 + x1^3");
    CHECK(w.at(4).str() == "4*x4 + 2*x2^2 + x1^4");
    // w_5 = 5 x5 + x1^5 (only divisors 1 and 5)
    CHECK(w.at(5) == MultiPoly(5) * MultiPoly::var("x5") +
                         MultiPoly::var("x1", 5));
}

TEST_CASE("ghost inverse") {
    CHECK(ghost_inverse(seq({1, 1, 1, 1})) == witt_one<Q>(4));
    CHECK(ghost_inverse(seq({2, 2})) == seq({2, -1}));
    SplitMix64 rng(51);
    for (int t = 0; t < 20; ++t) {
        auto x = rng.next_seq(10);
        CHECK(ghost_inverse(ghost(x)) == x);
        CHECK(ghost(ghost_inverse(x)) == x);
    }
}

TEST_CASE("witt ring arithmetic") {
    CHECK(witt_add(seq({1, 0}), seq({1, 0})) == seq({2, -1}));
    SplitMix64 rng(52);
    for (int t = 0; t < 10; ++t) {
        auto a = rng.next_seq(8), b = rng.next_seq(8), c = rng.next_seq(8);
        CHECK(witt_add(a, b) == witt_add(b, a));
        CHECK(witt_mul(a, b) == witt_mul(b, a));
        CHECK(witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)));
        CHECK(witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c)));
        CHECK(witt_mul(a, witt_add(b, c)) ==
              witt_add(witt_mul(a, b), witt_mul(a, c)));
        CHECK(witt_mul(witt_one<Q>(8), a) == a);
        CHECK(witt_add(a, WittVector<Q>(8)) == a);
    }
    CHECK_THROWS_AS(witt_add(seq({1}), seq({1, 2})), DomainError);
}

TEST_CASE("witt structure polynomials: printed forms and integrality") {
    CHECK(witt_polynomial_law(WittLaw::S_W, 1).str() == "y1 + x1");
    CHECK(witt_polynomial_law(WittLaw::S_W, 2).str() == "y2 + x2 - x1*y1");
    CHECK(witt_polynomial_law(WittLaw::P_W, 1).str() == "x1*y1");
    CHECK(witt_polynomial_law(WittLaw::P_W, 2).str() ==
          "2*x2*y2 + x2*y1^2 + x1^2*y2");
    for (size_t n = 1; n <= 8; ++n) {
        CHECK(witt_polynomial_law(WittLaw::S_W, n).has_integer_coefficients());
        CHECK(witt_polynomial_law(WittLaw::P_W, n).has_integer_coefficients());
    }
}

TEST_CASE("artin-hasse exponential") {
    // single coordinate x1 = a gives the geometric series 1/(1-az)
    WittVector<Q> single(6);
    single.at(1) = Q(7);
    auto ah = artin_hasse(single);
    for (size_t i = 0; i <= 6; ++i) CHECK(ah.coeff(i) == Q(7).pow(i));
    CHECK(artin_hasse(WittVector<Q>(5)) == TruncSeries<Q>::one(5));

    SplitMix64 rng(53);
    for (int t = 0; t < 10; ++t) {
        auto x = rng.next_seq(10), y = rng.next_seq(10);
        // zlogd(AH(x)) recovers the ghost components
        CHECK(series_zlogd(artin_hasse(x)).tail_seq() == ghost(x));
        // AH turns Witt addition into series multiplication
        CHECK(artin_hasse(witt_add(x, y)) == artin_hasse(x) * artin_hasse(y));
    }
}

TEST_CASE("phi = S^-1 o AH is a homomorphism into the multiplicative group") {
    auto ph0 = phi_to_gplus(WittVector<Q>(5));
    for (size_t i = 1; i <= ph0.order(); ++i) CHECK(ph0.at(i) == Q(1));
    SplitMix64 rng(54);
    for (int t = 0; t < 10; ++t) {
        auto x = rng.next_seq(8), y = rng.next_seq(8);
        CHECK(phi_to_gplus(witt_add(x, y)) ==
              convolve(ConvKind::boxtimes, phi_to_gplus(x), phi_to_gplus(y)));
        CHECK(phi_to_gplus(x) ==
              inverse_transform(TransformKind::S, artin_hasse(x)));
    }
}

TEST_CASE("hurwitz series ring") {
    Q lam(3, 2);
    auto ha = hurwitz_from_seq(lam, Q(2), seq({1, -2, 3, 5, -1, 2, 0, 4}));
    auto hb = hurwitz_from_seq(lam, Q(-1), seq({4, 2, -3, 1, 2, -5, 1, 3}));
    auto hc = hurwitz_from_seq(lam, Q(1, 3), seq({-2, 1, 4, -1, 3, 2, -2, 1}));

    auto ab = hurwitz_mul(ha, hb);
    CHECK(ab.at(0) == ha.at(0) * hb.at(0));
    CHECK(ab.at(1) ==
          ha.at(1) * hb.at(0) + ha.at(0) * hb.at(1) + lam * ha.at(1) * hb.at(1));
    CHECK(hurwitz_mul(ha, hb) == hurwitz_mul(hb, ha));
    CHECK(hurwitz_mul(hurwitz_mul(ha, hb), hc) ==
          hurwitz_mul(ha, hurwitz_mul(hb, hc)));
    CHECK(hurwitz_mul(ha, HurwitzSeq<Q>::unit(lam, 8)) == ha);

    auto other = hurwitz_from_seq(Q(1), Q(0), seq({1, 2}));
    CHECK_THROWS_AS(hurwitz_mul(ha, other), DomainError);
}

TEST_CASE("gamma morphism and carre du champ") {
    Q lam(3, 2);
    auto ha = hurwitz_from_seq(lam, Q(2), seq({1, -2, 3, 5, -1, 2, 0, 4}));
    auto hb = hurwitz_from_seq(lam, Q(-1), seq({4, 2, -3, 1, 2, -5, 1, 3}));

    auto ga = hurwitz_gamma(ha), gb = hurwitz_gamma(hb);
    auto gab = hurwitz_gamma(hurwitz_mul(ha, hb));
    for (size_t i = 0; i <= 8; ++i) CHECK(gab.at(i) == ga.at(i) * gb.at(i));
    CHECK(hurwitz_gamma_inverse(hurwitz_gamma(ha)) == ha);

    // d(ab) - d(a)b - a d(b) = lambda d(a) d(b), with d the shift
    auto da = hurwitz_shift(ha), db = hurwitz_shift(hb);
    auto dab = hurwitz_shift(hurwitz_mul(ha, hb));
    auto t1 = hurwitz_mul(da, hurwitz_truncate(hb, 7));
    auto t2 = hurwitz_mul(hurwitz_truncate(ha, 7), db);
    auto t3 = hurwitz_mul(da, db);
    for (size_t i = 0; i <= 7; ++i)
        CHECK(dab.at(i) - t1.at(i) - t2.at(i) == lam * t3.at(i));
}

TEST_CASE("decalage, comonad, adams operations") {
    CHECK(decalage(seq({1, 2, 3, 4})) == seq({2, 3, 4}));
    CHECK_THROWS_AS(decalage(seq({1})), DomainError);

    auto x = seq({3, -2, 5, 1, -4, 2});
    auto dm = comonad_delta(x);
    for (size_t m = 0; m < dm.size(); ++m)
        for (size_t n = 0; n < dm[m].size(); ++n)
            CHECK(dm[m][n] == x.at(m + n + 1));
    CHECK(comonad_counit(x) == x.at(1));

    // adams(n, m) is the n-th free cumulant of the moment sequence m
    auto semi = moments_from_cumulants(seq({0, 1, 0, 0, 0, 0}));
    CHECK(adams(2, semi) == Q(1));
    CHECK(adams(1, x) == x.at(1));
    // free Poisson lambda = 2, alpha = 3: kappa_n = 2 * 3^n
    Seq<Q> k(6);
    for (size_t i = 1; i <= 6; ++i) k.at(i) = Q(2) * Q(3).pow(i);
    auto fpm = moments_from_cumulants(k);
    for (size_t i = 1; i <= 6; ++i) CHECK(adams(i, fpm) == Q(2) * Q(3).pow(i));
    // Dirac: adams_1 = a, higher vanish
    Seq<Q> d(5);
    for (size_t i = 1; i <= 5; ++i) d.at(i) = Q(4).pow(i);
    CHECK(adams(1, d) == Q(4));
    for (size_t i = 2; i <= 5; ++i) CHECK(adams(i, d) == Q(0));
    CHECK_THROWS_AS(adams(7, d), DomainError);
}
