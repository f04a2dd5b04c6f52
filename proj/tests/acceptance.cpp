// End-to-end acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "fpk/freeconv.hpp"
#include "fpk/measures.hpp"
#include "fpk/rng.hpp"
#include "fpk/transforms.hpp"
#include "fpk/verify.hpp"
#include "fpk/witt.hpp"

using namespace fpk;
using Q = Rational;

namespace {

struct Checker {
    bool ok = true;
    std::string first_failure;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

Seq<Q> seq(std::initializer_list<long> xs) {
    Seq<Q> s(xs.size());
    size_t i = 1;
    for (long x : xs) s.at(i++) = Q(x);
    return s;
}

void criterion1(Checker& c) {
    auto is = [&](const MultiPoly& p, const std::string& want,
                  const std::string& label) {
        c.expect(p.str() == want, label + " printed as '" + p.str() + "'");
    };
    is(universal_polynomial(UniversalLaw::Q, 2),
       "x2*y1^2 + x1^2*y2 - x1^2*y1^2", "Q_2");
    is(universal_polynomial(UniversalLaw::K, 2), "x2*y1^2 + x1^2*y2", "K_2");
    is(universal_polynomial(UniversalLaw::K, 3),
       "x3*y1^3 + 3*x1*x2*y1*y2 + x1^3*y3", "K_3");
    is(universal_polynomial(UniversalLaw::F_boxtimes, 1), "y1 + x1 + x1*y1",
       "F_1");
    is(universal_polynomial(UniversalLaw::F_boxtimes, 2),
       "y2 + x2 - 4*x1*y1 + 2*x2*y1 + 2*x1*y2 - 2*x1*y1^2 - 2*x1^2*y1 + "
       "x2*y1^2 + x1^2*y2 - x1^2*y1^2",
       "F_2");
    // F_3 is pinned to the defining formula Q_3(x+1, y+1) - 1, recomputed
    // here through an independent substitution of shifted symbolic entries.
    {
        std::map<std::string, MultiPoly, poly_var_less> shift;
        for (size_t i = 1; i <= 3; ++i) {
            auto xi = "x" + std::to_string(i), yi = "y" + std::to_string(i);
            shift[xi] = MultiPoly::var(xi) + MultiPoly(1);
            shift[yi] = MultiPoly::var(yi) + MultiPoly(1);
        }
        auto expected = universal_polynomial(UniversalLaw::Q, 3)
                            .eval<MultiPoly>(shift) -
                        MultiPoly(1);
        c.expect(universal_polynomial(UniversalLaw::F_boxtimes, 3) == expected,
                 "F_3 defining-formula identity");
    }
    is(universal_polynomial(UniversalLaw::F_boxtimes_plus, 2), "y2 + x2",
       "F+_2");
    is(universal_polynomial(UniversalLaw::F_boxtimes_plus, 3),
       "y3 + x3 + 3*x2*y2", "F+_3");

    Seq<MultiPoly> x(4);
    for (size_t i = 1; i <= 4; ++i)
        x.at(i) = MultiPoly::var("x" + std::to_string(i));
    auto w = ghost(x);
    is(w.at(1), "x1", "w_1");
    is(w.at(2), "2*x2 + x1^2", "w_2");
    is(w.at(3), "3*x3 + x1^3", "w_3");
    is(w.at(4), "4*x4 + 2*x2^2 + x1^4", "w_4");
    is(witt_polynomial_law(WittLaw::S_W, 1), "y1 + x1", "S_W1");
    is(witt_polynomial_law(WittLaw::P_W, 1), "x1*y1", "P_W1");
}

void criterion2(Checker& c) {
    SplitMix64 rng(1002);
    for (int t = 0; t < 100; ++t) {
        auto a = rng.next_seq(10), b = rng.next_seq(10);
        c.expect(ghost(witt_add(a, b)) == ghost(a) + ghost(b),
                 "ghost additivity");
        c.expect(ghost(witt_mul(a, b)) == hadamard(ghost(a), ghost(b)),
                 "ghost multiplicativity");
        c.expect(ghost_inverse(ghost(a)) == a, "ghost_inverse section");
    }
}

void criterion3(Checker& c) {
    SplitMix64 rng(1003);
    for (int t = 0; t < 100; ++t) {
        auto x = rng.next_seq(10);
        c.expect(series_zlogd(artin_hasse(x)).tail_seq() == ghost(x),
                 "zlogd(AH) = ghost");
    }
}

void criterion4(Checker& c) {
    SplitMix64 rng(1004);
    for (int t = 0; t < 100; ++t) {
        auto a = rng.next_gplus_seq(10), b = rng.next_gplus_seq(10);
        c.expect(log_boxtimes(convolve(ConvKind::boxtimes, a, b)) ==
                     log_boxtimes(a) + log_boxtimes(b),
                 "log_boxtimes additivity");
        c.expect(log_boxtimes_ns(convolve(ConvKind::boxtimes_ns, a, b)) ==
                     log_boxtimes_ns(a) + log_boxtimes_ns(b),
                 "log_boxtimes_ns additivity");
    }
    for (int t = 0; t < 100; ++t) {
        auto a = rng.next_seq(8), b = rng.next_seq(8);
        c.expect(log_iso(exp_iso(a)) == a, "LOG after EXP");
        c.expect(convolve(ConvKind::boxtimes, exp_iso(a), exp_iso(b)) ==
                     exp_iso(convolve(ConvKind::boxplus, a, b)),
                 "EXP homomorphism");
        auto g = rng.next_gplus_seq(8);
        c.expect(exp_iso(log_iso(g)) == g, "EXP after LOG");
    }
}

void criterion5(Checker& c) {
    auto rep = run_suite("ring_diagram", 8, 50, 1005);
    c.expect(rep.passed(), "ring diagram suite: " +
                               (rep.failures.empty()
                                    ? std::string("unknown")
                                    : rep.failures.front().identity));
}

void criterion6(Checker& c) {
    SplitMix64 rng(1006);
    for (int t = 0; t < 20; ++t) {
        Q a = rng.next_rational(), b = rng.next_rational();
        Q r = rng.next_nonzero_rational(), s = rng.next_nonzero_rational();
        Q lam = rng.next_nonnegative_rational(),
          lam2 = rng.next_nonnegative_rational();
        Q al = rng.next_nonzero_rational(), be = rng.next_nonzero_rational();

        // gamma_{a,r} boxplus gamma_{b,s}: cumulants add
        Seq<Q> ga(6), gb(6), gsum(6);
        ga.at(1) = a;
        ga.at(2) = r * r / Q(4);
        gb.at(1) = b;
        gb.at(2) = s * s / Q(4);
        gsum.at(1) = a + b;
        gsum.at(2) = (r * r + s * s) / Q(4);
        c.expect(ga + gb == gsum, "gamma boxplus gamma");
        // gamma boxdot gamma = gamma_{ab, rs/2}
        Seq<Q> gprod(6);
        gprod.at(1) = a * b;
        gprod.at(2) = (r * s / Q(2)) * (r * s / Q(2)) / Q(4);
        c.expect(hadamard(ga, gb) == gprod, "gamma boxdot gamma");

        // nu boxdot nu multiplies rates and jumps
        auto nu1 = cumulants_of(MeasureSpec::free_poisson(lam, al), 6);
        auto nu2 = cumulants_of(MeasureSpec::free_poisson(lam2, be), 6);
        c.expect(hadamard(nu1, nu2) ==
                     cumulants_of(MeasureSpec::free_poisson(lam * lam2, al * be), 6),
                 "nu boxdot nu");
        // delta ideal: delta_a boxdot mu = delta_{kappa_1 a}
        auto mu = rng.next_seq(6);
        c.expect(hadamard(cumulants_of(MeasureSpec::dirac(a), 6), mu) ==
                     cumulants_of(MeasureSpec::dirac(a * mu.at(1)), 6),
                 "delta ideal");
        // V(nu_{inf,lam,al}) = nu_{inf, lam al^2, al}
        c.expect(v_shift(cumulants_of(MeasureSpec::free_poisson(lam, al), 8)) ==
                     cumulants_of(MeasureSpec::free_poisson(lam * al * al, al), 6),
                 "variance shift on free Poisson");
        // f_2(nu_{inf,1,2}) = nu_{inf,1,4}
        c.expect(frobenius(2, cumulants_of(MeasureSpec::free_poisson(Q(1), Q(2)), 6)) ==
                     cumulants_of(MeasureSpec::free_poisson(Q(1), Q(4)), 6),
                 "frobenius on free Poisson");
        // scaling action tables
        Q cscale = rng.next_nonnegative_rational();
        c.expect(act_scale(cscale, nu1) ==
                     cumulants_of(MeasureSpec::free_poisson(cscale * lam, al), 6),
                 "scale action on free Poisson");
        Seq<Q> gscaled(6);
        gscaled.at(1) = cscale * a;
        gscaled.at(2) = cscale * r * r / Q(4);
        c.expect(act_scale(cscale, ga) == gscaled, "scale action on semicircle");
        // shift action
        c.expect(act_shift(b, ga).at(1) == a + b, "shift action");
    }
}

void criterion7(Checker& c) {
    SplitMix64 rng(1007);
    std::vector<Seq<Q>> pool;
    for (int t = 0; t < 100; ++t) {
        // random atomic rho with nonnegative masses
        CharPair p;
        p.gamma = rng.next_rational();
        size_t atoms = size_t(rng.next_in(0, 3));
        for (size_t j = 0; j < atoms; ++j) {
            Q atom = rng.next_rational();
            bool dup = false;
            for (auto& [x, m] : p.sigma) dup = dup || x == atom;
            if (dup) continue;
            p.sigma.push_back({atom, rng.next_nonnegative_rational()});
        }
        auto k = charpair_to_r(p, 10);
        c.expect(is_cond_pos_def(k).accepted, "forward-generated cpd accepted");
        pool.push_back(k);
    }
    for (size_t t = 0; t + 1 < pool.size(); t += 2) {
        c.expect(is_cond_pos_def(pool[t] + pool[t + 1]).accepted,
                 "boxplus closure");
        c.expect(is_cond_pos_def(hadamard(pool[t], pool[t + 1])).accepted,
                 "boxdot closure");
    }
    // curated negatives
    std::vector<Seq<Q>> negatives = {
        seq({0, -1, 0, 0, 0, 0}),       // negative variance
        seq({9, 0, 1, 0, 0}),           // indefinite 2x2 Hankel block
        seq({0, 1, 0, 0, 0, 0, 0, -1}), // non-PSD deeper block
        seq({1, 1, 3, 1, 1, 1}),        // fails Cauchy-Schwarz on the shift
    };
    for (auto& s : negatives) {
        auto res = is_cond_pos_def(s);
        c.expect(!res.accepted, "curated negative rejected");
        if (res.accepted) continue;
        size_t m = res.witness.size();
        Q acc(0);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                acc += res.witness[i] * res.witness[j] * s.at(i + j + 2);
        c.expect(acc == res.witness_value && acc.sign() < 0,
                 "witness re-verified");
    }
}

void criterion8(Checker& c) {
    SplitMix64 rng(1008);
    for (int t = 0; t < 100; ++t) {
        auto a = rng.next_seq(8), b = rng.next_seq(8);
        c.expect(r_transform(convolve(ConvKind::boxplus, a, b)) ==
                     r_transform(a) + r_transform(b),
                 "R additivity vs cumulant route");
        auto u = rng.next_unit_seq(8), v = rng.next_unit_seq(8);
        c.expect(s_transform(convolve(ConvKind::boxtimes, u, v)) ==
                     s_transform(u) * s_transform(v),
                 "S multiplicativity vs cumulant route");
    }
    const size_t catalan[] = {0, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (size_t n = 1; n <= 8; ++n) {
        c.expect(enumerate_nc(n).size() == catalan[n], "NC count");
        size_t count = 0;
        for (auto& p : all_set_partitions(n)) {
            bool crossing = false;
            std::vector<int> block_of(p.n + 1, -1);
            for (size_t bi = 0; bi < p.blocks.size(); ++bi)
                for (int vtx : p.blocks[bi]) block_of[size_t(vtx)] = int(bi);
            for (size_t i = 1; i <= n && !crossing; ++i)
                for (size_t j = i + 1; j <= n && !crossing; ++j)
                    for (size_t k = j + 1; k <= n && !crossing; ++k)
                        for (size_t l = k + 1; l <= n && !crossing; ++l)
                            crossing = block_of[i] == block_of[k] &&
                                       block_of[j] == block_of[l] &&
                                       block_of[i] != block_of[j];
            if (!crossing) ++count;
        }
        c.expect(count == catalan[n], "brute-force Catalan count");
    }
}

void criterion9(Checker& c) {
    SplitMix64 rng(1009);
    for (int t = 0; t < 25; ++t) {
        auto x = rng.next_seq(4), y = rng.next_seq(4), z = rng.next_seq(4);
        Q p = rng.next_unit_interval(), q = rng.next_unit_interval();
        auto plus_q = [](const Q& qq, const Seq<Q>& aa, const Seq<Q>& bb) {
            return plus_alpha_beta(qq, Q(1) - qq, aa, bb);
        };
        // the four convex axioms
        c.expect(plus_q(Q(1), x, y) == x, "+_1 projects");
        c.expect(plus_q(p, x, x) == x, "idempotence");
        c.expect(plus_q(p, x, y) == plus_q(Q(1) - p, y, x), "commutativity");
        Q s = p + (Q(1) - p) * q;
        if (!s.is_zero())
            c.expect(plus_q(p, x, plus_q(q, y, z)) ==
                         plus_q(s, plus_q(p / s, x, y), z),
                     "associativity");
        // distributivity of boxplus / boxdot over +_q
        c.expect(plus_q(p, x, y) + z == plus_q(p, x + z, y + z),
                 "boxplus distributes over +_q");
        c.expect(hadamard(plus_q(p, x, y), z) ==
                     plus_q(p, hadamard(x, z), hadamard(y, z)),
                 "boxdot distributes over +_q");
    }
    // Giry fold vs linear form
    auto k1 = seq({1, 2, 3, 4}), k2 = seq({-1, 0, 2, 1}), k3 = seq({4, 1, -1, 0});
    GiryMix mx{{Q(1, 4), MeasureSpec::from_cumulants(k1)},
               {Q(1, 4), MeasureSpec::from_cumulants(k2)},
               {Q(1, 2), MeasureSpec::from_cumulants(k3)}};
    auto fold = plus_alpha_beta(Q(1, 2), Q(1, 2),
                                plus_alpha_beta(Q(1, 2), Q(1, 2), k1, k2), k3);
    c.expect(giry_algebra(mx, 4) == fold, "giry fold agreement");
    // strict non-mixing counterexample at N = 4
    auto bern = mix_moments(Q(1, 2), moments_of(MeasureSpec::dirac(Q(-1)), 4),
                            moments_of(MeasureSpec::dirac(Q(1)), 4));
    auto lhs = convolve(ConvKind::boxplus, bern, bern);
    auto rhs = mix_moments(
        Q(1, 2),
        convolve(ConvKind::boxplus, moments_of(MeasureSpec::dirac(Q(-1)), 4), bern),
        convolve(ConvKind::boxplus, moments_of(MeasureSpec::dirac(Q(1)), 4), bern));
    c.expect(!(lhs == rhs), "non-mixing counterexample is strict");
}

void criterion10(Checker& c) {
    auto run = [] {
        std::string out;
        for (auto& rep : run_all_suites(8, 100, 20260826)) out += rep.render();
        return out;
    };
    auto t0 = std::chrono::steady_clock::now();
    auto first = run();
    auto t1 = std::chrono::steady_clock::now();
    auto second = run();
    c.expect(first == second, "byte-identical re-run");
    c.expect(first.find("FAIL") == std::string::npos, "all suites pass");
    double secs = std::chrono::duration<double>(t1 - t0).count();
    c.expect(secs < 300.0, "single run under five minutes");
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string description;
        std::function<void(Checker&)> fn;
        double budget_seconds;
    };
    std::vector<Criterion> criteria = {
        {1, "universal polynomials match the printed closed forms", criterion1, 5},
        {2, "ghost map is a ring isomorphism on 100 random pairs", criterion2, 10},
        {3, "zlogd of the Artin-Hasse exponential recovers the ghosts", criterion3, 10},
        {4, "linearisation: log_boxtimes / log_boxtimes_ns / EXP / LOG", criterion4, 30},
        {5, "ring diagram commutes pairwise on 50 shared points", criterion5, 60},
        {6, "closed-form family parameter laws over 20 random draws", criterion6, 5},
        {7, "cpd closure under boxplus/boxdot with verified negative witnesses", criterion7, 30},
        {8, "cumulant route equals transform route; Catalan counts", criterion8, 60},
        {9, "convex axioms, distributivity, Giry fold, non-mixing strictness", criterion9, 10},
        {10, "verify --suite all --order 8 --trials 100 deterministic", criterion10, 300},
    };

    bool all_ok = true;
    for (auto& cr : criteria) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.fn(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        c.expect(secs < cr.budget_seconds, "over time budget");
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.number
                  << ": " << cr.description;
        if (!c.ok) std::cout << " [" << c.first_failure << "]";
        std::cout << " (" << secs << "s)\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
