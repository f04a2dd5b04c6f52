#include "fpk/verify.hpp"

#include <chrono>
#include <functional>

#include "fpk/freeconv.hpp"
#include "fpk/rng.hpp"
#include "fpk/transforms.hpp"
#include "fpk/witt.hpp"

namespace fpk {

namespace {

using Q = Rational;

struct Checker {
    SuiteReport& rep;

    void check(const std::string& identity, bool ok, const std::function<json()>& ce) {
        ++rep.checks;
        if (!ok) rep.failures.push_back({identity, ce()});
    }
    void check(const std::string& identity, bool ok, const json& ce) {
        ++rep.checks;
        if (!ok) rep.failures.push_back({identity, ce});
    }
};

json seq_json(const Seq<Q>& s) { return to_json(s); }

json pair_json(const Seq<Q>& a, const Seq<Q>& b) {
    return json{{"a", to_json(a)}, {"b", to_json(b)}};
}

json triple_json(const Seq<Q>& a, const Seq<Q>& b, const Seq<Q>& c) {
    return json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
}

// ---------------------------------------------------------------- group_laws

void suite_group_laws(Checker& ck, SplitMix64& rng, size_t n) {
    Seq<Q> a = rng.next_unit_seq(n);
    Seq<Q> b = rng.next_unit_seq(n);
    Seq<Q> c = rng.next_unit_seq(n);
    json ctx = triple_json(a, b, c);

    for (ConvKind kind : {ConvKind::boxplus, ConvKind::boxtimes, ConvKind::boxtimes_ns}) {
        std::string op = conv_kind_name(kind);
        Seq<Q> u = conv_unit<Q>(kind, n);
        ck.check(op + " commutative", convolve(kind, a, b) == convolve(kind, b, a), ctx);
        ck.check(op + " associative",
                 convolve(kind, convolve(kind, a, b), c) == convolve(kind, a, convolve(kind, b, c)),
                 ctx);
        ck.check(op + " unit", convolve(kind, a, u) == a, ctx);
        ck.check(op + " inverse", convolve(kind, a, conv_inverse(kind, a)) == u, ctx);
    }
    ck.check("moment-cumulant roundtrip",
             moments_from_cumulants(cumulants_from_moments(a)) == a, ctx);

    // universal polynomials agree with the generic convolutions pointwise
    size_t m = std::min<size_t>(n, 4);
    Seq<Q> ta = a.truncated(m), tb = b.truncated(m);
    std::map<std::string, Q> env;
    for (size_t i = 1; i <= m; ++i) {
        env["x" + std::to_string(i)] = ta.at(i);
        env["y" + std::to_string(i)] = tb.at(i);
    }
    ck.check("P_n evaluation",
             universal_polynomial(UniversalLaw::P, m).eval<Q>(env) ==
                 convolve(ConvKind::boxplus, ta, tb).at(m), ctx);
    ck.check("Q_n evaluation",
             universal_polynomial(UniversalLaw::Q, m).eval<Q>(env) ==
                 convolve(ConvKind::boxtimes, ta, tb).at(m), ctx);
    ck.check("K_n evaluation",
             universal_polynomial(UniversalLaw::K, m).eval<Q>(env) ==
                 convolve(ConvKind::boxtimes_ns, ta, tb).at(m), ctx);
}

// ---------------------------------------------------------------- transforms

void suite_transforms(Checker& ck, SplitMix64& rng, size_t n) {
    Seq<Q> a = rng.next_unit_seq(n);
    Seq<Q> b = rng.next_unit_seq(n);
    json ab = pair_json(a, b);

    ck.check("R additivity",
             r_transform(convolve(ConvKind::boxplus, a, b)) == r_transform(a) + r_transform(b), ab);
    ck.check("S multiplicativity",
             s_transform(convolve(ConvKind::boxtimes, a, b)) == s_transform(a) * s_transform(b), ab);
    ck.check("F multiplicativity",
             f_transform(convolve(ConvKind::boxtimes_ns, a, b)) == f_transform(a) * f_transform(b),
             ab);
    for (TransformKind kind : {TransformKind::R, TransformKind::S, TransformKind::F})
        ck.check("transform roundtrip", inverse_transform(kind, transform(kind, a)) == a, ab);

    Seq<Q> ga = rng.next_gplus_seq(n);
    Seq<Q> gb = rng.next_gplus_seq(n);
    json gab = pair_json(ga, gb);
    ck.check("log_boxtimes additivity",
             log_boxtimes(convolve(ConvKind::boxtimes, ga, gb)) ==
                 log_boxtimes(ga) + log_boxtimes(gb), gab);
    ck.check("log_boxtimes_ns additivity",
             log_boxtimes_ns(convolve(ConvKind::boxtimes_ns, ga, gb)) ==
                 log_boxtimes_ns(ga) + log_boxtimes_ns(gb), gab);

    ck.check("LOG . EXP = id", log_iso(exp_iso(a)) == a, ab);
    ck.check("EXP homomorphism",
             exp_iso(convolve(ConvKind::boxplus, a, b)) ==
                 convolve(ConvKind::boxtimes, exp_iso(a), exp_iso(b)), ab);
    ck.check("boxdot via R route",
             r_transform(boxdot(a, b)) == hadamard(r_transform(a), r_transform(b)), ab);

    TruncSeries<Q> f = s_transform(ga), g = s_transform(gb);
    ck.check("lambda unit law", lambda_mul(f, lambda_unit<Q>(f.order())) == f, gab);
    TruncSeries<Q> h = s_transform(rng.next_gplus_seq(n));
    ck.check("lambda distributivity", lambda_mul(f, g * h) == lambda_mul(f, g) * lambda_mul(f, h),
             gab);

    Seq<Q> sq_unit = s_inverse(lambda_unit<Q>(n - 1));
    ck.check("squareast unit", squareast(ga, sq_unit) == ga, gab);
    ck.check("LOG intertwines squareast with boxdot",
             log_iso(squareast(ga, gb)) == boxdot(log_iso(ga), log_iso(gb)), gab);
    ck.check("squareast distributes over boxtimes",
             squareast(ga, convolve(ConvKind::boxtimes, gb, gb)) ==
                 convolve(ConvKind::boxtimes, squareast(ga, gb), squareast(ga, gb)), gab);

    auto ea = exp_neg_r(a), eb = exp_neg_r(b), es = exp_neg_r(convolve(ConvKind::boxplus, a, b));
    ck.check("exp(-R) torus additivity", es.log_torus == ea.log_torus + eb.log_torus, ab);
    ck.check("exp(-R) gplus homomorphism",
             es.gplus == convolve(ConvKind::boxtimes, ea.gplus, eb.gplus), ab);

    size_t nc = std::min<size_t>(n, 6);
    Seq<GaussianRational> ca(nc), cb(nc), cs(nc);
    Seq<Q> sum = convolve(ConvKind::boxplus, a, b);
    for (size_t i = 1; i <= nc; ++i) {
        ca.at(i) = GaussianRational(a.at(i));
        cb.at(i) = GaussianRational(b.at(i));
        cs.at(i) = GaussianRational(sum.at(i));
    }
    auto xa = exp_circle(ca), xb = exp_circle(cb), xs = exp_circle(cs);
    ck.check("exp-circle torus additivity", xs.log_torus == xa.log_torus + xb.log_torus, ab);
    ck.check("exp-circle gplus homomorphism",
             xs.gplus == convolve(ConvKind::boxtimes, xa.gplus, xb.gplus), ab);
}

// -------------------------------------------------------------- ring_diagram

// Shared point: ghost coordinates g. Each node holds the preimage of g under
// its arrow to the pointwise carrier; both ring operations are transported
// and compared through the arrows.
void suite_ring_diagram(Checker& ck, SplitMix64& rng, size_t n) {
    Seq<Q> g1 = rng.next_seq(n);
    Seq<Q> g2 = rng.next_seq(n);
    json ctx = pair_json(g1, g2);

    // nodes
    WittVector<Q> w1 = ghost_inverse(g1), w2 = ghost_inverse(g2);
    TruncSeries<Q> l1 = series_zlogd_inverse(g1), l2 = series_zlogd_inverse(g2);
    Seq<Q> m1 = s_inverse(l1), m2 = s_inverse(l2);                // G_+ node, order n+1
    Seq<Q> k1 = f_inverse(l1), k2 = f_inverse(l2);                // boxtimes_NS node
    Seq<Q> p1 = moments_from_cumulants(g1), p2 = moments_from_cumulants(g2); // (boxplus,boxdot)
    HurwitzSeq<Q> h1 = hurwitz_gamma_inverse(hurwitz_from_seq(Q(1), Q(1), g1));
    HurwitzSeq<Q> h2 = hurwitz_gamma_inverse(hurwitz_from_seq(Q(1), Q(1), g2));

    // node consistency through every arrow into the pointwise carrier
    ck.check("ghost arrow", ghost(w1) == g1, ctx);
    ck.check("zlogd arrow", series_zlogd(l1).tail_seq() == g1, ctx);
    ck.check("log_boxtimes arrow", log_boxtimes(m1) == g1, ctx);
    ck.check("log_boxtimes_ns arrow", log_boxtimes_ns(k1) == g1, ctx);
    ck.check("R arrow", cumulants_from_moments(p1) == g1, ctx);
    ck.check("gamma arrow", hurwitz_tail(hurwitz_gamma(h1)) == g1, ctx);

    // triangle W -> Lambda -> pointwise = ghost
    ck.check("Artin-Hasse triangle", series_zlogd(artin_hasse(w1)).tail_seq() == ghost(w1), ctx);
    // triangle W -> G_+ via phi = S^{-1} . AH
    ck.check("phi factors through Lambda", phi_to_gplus(w1) == s_inverse(artin_hasse(w1)), ctx);
    ck.check("phi matches node", phi_to_gplus(w1) == m1, ctx);
    // LOG: (G_+,boxtimes,squareast) -> (A,boxplus,boxdot)
    ck.check("LOG matches node", log_iso(m1) == p1, ctx);

    // additive structure transported to every node
    Seq<Q> gs = g1 + g2;
    ck.check("additive transport: Witt", ghost(witt_add(w1, w2)) == gs, ctx);
    ck.check("additive transport: Lambda", series_zlogd(l1 * l2).tail_seq() == gs, ctx);
    ck.check("additive transport: G_+", log_boxtimes(convolve(ConvKind::boxtimes, m1, m2)) == gs,
             ctx);
    ck.check("additive transport: NS",
             log_boxtimes_ns(convolve(ConvKind::boxtimes_ns, k1, k2)) == gs, ctx);
    ck.check("additive transport: boxplus",
             cumulants_from_moments(convolve(ConvKind::boxplus, p1, p2)) == gs, ctx);
    ck.check("additive transport: Hurwitz",
             hurwitz_tail(hurwitz_gamma(hurwitz_mul(h1, h2))) == hadamard(g1, g2), ctx);

    // multiplicative structure transported
    Seq<Q> gm = hadamard(g1, g2);
    ck.check("hadamard transport: Witt", ghost(witt_mul(w1, w2)) == gm, ctx);
    ck.check("hadamard transport: Lambda", series_zlogd(lambda_mul(l1, l2)).tail_seq() == gm, ctx);
    ck.check("hadamard transport: G_+", log_boxtimes(squareast(m1, m2)) == gm, ctx);
    ck.check("hadamard transport: NS", log_boxtimes_ns(squareast_ns(k1, k2)) == gm, ctx);
    ck.check("hadamard transport: boxplus", cumulants_from_moments(boxdot(p1, p2)) == gm, ctx);

    // pairwise arrow agreement across nodes (compositions through G_+)
    ck.check("W -> G_+ -> boxplus", log_iso(phi_to_gplus(w1)) == moments_from_cumulants(ghost(w1)),
             ctx);
    ck.check("Lambda -> G_+ consistency", s_transform(m1) == l1, ctx);
    ck.check("Lambda -> NS consistency", f_transform(k1) == l1, ctx);
}

// ---------------------------------------------------------------------- witt

void suite_witt(Checker& ck, SplitMix64& rng, size_t n) {
    Seq<Q> x = rng.next_seq(n);
    Seq<Q> y = rng.next_seq(n);
    Seq<Q> z = rng.next_seq(n);
    json ctx = triple_json(x, y, z);

    ck.check("ghost_inverse . ghost = id", ghost_inverse(ghost(x)) == x, ctx);
    ck.check("ghost additivity", ghost(witt_add(x, y)) == ghost(x) + ghost(y), ctx);
    ck.check("ghost multiplicativity", ghost(witt_mul(x, y)) == hadamard(ghost(x), ghost(y)), ctx);
    ck.check("Witt add associative",
             witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z)), ctx);
    ck.check("Witt mul commutative", witt_mul(x, y) == witt_mul(y, x), ctx);
    ck.check("Witt distributivity",
             witt_mul(x, witt_add(y, z)) == witt_add(witt_mul(x, y), witt_mul(x, z)), ctx);
    ck.check("Witt unit", witt_mul(witt_one<Q>(n), x) == x, ctx);

    ck.check("zlogd . artin_hasse = ghost", series_zlogd(artin_hasse(x)).tail_seq() == ghost(x),
             ctx);
    ck.check("phi homomorphism",
             phi_to_gplus(witt_add(x, y)) ==
                 convolve(ConvKind::boxtimes, phi_to_gplus(x), phi_to_gplus(y)), ctx);
    ck.check("phi = S^{-1} . AH", phi_to_gplus(x) == inverse_transform(TransformKind::S, artin_hasse(x)),
             ctx);

    // symbolic laws re-evaluated numerically
    size_t m = std::min<size_t>(n, 4);
    Seq<Q> tx = x.truncated(m), ty = y.truncated(m);
    std::map<std::string, Q> env;
    for (size_t i = 1; i <= m; ++i) {
        env["x" + std::to_string(i)] = tx.at(i);
        env["y" + std::to_string(i)] = ty.at(i);
    }
    ck.check("S_W evaluation",
             witt_polynomial_law(WittLaw::S_W, m).eval<Q>(env) == witt_add(tx, ty).at(m), ctx);
    ck.check("P_W evaluation",
             witt_polynomial_law(WittLaw::P_W, m).eval<Q>(env) == witt_mul(tx, ty).at(m), ctx);
}

// ------------------------------------------------------------------- hurwitz

void suite_hurwitz(Checker& ck, SplitMix64& rng, size_t n) {
    Q lam = rng.next_nonzero_rational();
    auto a = hurwitz_from_seq(lam, rng.next_rational(), rng.next_seq(n));
    auto b = hurwitz_from_seq(lam, rng.next_rational(), rng.next_seq(n));
    auto c = hurwitz_from_seq(lam, rng.next_rational(), rng.next_seq(n));
    json ctx = json{{"lambda", lam.str()},
                    {"a", to_json(hurwitz_tail(a))},
                    {"b", to_json(hurwitz_tail(b))},
                    {"c", to_json(hurwitz_tail(c))}};

    ck.check("Hurwitz commutative", hurwitz_mul(a, b) == hurwitz_mul(b, a), ctx);
    ck.check("Hurwitz associative",
             hurwitz_mul(hurwitz_mul(a, b), c) == hurwitz_mul(a, hurwitz_mul(b, c)), ctx);
    ck.check("Hurwitz unit", hurwitz_mul(a, HurwitzSeq<Q>::unit(lam, n)) == a, ctx);

    auto gab = hurwitz_gamma(hurwitz_mul(a, b));
    auto ga = hurwitz_gamma(a), gb = hurwitz_gamma(b);
    bool morph = true;
    for (size_t i = 0; i <= n; ++i) morph = morph && gab.at(i) == ga.at(i) * gb.at(i);
    ck.check("gamma morphism", morph, ctx);
    ck.check("gamma inverse", hurwitz_gamma_inverse(hurwitz_gamma(a)) == a, ctx);

    // carre du champ: d(ab) - d(a)b - a d(b) = lambda d(a) d(b)
    auto dab = hurwitz_shift(hurwitz_mul(a, b));
    auto t1 = hurwitz_mul(hurwitz_shift(a), hurwitz_truncate(b, n - 1));
    auto t2 = hurwitz_mul(hurwitz_truncate(a, n - 1), hurwitz_shift(b));
    auto t3 = hurwitz_mul(hurwitz_shift(a), hurwitz_shift(b));
    bool cdc = true;
    for (size_t i = 0; i + 1 <= n; ++i)
        cdc = cdc && dab.at(i) - t1.at(i) - t2.at(i) == lam * t3.at(i);
    ck.check("carre du champ", cdc, ctx);

    // decalage / comonad laws
    Seq<Q> s = rng.next_seq(n);
    ck.check("decalage drops head", decalage(s).at(1) == s.at(2), seq_json(s));
    auto dm = comonad_delta(s);
    bool rows_ok = true;
    for (size_t j = 0; j < n; ++j)
        rows_ok = rows_ok && dm[0][j] == s.at(j + 1) && dm[j][0] == s.at(j + 1);
    ck.check("delta first row/column", rows_ok, seq_json(s));
    ck.check("counit", comonad_counit(s) == s.at(1), seq_json(s));
    bool coassoc = true;
    for (size_t l = 1; l <= n; ++l)
        for (size_t m2 = 1; l + m2 - 1 <= n; ++m2)
            for (size_t n2 = 1; l + m2 + n2 - 2 <= n; ++n2)
                coassoc = coassoc && dm[l + m2 - 2][n2 - 1] == dm[l - 1][m2 + n2 - 2];
    ck.check("delta coassociativity", coassoc, seq_json(s));

    // Adams operations on closed families
    Q av = rng.next_rational();
    Seq<Q> dirac_m(n);
    for (size_t i = 1; i <= n; ++i) dirac_m.at(i) = av.pow(i);
    bool adams_ok = adams(1, dirac_m) == av;
    for (size_t i = 2; i <= n; ++i) adams_ok = adams_ok && adams(i, dirac_m).is_zero();
    ck.check("adams on dirac", adams_ok, json{{"a", av.str()}});
    Q rate = rng.next_nonnegative_rational(), jump = rng.next_rational();
    Seq<Q> fp(n);
    for (size_t i = 1; i <= n; ++i) fp.at(i) = rate * jump.pow(i);
    Seq<Q> fpm = moments_from_cumulants(fp);
    bool adams_fp = true;
    for (size_t i = 1; i <= n; ++i) adams_fp = adams_fp && adams(i, fpm) == rate * jump.pow(i);
    ck.check("adams on free Poisson", adams_fp,
             json{{"rate", rate.str()}, {"jump", jump.str()}});
}

// ------------------------------------------------------------------ measures

// forward-generated cpd instance: random atomic rho with nonnegative masses
Seq<Q> random_cpd_cumulants(SplitMix64& rng, size_t n) {
    CharPair p;
    p.gamma = rng.next_rational();
    size_t atoms = static_cast<size_t>(rng.next_in(0, 3));
    for (size_t i = 0; i < atoms; ++i) {
        Q atom;
        bool fresh = false;
        while (!fresh) {
            atom = rng.next_rational();
            fresh = true;
            for (auto& [x, w] : p.sigma) fresh = fresh && !(x == atom);
        }
        p.sigma.emplace_back(atom, rng.next_nonnegative_rational());
    }
    return charpair_to_r(p, n);
}

void suite_measures(Checker& ck, SplitMix64& rng, size_t n) {
    Q a = rng.next_rational(), b = rng.next_rational();
    Q r = rng.next_nonnegative_rational(), s = rng.next_nonnegative_rational();
    json params = json{{"a", a.str()}, {"b", b.str()}, {"r", r.str()}, {"s", s.str()}};

    // semicircle laws: gamma_{a,r} boxplus gamma_{b,s} = gamma_{a+b, sqrt(r^2+s^2)}
    auto g1 = cumulants_of(MeasureSpec::semicircle(a, r), n);
    auto g2 = cumulants_of(MeasureSpec::semicircle(b, s), n);
    Seq<Q> gsum(n);
    gsum.at(1) = a + b;
    gsum.at(2) = (r * r + s * s) / Q(4);
    ck.check("semicircle boxplus law", g1 + g2 == gsum, params);
    // gamma boxdot gamma = gamma_{ab, rs/2}: kappa = (ab, (rs/2)^2/4)
    Seq<Q> gdot(n);
    gdot.at(1) = a * b;
    gdot.at(2) = (r * s / Q(2)) * (r * s / Q(2)) / Q(4);
    ck.check("semicircle boxdot law", hadamard(g1, g2) == gdot, params);

    // free Poisson: nu_{l,al} boxdot nu_{l',be} = nu_{ll', al*be}
    Q l1 = rng.next_nonnegative_rational(), l2 = rng.next_nonnegative_rational();
    Q al = rng.next_rational(), be = rng.next_rational();
    ck.check("free Poisson boxdot law",
             hadamard(cumulants_of(MeasureSpec::free_poisson(l1, al), n),
                      cumulants_of(MeasureSpec::free_poisson(l2, be), n)) ==
                 cumulants_of(MeasureSpec::free_poisson(l1 * l2, al * be), n),
             json{{"l1", l1.str()}, {"l2", l2.str()}});

    // dirac two-sided boxdot ideal: delta_a boxdot mu = delta_{kappa_1(mu) a}
    Seq<Q> mu = rng.next_seq(n);
    ck.check("dirac boxdot ideal",
             hadamard(cumulants_of(MeasureSpec::dirac(a), n), mu) ==
                 cumulants_of(MeasureSpec::dirac(mu.at(1) * a), n),
             seq_json(mu));

    // V laws
    if (n >= 3) {
        ck.check("V on free Poisson",
                 v_shift(cumulants_of(MeasureSpec::free_poisson(l1, al), n)) ==
                     cumulants_of(MeasureSpec::free_poisson(l1 * al * al, al), n - 2),
                 params);
        Seq<Q> nu = rng.next_seq(n);
        ck.check("V additive", v_shift(mu + nu) == v_shift(mu) + v_shift(nu), pair_json(mu, nu));
    }

    // Frobenius laws
    ck.check("f_2 on free Poisson",
             frobenius(2, cumulants_of(MeasureSpec::free_poisson(Q(1), Q(2)), n)) ==
                 cumulants_of(MeasureSpec::free_poisson(Q(1), Q(4)), n),
             params);
    ck.check("f_1 identity", frobenius(1, mu) == mu, seq_json(mu));
    Seq<Q> nu2 = rng.next_seq(n);
    ck.check("f_n boxdot endomorphism",
             frobenius(3, hadamard(mu, nu2)) == hadamard(frobenius(3, mu), frobenius(3, nu2)),
             pair_json(mu, nu2));

    // Teichmueller
    ck.check("tau multiplicative",
             hadamard(teichmuller(a, n), teichmuller(b, n)) == teichmuller(a * b, n), params);
    ck.check("tau(1) is boxdot unit", hadamard(teichmuller(Q(1), n), mu) == mu, seq_json(mu));

    // actions
    Q cc = rng.next_nonnegative_rational();
    Seq<Q> scaled_sc(n); // c.gamma_{a,r} = gamma_{ca, sqrt(c) r}: kappa = (ca, c r^2/4)
    scaled_sc.at(1) = cc * a;
    scaled_sc.at(2) = cc * r * r / Q(4);
    ck.check("scale action on semicircle", act_scale(cc, g1) == scaled_sc, params);
    ck.check("scale action matches nu boxdot",
             act_scale(cc, mu) == hadamard(cumulants_of(MeasureSpec::free_poisson(cc, Q(1)), n), mu),
             seq_json(mu));
    ck.check("shift action composes",
             act_shift(a, act_shift(b, mu)) == act_shift(a + b, mu), seq_json(mu));
    ck.check("zero shift", act_shift(Q(0), mu) == mu, seq_json(mu));
    ck.check("scale action on free Poisson",
             act_scale(cc, cumulants_of(MeasureSpec::free_poisson(l1, al), n)) ==
                 cumulants_of(MeasureSpec::free_poisson(cc * l1, al), n), params);

    // characteristic pairs: both presentations of R agree
    CharPair p;
    p.gamma = rng.next_rational();
    p.sigma = {{rng.next_rational(), rng.next_nonnegative_rational()}};
    if (rng.next_in(0, 1) == 1) {
        Q second = p.sigma[0].first + Q(1);
        p.sigma.emplace_back(second, rng.next_nonnegative_rational());
    }
    ck.check("sigma/rho presentations agree",
             rhopair_to_r(sigma_to_rho(p), n) == charpair_to_r(p, n), to_json(p));

    // cpd closure under boxplus/boxdot on forward-generated instances
    if (n >= 3) {
        Seq<Q> ka = random_cpd_cumulants(rng, n);
        Seq<Q> kb = random_cpd_cumulants(rng, n);
        ck.check("cpd accept (forward-generated)", is_cond_pos_def(ka).accepted, seq_json(ka));
        ck.check("cpd closed under boxplus", is_cond_pos_def(ka + kb).accepted, pair_json(ka, kb));
        ck.check("cpd closed under boxdot", is_cond_pos_def(hadamard(ka, kb)).accepted,
                 pair_json(ka, kb));
        // curated rejections with verified witnesses
        Seq<Q> neg(n);
        neg.at(2) = Q(-1);
        auto rej = is_cond_pos_def(neg);
        ck.check("cpd rejects negative variance",
                 !rej.accepted && rej.witness_value.sign() < 0, seq_json(neg));
    }

    // bp fibre preservation and gamma-shift action
    auto img = bp_map(p, n);
    ck.check("bp fibre preserved", img.classical_pair.gamma == p.gamma, to_json(p));
    CharPair shifted = p;
    shifted.gamma += a;
    ck.check("bp gamma-shift = kappa_1 shift",
             bp_map(shifted, n).free_cumulants == act_shift(a, img.free_cumulants), to_json(p));
    // linearity of charpair_to_r in (gamma, sigma)
    CharPair doubled = p;
    doubled.gamma = p.gamma + p.gamma;
    for (auto& [atom, mass] : doubled.sigma) mass = mass + mass;
    ck.check("charpair linearity",
             charpair_to_r(doubled, n) == charpair_to_r(p, n) + charpair_to_r(p, n), to_json(p));
}

// -------------------------------------------------------------------- convex

Seq<Q> plus_q(const Q& q, const Seq<Q>& x, const Seq<Q>& y) {
    return plus_alpha_beta(q, Q(1) - q, x, y);
}

void suite_convex(Checker& ck, SplitMix64& rng, size_t n) {
    Seq<Q> x = rng.next_seq(n), y = rng.next_seq(n), z = rng.next_seq(n);
    Q q = rng.next_unit_interval(), pq = rng.next_unit_interval();
    json ctx = json{{"p", pq.str()}, {"q", q.str()},
                    {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};

    // the four +_q axioms
    ck.check("+_q symmetry", plus_q(q, x, y) == plus_q(Q(1) - q, y, x), ctx);
    ck.check("+_q idempotent", plus_q(q, x, x) == x, ctx);
    ck.check("+_0 projection", plus_q(Q(0), x, y) == y, ctx);
    Q s = pq + (Q(1) - pq) * q;
    if (!s.is_zero())
        ck.check("+_q associativity",
                 plus_q(pq, x, plus_q(q, y, z)) == plus_q(s, plus_q(pq / s, x, y), z), ctx);

    // boxplus and boxdot distribute over +_q (cumulant level)
    ck.check("boxplus distributes over +_q",
             plus_q(q, x, y) + z == plus_q(q, x + z, y + z), ctx);
    ck.check("boxdot distributes over +_q",
             hadamard(plus_q(q, x, y), z) == plus_q(q, hadamard(x, z), hadamard(y, z)), ctx);

    // Giry algebra: linear form vs iterated fold
    Q w1 = rng.next_unit_interval() / Q(2);
    Q w2 = rng.next_unit_interval() / Q(2);
    Q w3 = Q(1) - w1 - w2;
    GiryMix mix{{w1, MeasureSpec::from_cumulants(x)},
                {w2, MeasureSpec::from_cumulants(y)},
                {w3, MeasureSpec::from_cumulants(z)}};
    Seq<Q> lin = giry_algebra(mix, n);
    Seq<Q> fold = z;
    if (!(w1 + w2).is_zero()) {
        Seq<Q> xy = plus_q(w1 / (w1 + w2), x, y);
        fold = plus_q(w1 + w2, xy, z);
    }
    ck.check("Giry fold agreement", lin == fold, ctx);
    ck.check("Giry unit law",
             giry_algebra(giry_unit(MeasureSpec::from_cumulants(x)), n) == x, ctx);
    // join flattening law
    GiryMix inner{{Q(1, 2), MeasureSpec::from_cumulants(x)},
                  {Q(1, 2), MeasureSpec::from_cumulants(y)}};
    GiryMix joined = giry_join({{Q(1, 2), inner}, {Q(1, 2), giry_unit(MeasureSpec::from_cumulants(z))}});
    ck.check("Giry join/algebra compatibility",
             giry_algebra(joined, n) ==
                 plus_q(Q(1, 2), giry_algebra(inner, n), z), ctx);

    // the moment-vs-cumulant non-mixing counterexample at N=4
    size_t n4 = 4;
    Seq<Q> dm1 = moments_of(MeasureSpec::dirac(Q(-1)), n4);
    Seq<Q> dp1 = moments_of(MeasureSpec::dirac(Q(1)), n4);
    Seq<Q> bern = mix_moments(Q(1, 2), dm1, dp1);
    Seq<Q> conv_of_mix = convolve(ConvKind::boxplus, bern, bern);
    Seq<Q> mix_of_conv = mix_moments(Q(1, 2), convolve(ConvKind::boxplus, dm1, bern),
                                     convolve(ConvKind::boxplus, dp1, bern));
    ck.check("moment-mixing counterexample is strict", !(conv_of_mix == mix_of_conv),
             pair_json(conv_of_mix, mix_of_conv));

    // star product on classical cumulants: Poisson monoid with unit rate 1
    Q lr = Q(1) + rng.next_nonnegative_rational();
    Q lr2 = Q(1) + rng.next_nonnegative_rational();
    ck.check("Poisson star law",
             star_classical(classical_cumulants(ClassicalFamily::poisson, lr, Q(0), n),
                            classical_cumulants(ClassicalFamily::poisson, lr2, Q(0), n)) ==
                 classical_cumulants(ClassicalFamily::poisson, lr * lr2, Q(0), n), ctx);
    ck.check("Poisson star unit",
             star_classical(x, classical_cumulants(ClassicalFamily::poisson, Q(1), Q(0), n)) == x,
             ctx);
    Q m1 = rng.next_rational(), v1 = rng.next_nonnegative_rational();
    Q m2 = rng.next_rational(), v2 = rng.next_nonnegative_rational();
    ck.check("normal star law",
             star_classical(classical_cumulants(ClassicalFamily::normal, m1, v1, n),
                            classical_cumulants(ClassicalFamily::normal, m2, v2, n)) ==
                 classical_cumulants(ClassicalFamily::normal, m1 * m2, v1 * v2, n), ctx);
}

// ------------------------------------------------------------------- omega_e

// checks the (Omega,E) relations on a carrier described by its operations
struct OmegaCarrier {
    std::string name;
    std::function<Seq<Q>(const Seq<Q>&, const Seq<Q>&)> add, mul;
    std::function<Seq<Q>(const Q&, const Seq<Q>&, const Seq<Q>&)> plus_q;
    std::function<Seq<Q>(const Seq<Q>&)> shift; // endomorphism for +,.,+_q
    std::function<Seq<Q>(size_t, const Seq<Q>&)> frob;
    Seq<Q> zero, one;
};

void omega_relations(Checker& ck, const OmegaCarrier& c, SplitMix64& rng, size_t n) {
    Seq<Q> x = rng.next_seq(n), y = rng.next_seq(n), z = rng.next_seq(n);
    Q q = rng.next_unit_interval(), p = rng.next_unit_interval();
    json ctx = json{{"carrier", c.name}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)},
                    {"p", p.str()}, {"q", q.str()}};
    auto tag = [&](const std::string& s) { return c.name + ": " + s; };

    // (1) commutative semiring with units 0 and 1
    ck.check(tag("+ commutative"), c.add(x, y) == c.add(y, x), ctx);
    ck.check(tag("+ associative"), c.add(c.add(x, y), z) == c.add(x, c.add(y, z)), ctx);
    ck.check(tag("+ unit"), c.add(x, c.zero) == x, ctx);
    ck.check(tag(". commutative"), c.mul(x, y) == c.mul(y, x), ctx);
    ck.check(tag(". associative"), c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z)), ctx);
    ck.check(tag(". unit"), c.mul(x, c.one) == x, ctx);
    ck.check(tag("distributivity"), c.mul(c.add(x, y), z) == c.add(c.mul(x, z), c.mul(y, z)), ctx);
    ck.check(tag(". absorbs 0"), c.mul(x, c.zero) == c.zero, ctx);

    // (2) +_q axioms
    ck.check(tag("+_q symmetry"), c.plus_q(q, x, y) == c.plus_q(Q(1) - q, y, x), ctx);
    ck.check(tag("+_q idempotent"), c.plus_q(q, x, x) == x, ctx);
    ck.check(tag("+_0 projection"), c.plus_q(Q(0), x, y) == y, ctx);
    Q s = p + (Q(1) - p) * q;
    if (!s.is_zero())
        ck.check(tag("+_q associativity"),
                 c.plus_q(p, x, c.plus_q(q, y, z)) == c.plus_q(s, c.plus_q(p / s, x, y), z), ctx);

    // (3) shift is an endomorphism for +, ., +_q
    ck.check(tag("shift respects +"), c.shift(c.add(x, y)) == c.add(c.shift(x), c.shift(y)), ctx);
    ck.check(tag("shift respects ."), c.shift(c.mul(x, y)) == c.mul(c.shift(x), c.shift(y)), ctx);
    ck.check(tag("shift respects +_q"),
             c.shift(c.plus_q(q, x, y)) == c.plus_q(q, c.shift(x), c.shift(y)), ctx);

    // (4) f_n is an endomorphism for .
    ck.check(tag("f_n respects ."), c.frob(3, c.mul(x, y)) == c.mul(c.frob(3, x), c.frob(3, y)),
             ctx);
    ck.check(tag("f_1 = id"), c.frob(1, x) == x, ctx);
}

void suite_omega_e(Checker& ck, SplitMix64& rng, size_t n) {
    // pointwise carrier A^{N*}: +,. pointwise, shift = decalage (compare on
    // the truncated common order)
    Seq<Q> ones(n), zeros(n);
    for (size_t i = 1; i <= n; ++i) ones.at(i) = Q(1);
    OmegaCarrier pointwise{
        "pointwise",
        [](const Seq<Q>& a, const Seq<Q>& b) { return a + b; },
        [](const Seq<Q>& a, const Seq<Q>& b) { return hadamard(a, b); },
        [](const Q& q, const Seq<Q>& a, const Seq<Q>& b) {
            return plus_alpha_beta(q, Q(1) - q, a, b);
        },
        [](const Seq<Q>& a) { return decalage(a); },
        [](size_t k, const Seq<Q>& a) { return frobenius(k, a); },
        zeros, ones};
    omega_relations(ck, pointwise, rng, n);

    // measure carrier in cumulant coordinates: boxplus = +, boxdot = hadamard,
    // units delta_0 and nu_{infty,1,1}; the decalage must be squared to act,
    // R^{-1} . shift^2 . R = v_shift on cumulants
    OmegaCarrier measure{
        "measures",
        [](const Seq<Q>& a, const Seq<Q>& b) { return a + b; },
        [](const Seq<Q>& a, const Seq<Q>& b) { return hadamard(a, b); },
        [](const Q& q, const Seq<Q>& a, const Seq<Q>& b) {
            return plus_alpha_beta(q, Q(1) - q, a, b);
        },
        [](const Seq<Q>& a) { return v_shift(a); },
        [](size_t k, const Seq<Q>& a) { return frobenius(k, a); },
        zeros, ones};
    omega_relations(ck, measure, rng, n);

    // the squared-shift really is the R-conjugated double decalage
    Seq<Q> m = rng.next_seq(n);
    Seq<Q> k = cumulants_from_moments(m);
    ck.check("v_shift = R^{-1} shift^2 R",
             v_shift(k) == cumulants_from_moments(
                               moments_from_cumulants(decalage(decalage(k)))),
             seq_json(m));
}

using SuiteFn = void (*)(Checker&, SplitMix64&, size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"group_laws", suite_group_laws}, {"transforms", suite_transforms},
        {"ring_diagram", suite_ring_diagram}, {"witt", suite_witt},
        {"hurwitz", suite_hurwitz}, {"measures", suite_measures},
        {"convex", suite_convex}, {"omega_e", suite_omega_e}};
    return reg;
}

} // namespace

const std::vector<std::string> suite_names = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}();

SuiteReport run_suite(const std::string& name, size_t order, size_t trials, uint64_t seed) {
    SuiteFn fn = nullptr;
    for (const auto& [n, f] : registry())
        if (n == name) fn = f;
    if (!fn) throw DomainError("unknown-suite", "unknown suite \"" + name + "\"");
    if (order < 4) throw DomainError("order-too-small", "suites need order >= 4");

    SuiteReport rep;
    rep.suite = name;
    rep.order = order;
    rep.trials = trials;
    rep.seed = seed;
    Checker ck{rep};
    auto start = std::chrono::steady_clock::now();
    SplitMix64 root(seed);
    for (size_t t = 0; t < trials; ++t) {
        SplitMix64 trial = root.split();
        fn(ck, trial, order);
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::vector<SuiteReport> run_all_suites(size_t order, size_t trials, uint64_t seed) {
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names) out.push_back(run_suite(name, order, trials, seed));
    return out;
}

json SuiteReport::to_json() const {
    json fails = json::array();
    for (const auto& f : failures)
        fails.push_back(json{{"identity", f.identity}, {"counterexample", f.counterexample}});
    return json{{"suite", suite},   {"order", order},   {"trials", trials},
                {"seed", seed},     {"checks", checks}, {"failures", fails},
                {"passed", passed()}};
}

std::string SuiteReport::render() const {
    std::string out = "suite " + suite + ": order " + std::to_string(order) + ", trials " +
                      std::to_string(trials) + ", seed " + std::to_string(seed) + ", checks " +
                      std::to_string(checks) + "\n";
    if (passed()) {
        out += "  PASS\n";
    } else {
        for (const auto& f : failures)
            out += "  FAIL " + f.identity + "\n    counterexample: " + f.counterexample.dump() +
                   "\n";
    }
    return out;
}

} // namespace fpk
