#include <iostream>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "fpk/freeconv.hpp"
#include "fpk/json_io.hpp"
#include "fpk/transforms.hpp"
#include "fpk/verify.hpp"
#include "fpk/witt.hpp"

namespace {

using namespace fpk;
using Q = Rational;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("file-not-found", "cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DomainError("malformed-json", std::string("cannot parse \"") + path + "\": " + e.what());
    }
    return j;
}

MeasureSpec load_measure(const std::string& path) { return measure_from_json(load_json(path)); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Recognize the closed-form families the parameter laws stay inside of;
// fall back to the given raw tag otherwise.
json tag_family(const Seq<Q>& kappa, const char* raw_family) {
    size_t n = kappa.order();
    bool dirac = true;
    for (size_t i = 2; i <= n; ++i) dirac = dirac && kappa.at(i).is_zero();
    if (dirac) return to_json(MeasureSpec::dirac(kappa.at(1)));
    if (n >= 2) {
        bool semicircle = kappa.at(2).sign() > 0;
        for (size_t i = 3; i <= n; ++i) semicircle = semicircle && kappa.at(i).is_zero();
        if (semicircle) {
            // gamma_{a,r} needs r = 2 sqrt(kappa_2) rational
            Q r2;
            if (kappa.at(2).sqrt(r2)) {
                MeasureSpec m = MeasureSpec::semicircle(kappa.at(1), r2 + r2);
                return to_json(m);
            }
        }
        if (!kappa.at(1).is_zero() && !kappa.at(2).is_zero()) {
            Q jump = kappa.at(2) / kappa.at(1);
            Q rate = kappa.at(1) / jump;
            bool poisson = rate.sign() >= 0;
            for (size_t i = 1; i <= n && poisson; ++i)
                poisson = kappa.at(i) == rate * jump.pow(i);
            if (poisson) return to_json(MeasureSpec::free_poisson(rate, jump));
        }
    }
    if (std::string(raw_family) == "moments")
        return to_json(MeasureSpec::from_moments(moments_from_cumulants(kappa)));
    return to_json(MeasureSpec::from_cumulants(kappa));
}

int cmd_conv(const std::string& op, const std::string& file_a, const std::string& file_b,
             size_t order) {
    MeasureSpec a = load_measure(file_a), b = load_measure(file_b);
    Seq<Q> kappa(order);
    const char* raw = "cumulants";
    if (op == "boxplus") {
        kappa = cumulants_of(a, order) + cumulants_of(b, order);
    } else if (op == "boxdot") {
        kappa = hadamard(cumulants_of(a, order), cumulants_of(b, order));
    } else if (op == "star") {
        kappa = star_classical(cumulants_of(a, order), cumulants_of(b, order));
    } else if (op == "boxtimes" || op == "boxtimesns" || op == "squareast") {
        Seq<Q> ma = moments_of(a, order), mb = moments_of(b, order);
        Seq<Q> mc(order);
        if (op == "boxtimes") mc = convolve(ConvKind::boxtimes, ma, mb);
        else if (op == "boxtimesns") mc = convolve(ConvKind::boxtimes_ns, ma, mb);
        else mc = squareast(ma, mb);
        kappa = cumulants_from_moments(mc);
        raw = "moments";
    } else {
        throw DomainError("unknown-op", "unknown conv op \"" + op + "\"");
    }
    emit(tag_family(kappa, raw));
    return 0;
}

int cmd_transform(const std::string& kind, const std::string& file, size_t order) {
    MeasureSpec spec = load_measure(file);
    Seq<Q> m = moments_of(spec, order);
    if (kind == "r") emit(to_json(r_transform(m)));
    else if (kind == "s") emit(to_json(s_transform(m)));
    else if (kind == "f") emit(to_json(f_transform(m)));
    else if (kind == "logboxtimes") emit(to_json(log_boxtimes(m)));
    else if (kind == "logboxtimesns") emit(to_json(log_boxtimes_ns(m)));
    else if (kind == "exp") emit(to_json(exp_iso(m)));
    else if (kind == "log") emit(to_json(log_iso(m)));
    else if (kind == "expnegr") {
        auto t = exp_neg_r(m);
        emit(json{{"log_torus", t.log_torus.str()}, {"gplus", to_json(t.gplus)}});
    } else if (kind == "expcircle") {
        Seq<GaussianRational> g(m.order());
        for (size_t i = 1; i <= m.order(); ++i) g.at(i) = GaussianRational(m.at(i));
        auto t = exp_circle(g);
        json entries = json::array();
        for (size_t i = 1; i <= t.gplus.order(); ++i) entries.push_back(to_json(t.gplus.at(i)));
        emit(json{{"log_torus", to_json(t.log_torus)},
                  {"gplus", json{{"order", t.gplus.order()}, {"entries", entries}}}});
    } else {
        throw DomainError("unknown-kind", "unknown transform kind \"" + kind + "\"");
    }
    return 0;
}

int cmd_poly(const std::string& law, size_t n) {
    MultiPoly p;
    if (law == "P") p = universal_polynomial(UniversalLaw::P, n);
    else if (law == "Q") p = universal_polynomial(UniversalLaw::Q, n);
    else if (law == "K") p = universal_polynomial(UniversalLaw::K, n);
    else if (law == "F") p = universal_polynomial(UniversalLaw::F_boxtimes, n);
    else if (law == "F+") p = universal_polynomial(UniversalLaw::F_boxtimes_plus, n);
    else if (law == "SW") p = witt_polynomial_law(WittLaw::S_W, n);
    else if (law == "PW") p = witt_polynomial_law(WittLaw::P_W, n);
    else throw DomainError("unknown-law", "unknown polynomial law \"" + law + "\"");
    std::cout << p.str() << "\n";
    return 0;
}

int cmd_witt(const std::string& sub, const std::string& file_a, const std::string& file_b) {
    if (sub == "ghost") emit(to_json(ghost(seq_from_json(load_json(file_a)))));
    else if (sub == "ah") emit(to_json(artin_hasse(seq_from_json(load_json(file_a)))));
    else if (sub == "add")
        emit(to_json(witt_add(seq_from_json(load_json(file_a)), seq_from_json(load_json(file_b)))));
    else if (sub == "mul")
        emit(to_json(witt_mul(seq_from_json(load_json(file_a)), seq_from_json(load_json(file_b)))));
    else throw DomainError("unknown-op", "unknown witt op \"" + sub + "\"");
    return 0;
}

int cmd_verify(const std::string& suite, size_t order, size_t trials, uint64_t seed,
               bool as_json) {
    std::vector<SuiteReport> reports;
    if (suite == "all") reports = run_all_suites(order, trials, seed);
    else reports.push_back(run_suite(suite, order, trials, seed));
    bool failed = false;
    if (as_json) {
        json out = json::array();
        for (const auto& r : reports) {
            out.push_back(r.to_json());
            failed = failed || !r.passed();
        }
        emit(out);
    } else {
        for (const auto& r : reports) {
            std::cout << r.render();
            failed = failed || !r.passed();
        }
    }
    return failed ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic kernel for one-dimensional free probability"};
    app.require_subcommand(1);

    // conv
    std::string conv_op, conv_a, conv_b;
    size_t conv_order = 8;
    auto* conv = app.add_subcommand("conv", "Convolve two measures");
    conv->add_option("--op", conv_op, "boxplus|boxtimes|boxtimesns|boxdot|squareast|star")
        ->required();
    conv->add_option("a", conv_a, "first measure JSON file")->required();
    conv->add_option("b", conv_b, "second measure JSON file")->required();
    conv->add_option("--order", conv_order, "truncation order");

    // transform
    std::string tr_kind, tr_file;
    size_t tr_order = 8;
    auto* tr = app.add_subcommand("transform", "Apply a linearizing transform");
    tr->add_option("--kind", tr_kind,
                   "r|s|f|logboxtimes|logboxtimesns|exp|log|expnegr|expcircle")
        ->required();
    tr->add_option("input", tr_file, "measure JSON file")->required();
    tr->add_option("--order", tr_order, "truncation order");

    // poly
    std::string poly_law;
    size_t poly_n = 1;
    auto* poly = app.add_subcommand("poly", "Print a universal polynomial");
    poly->add_option("--law", poly_law, "P|Q|K|F|F+|SW|PW")->required();
    poly->add_option("--n", poly_n, "component index")->required();

    // witt
    std::string witt_op, witt_a, witt_b;
    auto* witt = app.add_subcommand("witt", "Witt vector operations");
    witt->add_option("op", witt_op, "ghost|add|mul|ah")->required();
    witt->add_option("a", witt_a, "Seq JSON file")->required();
    witt->add_option("b", witt_b, "second Seq JSON file (add/mul)");

    // measure
    std::string me_op, me_file;
    size_t me_order = 8, me_n = 2;
    std::string me_shift, me_scale, me_a;
    auto* me = app.add_subcommand("measure", "Measure calculus");
    me->add_option("op", me_op, "cumulants|moments|cpd|act|v|frob|teich")->required();
    me->add_option("input", me_file, "measure JSON file");
    me->add_option("--order", me_order, "truncation order");
    me->add_option("--n", me_n, "Frobenius index");
    me->add_option("--shift", me_shift, "shift amount (act)");
    me->add_option("--scale", me_scale, "scale factor (act)");
    me->add_option("--a", me_a, "Teichmueller parameter");

    // verify
    std::string vf_suite;
    size_t vf_order = 8, vf_trials = 100;
    uint64_t vf_seed = 42;
    bool vf_json = false;
    auto* vf = app.add_subcommand("verify", "Run property suites");
    vf->add_option("--suite", vf_suite, "suite name or \"all\"")->required();
    vf->add_option("--order", vf_order, "truncation order");
    vf->add_option("--trials", vf_trials, "trials per suite");
    vf->add_option("--seed", vf_seed, "PRNG seed");
    vf->add_flag("--json", vf_json, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (conv->parsed()) return cmd_conv(conv_op, conv_a, conv_b, conv_order);
        if (tr->parsed()) return cmd_transform(tr_kind, tr_file, tr_order);
        if (poly->parsed()) return cmd_poly(poly_law, poly_n);
        if (witt->parsed()) {
            if ((witt_op == "add" || witt_op == "mul") && witt_b.empty())
                throw fpk::DomainError("missing-argument", "witt " + witt_op + " needs two files");
            return cmd_witt(witt_op, witt_a, witt_b);
        }
        if (me->parsed()) {
            if (me_op == "teich") {
                if (me_a.empty()) throw fpk::DomainError("missing-argument", "teich needs --a");
                emit(to_json(teichmuller(Q::parse(me_a), me_order)));
                return 0;
            }
            if (me_file.empty())
                throw fpk::DomainError("missing-argument", "measure " + me_op + " needs an input file");
            MeasureSpec spec = load_measure(me_file);
            if (me_op == "cumulants") emit(to_json(cumulants_of(spec, me_order)));
            else if (me_op == "moments") emit(to_json(moments_of(spec, me_order)));
            else if (me_op == "cpd") {
                auto res = is_cond_pos_def(cumulants_of(spec, me_order));
                json witness = json::array();
                for (const auto& w : res.witness) witness.push_back(w.str());
                emit(json{{"accepted", res.accepted},
                          {"witness", witness},
                          {"witness_value", res.witness_value.str()}});
            } else if (me_op == "act") {
                Seq<Q> k = cumulants_of(spec, me_order);
                if (!me_shift.empty()) k = act_shift(Q::parse(me_shift), k);
                if (!me_scale.empty()) k = act_scale(Q::parse(me_scale), k);
                emit(to_json(k));
            } else if (me_op == "v") {
                emit(to_json(v_shift(cumulants_of(spec, me_order + 2))));
            } else if (me_op == "frob") {
                emit(to_json(frobenius(me_n, cumulants_of(spec, me_order))));
            } else {
                throw fpk::DomainError("unknown-op", "unknown measure op \"" + me_op + "\"");
            }
            return 0;
        }
        if (vf->parsed()) return cmd_verify(vf_suite, vf_order, vf_trials, vf_seed, vf_json);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cout << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    } catch (const fpk::DomainError& e) {
        std::cout << error_json(e).dump() << "\n";
        return 1;
    }
}
