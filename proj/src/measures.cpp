#include "fpk/measures.hpp"

#include <set>

#include "fpk/noncrossing.hpp"

namespace fpk {

void CharPair::validate() const {
    std::set<std::string> seen;
    for (const auto& [atom, mass] : sigma) {
        if (mass.sign() < 0) throw DomainError("negative-mass", "sigma masses must be nonnegative");
        if (!seen.insert(atom.str()).second)
            throw DomainError("duplicate-atom", "sigma atoms must be distinct");
    }
}

Rational CharPair::sigma_moment(size_t k) const {
    Rational acc;
    for (const auto& [atom, mass] : sigma) acc += mass * atom.pow(k);
    return acc;
}

void MeasureSpec::validate() const {
    switch (family) {
        case MeasureFamily::semicircle:
            if (r.sign() < 0) throw DomainError("negative-radius", "semicircle needs r >= 0");
            break;
        case MeasureFamily::free_poisson:
            if (rate.sign() < 0) throw DomainError("negative-rate", "free_poisson needs rate >= 0");
            break;
        case MeasureFamily::char_pair: pair.validate(); break;
        default: break;
    }
}

MeasureSpec MeasureSpec::dirac(Rational a) {
    MeasureSpec s;
    s.family = MeasureFamily::dirac;
    s.a = std::move(a);
    return s;
}
MeasureSpec MeasureSpec::semicircle(Rational a, Rational r) {
    MeasureSpec s;
    s.family = MeasureFamily::semicircle;
    s.a = std::move(a);
    s.r = std::move(r);
    s.validate();
    return s;
}
MeasureSpec MeasureSpec::free_poisson(Rational rate, Rational jump) {
    MeasureSpec s;
    s.family = MeasureFamily::free_poisson;
    s.rate = std::move(rate);
    s.jump = std::move(jump);
    s.validate();
    return s;
}
MeasureSpec MeasureSpec::from_moments(Seq<Rational> m) {
    MeasureSpec s;
    s.family = MeasureFamily::moments;
    s.data = std::move(m);
    return s;
}
MeasureSpec MeasureSpec::from_cumulants(Seq<Rational> k) {
    MeasureSpec s;
    s.family = MeasureFamily::cumulants;
    s.data = std::move(k);
    return s;
}
MeasureSpec MeasureSpec::from_char_pair(CharPair p) {
    MeasureSpec s;
    s.family = MeasureFamily::char_pair;
    s.pair = std::move(p);
    s.validate();
    return s;
}

Seq<Rational> charpair_to_r(const CharPair& p, size_t n) {
    p.validate();
    Seq<Rational> k(n);
    if (n >= 1) k.at(1) = p.gamma + p.sigma_moment(1);
    for (size_t j = 2; j <= n; ++j) k.at(j) = p.sigma_moment(j - 2) + p.sigma_moment(j);
    return k;
}

RhoPair sigma_to_rho(const CharPair& p) {
    p.validate();
    RhoPair out;
    out.s1 = p.gamma + p.sigma_moment(1);
    for (const auto& [atom, mass] : p.sigma)
        out.rho.emplace_back(atom, mass * (Rational(1) + atom * atom));
    return out;
}

Seq<Rational> rhopair_to_r(const RhoPair& p, size_t n) {
    Seq<Rational> k(n);
    if (n >= 1) k.at(1) = p.s1;
    for (size_t j = 2; j <= n; ++j) {
        Rational m;
        for (const auto& [atom, mass] : p.rho) m += mass * atom.pow(j - 2);
        k.at(j) = m;
    }
    return k;
}

Seq<Rational> cumulants_of(const MeasureSpec& spec, size_t n) {
    spec.validate();
    Seq<Rational> k(n);
    switch (spec.family) {
        case MeasureFamily::dirac:
            if (n >= 1) k.at(1) = spec.a;
            return k;
        case MeasureFamily::semicircle:
            if (n >= 1) k.at(1) = spec.a;
            if (n >= 2) k.at(2) = spec.r * spec.r / Rational(4);
            return k;
        case MeasureFamily::free_poisson:
            for (size_t j = 1; j <= n; ++j) k.at(j) = spec.rate * spec.jump.pow(j);
            return k;
        case MeasureFamily::moments: {
            Seq<Rational> m = spec.data.truncated(n);
            return cumulants_from_moments(m);
        }
        case MeasureFamily::cumulants: return spec.data.truncated(n);
        case MeasureFamily::char_pair: return charpair_to_r(spec.pair, n);
    }
    throw DomainError("unknown-family", "unknown measure family");
}

Seq<Rational> moments_of(const MeasureSpec& spec, size_t n) {
    if (spec.family == MeasureFamily::moments) return spec.data.truncated(n);
    return moments_from_cumulants(cumulants_of(spec, n));
}

CpdResult is_cond_pos_def(const Seq<Rational>& s) {
    size_t n = s.order();
    if (n < 3) throw DomainError("order-too-small", "cpd decision needs order >= 3");
    size_t m = n / 2;
    // H_ij = s_{i+j}, 1 <= i,j <= m
    std::vector<std::vector<Rational>> h(m, std::vector<Rational>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) h[i][j] = s.at(i + j + 2);

    // Symmetric elimination: active rows tracked by original index so the
    // witness comes back in original coordinates.
    std::vector<size_t> rows(m);
    for (size_t i = 0; i < m; ++i) rows[i] = i;
    // Eliminations performed: for reconstruction we record, per step, the
    // pivot row and the multipliers used, to transport a Schur-complement
    // witness back: v_pivot = -(b^T v') / d.
    struct Step {
        size_t pivot;
        std::vector<size_t> rest;
        std::vector<Rational> b; // pivot row restricted to rest
        Rational d;              // pivot value
    };
    std::vector<Step> steps;

    auto finish_reject = [&](std::vector<Rational> v) {
        // transport through recorded Schur steps, innermost-first
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            Rational dot;
            for (size_t t = 0; t < it->rest.size(); ++t) dot += it->b[t] * v[it->rest[t]];
            v[it->pivot] = -dot / it->d;
        }
        CpdResult res;
        res.accepted = false;
        res.witness = v;
        Rational val;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                Rational hij = s.at(i + j + 2);
                val += v[i] * hij * v[j];
            }
        res.witness_value = val;
        return res;
    };

    std::vector<std::vector<Rational>> a = h;
    while (!rows.empty()) {
        size_t p = rows.front();
        Rational d = a[p][p];
        if (d.sign() < 0) {
            std::vector<Rational> v(m, Rational(0));
            v[p] = Rational(1);
            return finish_reject(std::move(v));
        }
        if (d.is_zero()) {
            // zero pivot: the whole row must vanish, else H is indefinite
            for (size_t q : rows) {
                if (q == p || a[p][q].is_zero()) continue;
                // 2x2 block [[0, b],[b, c]] with b != 0 is indefinite:
                // v = (t, -1) gives -2bt + c < 0 for suitable t
                Rational b = a[p][q];
                Rational c = a[q][q];
                std::vector<Rational> v(m, Rational(0));
                // choose t with sign(b)*t > c/(2|b|): t = (c+1)/(2b) works
                v[p] = (c + Rational(1)) / (b * Rational(2));
                v[q] = Rational(-1);
                return finish_reject(std::move(v));
            }
            rows.erase(rows.begin());
            continue;
        }
        // positive pivot: Schur complement on the remaining rows
        std::vector<size_t> rest(rows.begin() + 1, rows.end());
        Step st;
        st.pivot = p;
        st.rest = rest;
        st.d = d;
        for (size_t q : rest) st.b.push_back(a[p][q]);
        for (size_t qi : rest)
            for (size_t qj : rest) a[qi][qj] -= a[p][qi] * a[p][qj] / d;
        steps.push_back(std::move(st));
        rows = std::move(rest);
    }
    CpdResult res;
    res.accepted = true;
    return res;
}

Seq<Rational> v_shift(const Seq<Rational>& kappa) {
    if (kappa.order() < 3) throw DomainError("insufficient-order", "v_shift needs order >= 3");
    Seq<Rational> out(kappa.order() - 2);
    for (size_t j = 1; j <= out.order(); ++j) out.at(j) = kappa.at(j + 2);
    return out;
}

Seq<Rational> frobenius(size_t n, const Seq<Rational>& kappa) {
    Seq<Rational> out(kappa.order());
    for (size_t j = 1; j <= kappa.order(); ++j) out.at(j) = kappa.at(j).pow(n);
    return out;
}

Seq<Rational> teichmuller(const Rational& a, size_t n) {
    Seq<Rational> k(n);
    for (size_t j = 1; j <= n; ++j) k.at(j) = a.pow(j);
    return k;
}

Seq<Rational> act_shift(const Rational& r, const Seq<Rational>& kappa) {
    Seq<Rational> out = kappa;
    if (out.order() >= 1) out.at(1) += r;
    return out;
}

Seq<Rational> act_scale(const Rational& c, const Seq<Rational>& kappa) {
    if (c.sign() < 0) throw DomainError("negative-scale", "scale action needs c >= 0");
    Seq<Rational> out(kappa.order());
    for (size_t j = 1; j <= kappa.order(); ++j) out.at(j) = c * kappa.at(j);
    return out;
}

Seq<Rational> mix_moments(const Rational& q, const Seq<Rational>& ma, const Seq<Rational>& mb) {
    if (q.sign() < 0 || (Rational(1) - q).sign() < 0)
        throw DomainError("q-out-of-range", "mixture weight must lie in [0,1]");
    if (ma.order() != mb.order())
        throw DomainError("order-mismatch", "mix_moments needs equal orders");
    Seq<Rational> out(ma.order());
    for (size_t j = 1; j <= ma.order(); ++j)
        out.at(j) = q * ma.at(j) + (Rational(1) - q) * mb.at(j);
    return out;
}

Seq<Rational> plus_alpha_beta(const Rational& alpha, const Rational& beta,
                              const Seq<Rational>& ka, const Seq<Rational>& kb) {
    if (alpha.sign() < 0 || beta.sign() < 0)
        throw DomainError("negative-weight", "plus_alpha_beta needs alpha, beta >= 0");
    if (ka.order() != kb.order())
        throw DomainError("order-mismatch", "plus_alpha_beta needs equal orders");
    Seq<Rational> out(ka.order());
    for (size_t j = 1; j <= ka.order(); ++j) out.at(j) = alpha * ka.at(j) + beta * kb.at(j);
    return out;
}

GiryMix giry_unit(MeasureSpec spec) { return {{Rational(1), std::move(spec)}}; }

GiryMix giry_join(const std::vector<std::pair<Rational, GiryMix>>& nested) {
    GiryMix flat;
    for (const auto& [w, mix] : nested)
        for (const auto& [u, spec] : mix) flat.emplace_back(w * u, spec);
    return flat;
}

Seq<Rational> giry_algebra(const GiryMix& mix, size_t n) {
    Rational total;
    for (const auto& [w, spec] : mix) {
        if (w.sign() < 0) throw DomainError("negative-weight", "Giry weights must be nonnegative");
        total += w;
    }
    if (!(total == Rational(1)))
        throw DomainError("weight-sum", "Giry weights must sum to 1 exactly");
    Seq<Rational> acc(n);
    for (const auto& [w, spec] : mix) {
        Seq<Rational> k = cumulants_of(spec, n);
        for (size_t j = 1; j <= n; ++j) acc.at(j) += w * k.at(j);
    }
    return acc;
}

Seq<Rational> star_classical(const Seq<Rational>& c, const Seq<Rational>& d) {
    if (c.order() != d.order())
        throw DomainError("order-mismatch", "star_classical needs equal orders");
    return hadamard(c, d);
}

Seq<Rational> classical_cumulants(ClassicalFamily family, const Rational& p1, const Rational& p2,
                                  size_t n) {
    Seq<Rational> k(n);
    switch (family) {
        case ClassicalFamily::dirac:
            if (n >= 1) k.at(1) = p1;
            return k;
        case ClassicalFamily::normal:
            if (p2.sign() < 0) throw DomainError("negative-variance", "normal needs variance >= 0");
            if (n >= 1) k.at(1) = p1;
            if (n >= 2) k.at(2) = p2;
            return k;
        case ClassicalFamily::poisson:
            if (p1.sign() <= 0) throw DomainError("nonpositive-rate", "poisson needs rate > 0");
            for (size_t j = 1; j <= n; ++j) k.at(j) = p1;
            return k;
    }
    throw DomainError("unknown-family", "unknown classical family");
}

BpImage bp_map(const CharPair& p, size_t n) {
    BpImage img;
    img.free_cumulants = charpair_to_r(p, n);
    img.classical_pair = p;
    return img;
}

} // namespace fpk
