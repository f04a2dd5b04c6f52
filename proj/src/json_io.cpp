#include "fpk/json_io.hpp"

namespace fpk {

namespace {

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw DomainError("malformed-json", std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::string require_string(const json& j, const char* key) {
    json v = require(j, key);
    if (!v.is_string()) throw DomainError("malformed-json", std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw DomainError("malformed-json", "rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

json to_json(const GaussianRational& z) {
    return json{{"re", z.re.str()}, {"im", z.im.str()}};
}

GaussianRational gaussian_from_json(const json& j) {
    return {Rational::parse(require_string(j, "re")), Rational::parse(require_string(j, "im"))};
}

json to_json(const Seq<Rational>& s) {
    json entries = json::array();
    for (size_t i = 1; i <= s.order(); ++i) entries.push_back(s.at(i).str());
    return json{{"order", s.order()}, {"entries", entries}};
}

Seq<Rational> seq_from_json(const json& j) {
    json entries = require(j, "entries");
    json order = require(j, "order");
    if (!entries.is_array() || !order.is_number_unsigned() ||
        entries.size() != order.get<size_t>())
        throw DomainError("malformed-json", "Seq needs \"order\" matching the length of \"entries\"");
    Seq<Rational> s(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) s.at(i + 1) = rational_from_json(entries.at(i));
    return s;
}

json to_json(const TruncSeries<Rational>& f) {
    json coeffs = json::array();
    for (size_t i = 0; i <= f.order(); ++i) coeffs.push_back(f.coeff(i).str());
    return json{{"order", f.order()}, {"coeffs", coeffs}};
}

TruncSeries<Rational> series_from_json(const json& j) {
    json coeffs = require(j, "coeffs");
    json order = require(j, "order");
    if (!coeffs.is_array() || !order.is_number_unsigned() || coeffs.empty() ||
        coeffs.size() != order.get<size_t>() + 1)
        throw DomainError("malformed-json",
                          "series needs \"order\" N and exactly N+1 \"coeffs\"");
    TruncSeries<Rational> f(coeffs.size() - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) f.coeff(i) = rational_from_json(coeffs.at(i));
    return f;
}

json to_json(const NCPartition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) blocks.push_back(b);
    return json{{"n", p.n}, {"blocks", blocks}};
}

NCPartition ncpartition_from_json(const json& j) {
    NCPartition p;
    json n = require(j, "n");
    json blocks = require(j, "blocks");
    if (!n.is_number_unsigned() || !blocks.is_array())
        throw DomainError("malformed-json", "NCPartition needs \"n\" and \"blocks\"");
    p.n = n.get<size_t>();
    for (const auto& b : blocks) p.blocks.push_back(b.get<std::vector<int>>());
    if (!p.is_valid()) throw DomainError("invalid-partition", "blocks do not form a non-crossing partition");
    return p;
}

json to_json(const CharPair& p) {
    json sigma = json::array();
    for (const auto& [atom, mass] : p.sigma)
        sigma.push_back(json{{"atom", atom.str()}, {"mass", mass.str()}});
    return json{{"gamma", p.gamma.str()}, {"sigma", sigma}};
}

CharPair charpair_from_json(const json& j) {
    CharPair p;
    p.gamma = Rational::parse(require_string(j, "gamma"));
    json sigma = require(j, "sigma");
    if (!sigma.is_array()) throw DomainError("malformed-json", "\"sigma\" must be an array");
    for (const auto& e : sigma)
        p.sigma.emplace_back(Rational::parse(require_string(e, "atom")),
                             Rational::parse(require_string(e, "mass")));
    p.validate();
    return p;
}

json to_json(const MeasureSpec& spec) {
    switch (spec.family) {
        case MeasureFamily::dirac: return json{{"family", "dirac"}, {"a", spec.a.str()}};
        case MeasureFamily::semicircle:
            return json{{"family", "semicircle"}, {"a", spec.a.str()}, {"r", spec.r.str()}};
        case MeasureFamily::free_poisson:
            return json{{"family", "free_poisson"}, {"rate", spec.rate.str()}, {"jump", spec.jump.str()}};
        case MeasureFamily::moments: {
            json m = to_json(spec.data);
            return json{{"family", "moments"}, {"order", m.at("order")}, {"entries", m.at("entries")}};
        }
        case MeasureFamily::cumulants: {
            json m = to_json(spec.data);
            return json{{"family", "cumulants"}, {"order", m.at("order")}, {"entries", m.at("entries")}};
        }
        case MeasureFamily::char_pair: {
            json p = to_json(spec.pair);
            return json{{"family", "char_pair"}, {"gamma", p.at("gamma")}, {"sigma", p.at("sigma")}};
        }
    }
    throw DomainError("unknown-family", "unknown measure family");
}

MeasureSpec measure_from_json(const json& j) {
    std::string family = require_string(j, "family");
    if (family == "dirac") return MeasureSpec::dirac(Rational::parse(require_string(j, "a")));
    if (family == "semicircle")
        return MeasureSpec::semicircle(Rational::parse(require_string(j, "a")),
                                       Rational::parse(require_string(j, "r")));
    if (family == "free_poisson")
        return MeasureSpec::free_poisson(Rational::parse(require_string(j, "rate")),
                                         Rational::parse(require_string(j, "jump")));
    if (family == "moments") return MeasureSpec::from_moments(seq_from_json(j));
    if (family == "cumulants") return MeasureSpec::from_cumulants(seq_from_json(j));
    if (family == "char_pair") return MeasureSpec::from_char_pair(charpair_from_json(j));
    throw DomainError("unknown-family", "unknown measure family \"" + family + "\"");
}

json error_json(const DomainError& e) {
    return json{{"error", e.code()}, {"detail", e.what()}};
}

} // namespace fpk
