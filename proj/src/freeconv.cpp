#include "fpk/freeconv.hpp"

namespace fpk {

namespace {

Seq<MultiPoly> symbolic_vars(const std::string& prefix, size_t n) {
    Seq<MultiPoly> s(n);
    for (size_t i = 1; i <= n; ++i) s.at(i) = MultiPoly::var(prefix + std::to_string(i));
    return s;
}

MultiPoly check_integral(MultiPoly p) {
    if (!p.has_integer_coefficients())
        throw DomainError("non-integer-coefficient",
                          "universal polynomial came out with a fractional coefficient; "
                          "this signals a bug in the group-law evaluation");
    return p;
}

} // namespace

MultiPoly universal_polynomial(UniversalLaw law, size_t n) {
    detail::check_cap(n);
    Seq<MultiPoly> x = symbolic_vars("x", n);
    Seq<MultiPoly> y = symbolic_vars("y", n);
    switch (law) {
        case UniversalLaw::P:
            return check_integral(convolve(ConvKind::boxplus, x, y).at(n));
        case UniversalLaw::Q:
            return check_integral(convolve(ConvKind::boxtimes, x, y).at(n));
        case UniversalLaw::K:
            return check_integral(convolve(ConvKind::boxtimes_ns, x, y).at(n));
        case UniversalLaw::F_boxtimes: {
            // F_n = Q_n(x_1+1, ..., y_n+1) - 1
            MultiPoly q = universal_polynomial(UniversalLaw::Q, n);
            std::map<std::string, MultiPoly> shift;
            for (size_t i = 1; i <= n; ++i) {
                shift["x" + std::to_string(i)] = MultiPoly::var("x" + std::to_string(i)) + MultiPoly(1);
                shift["y" + std::to_string(i)] = MultiPoly::var("y" + std::to_string(i)) + MultiPoly(1);
            }
            return check_integral(q.eval<MultiPoly>(shift) - MultiPoly(1));
        }
        case UniversalLaw::F_boxtimes_plus: {
            // the x_1 = y_1 = 1 reduction: substitute before shifting
            MultiPoly q = universal_polynomial(UniversalLaw::Q, n);
            std::map<std::string, MultiPoly> shift;
            for (size_t i = 1; i <= n; ++i) {
                if (i == 1) {
                    shift["x1"] = MultiPoly(1);
                    shift["y1"] = MultiPoly(1);
                } else {
                    shift["x" + std::to_string(i)] = MultiPoly::var("x" + std::to_string(i)) + MultiPoly(1);
                    shift["y" + std::to_string(i)] = MultiPoly::var("y" + std::to_string(i)) + MultiPoly(1);
                }
            }
            return check_integral(q.eval<MultiPoly>(shift) - MultiPoly(1));
        }
    }
    throw DomainError("unknown-law", "unknown universal law");
}

} // namespace fpk
