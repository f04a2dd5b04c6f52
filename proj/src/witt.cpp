#include "fpk/witt.hpp"

namespace fpk {

MultiPoly witt_polynomial_law(WittLaw which, size_t n) {
    Seq<MultiPoly> x(n), y(n);
    for (size_t i = 1; i <= n; ++i) {
        x.at(i) = MultiPoly::var("x" + std::to_string(i));
        y.at(i) = MultiPoly::var("y" + std::to_string(i));
    }
    WittVector<MultiPoly> z =
        which == WittLaw::S_W ? witt_add(x, y) : witt_mul(x, y);
    MultiPoly p = z.at(n);
    if (!p.has_integer_coefficients())
        throw DomainError("non-integer-coefficient",
                          "Witt law polynomial came out with a fractional coefficient; "
                          "this signals a bug in the ghost conjugation");
    return p;
}

} // namespace fpk
