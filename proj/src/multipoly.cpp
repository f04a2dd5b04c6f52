#include "fpk/multipoly.hpp"

#include <sstream>

namespace fpk {

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << a.str();
            continue;
        }
        bool printed = false;
        if (!a.is_one()) {
            os << a.str();
            printed = true;
        }
        for (const auto& [v, e] : m) {
            if (printed) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

} // namespace fpk
