#include "fpk/rational.hpp"

#include <ostream>

namespace fpk {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("malformed-rational", "empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("malformed-rational", "cannot parse rational: " + text);
    if (q.get_den() == 0) throw DomainError("zero-denominator", "rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

bool Rational::sqrt(Rational& out) const {
    if (sign() < 0) return false;
    if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t()))
        return false;
    mpq_class r;
    mpz_sqrt(r.get_num_mpz_t(), v_.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), v_.get_den_mpz_t());
    out = Rational(r);
    return true;
}

} // namespace fpk
