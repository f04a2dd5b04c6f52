#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fpk/error.hpp"

namespace fpk {

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1. Backed by GMP so coefficient growth (Catalan-sized
// at order 12+) never overflows.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                        // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DomainError("zero-denominator", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or "p"; sign on the numerator.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division-by-zero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DomainError("division-by-zero", "inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(unsigned long e) const;

    // If *this is the square of a rational, stores the nonnegative root in
    // `out` and returns true.
    bool sqrt(Rational& out) const;

    // Canonical text form: "p/q", or "p" when q = 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational binomial(unsigned long n, unsigned long k);

// Ring contract used by all generic series/sequence code. Specializations
// provide exact equality via operator==, the usual arithmetic operators,
// construction from small integers, and a partial inverse. `contains_q`
// marks rings in which division by a nonzero integer is total.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool contains_q = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static bool is_unit(const Rational& r) { return !r.is_zero(); }
    static Rational inverse(const Rational& r) { return r.inverse(); }
    static Rational div_int(const Rational& r, long n) { return r / Rational(n); }
    static Rational scale(const Rational& r, const Rational& q) { return r * q; }
};

} // namespace fpk
