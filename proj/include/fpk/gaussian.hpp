#pragma once

#include <string>

#include "fpk/rational.hpp"

namespace fpk {

// The field Q(i), componentwise canonical. Carries the scalar i needed by
// the circle-valued exponential morphism.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}                // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }

    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("division-by-zero", "inverse of zero in Q(i)");
        Rational n = norm();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        return re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "*i";
    }
};

template <>
struct ring_traits<GaussianRational> {
    static constexpr bool contains_q = true;
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_int(long n) { return GaussianRational(n); }
    static bool is_unit(const GaussianRational& z) { return !z.is_zero(); }
    static GaussianRational inverse(const GaussianRational& z) { return z.inverse(); }
    static GaussianRational div_int(const GaussianRational& z, long n) {
        return {ring_traits<Rational>::div_int(z.re, n), ring_traits<Rational>::div_int(z.im, n)};
    }
    static GaussianRational scale(const GaussianRational& z, const Rational& q) {
        return {z.re * q, z.im * q};
    }
};

} // namespace fpk
