#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpk/error.hpp"
#include "fpk/rational.hpp"

namespace fpk {

// Variables are names like "x1", "x12", "y3". Ordering is (letter prefix,
// numeric index), so x1 < x2 < ... < y1 < y2 < ... The grading weight of a
// variable is its numeric index (deg(x_i) = deg(y_i) = i), 1 if unindexed.
struct poly_var {
    static std::pair<std::string, unsigned long> split(const std::string& name) {
        size_t i = name.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
        unsigned long idx = (i < name.size()) ? std::strtoul(name.c_str() + i, nullptr, 10) : 0;
        return {name.substr(0, i), idx};
    }
    static bool less(const std::string& a, const std::string& b) {
        auto pa = split(a), pb = split(b);
        if (pa.first != pb.first) return pa.first < pb.first;
        return pa.second < pb.second;
    }
    static unsigned long weight(const std::string& name) {
        unsigned long idx = split(name).second;
        return idx == 0 ? 1 : idx;
    }
};

struct poly_var_less {
    bool operator()(const std::string& a, const std::string& b) const { return poly_var::less(a, b); }
};

// Sparse exponent vector: variable name -> positive exponent, iterated in
// variable order.
using Monomial = std::map<std::string, unsigned long, poly_var_less>;

// Sparse multivariate polynomial over the rationals. Terms are kept in
// graded-lexicographic order (total weight ascending, then ascending
// exponent comparison in variable order), which fixes canonical printing.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long c) {                               // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[Monomial{}] = Rational(c);
    }
    MultiPoly(const Rational& c) {                    // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }

    static MultiPoly var(const std::string& name, unsigned long exp = 1) {
        MultiPoly p;
        if (exp == 0) return MultiPoly(1);
        Monomial m;
        m[name] = exp;
        p.terms_[m] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    static unsigned long monomial_weight(const Monomial& m) {
        unsigned long w = 0;
        for (const auto& [v, e] : m) w += poly_var::weight(v) * e;
        return w;
    }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Exact evaluation in any commutative ring R; the assignment must cover
    // every variable occurring in the polynomial.
    template <class R, class Map>
    R eval(const Map& assignment) const {
        R acc = ring_traits<R>::zero();
        for (const auto& [m, c] : terms_) {
            R t = ring_traits<R>::one();
            for (const auto& [v, e] : m) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw DomainError("missing-variable", "no value assigned to variable " + v);
                for (unsigned long k = 0; k < e; ++k) t = t * it->second;
            }
            acc = acc + ring_traits<R>::scale(t, c);
        }
        return acc;
    }

    // True iff every term has x-variable weight sum == x_total and
    // y-variable weight sum == y_total, under deg(x_i) = deg(y_i) = i.
    bool is_bihomogeneous(unsigned long x_total, unsigned long y_total) const {
        for (const auto& [m, c] : terms_) {
            (void)c;
            unsigned long wx = 0, wy = 0;
            for (const auto& [v, e] : m) {
                auto [base, idx] = poly_var::split(v);
                unsigned long w = (idx == 0 ? 1 : idx) * e;
                if (base == "y")
                    wy += w;
                else
                    wx += w;
            }
            if (wx != x_total || wy != y_total) return false;
        }
        return true;
    }

    // Single total grading (x and y weights combined).
    bool is_homogeneous(unsigned long total) const {
        for (const auto& [m, c] : terms_) {
            (void)c;
            if (monomial_weight(m) != total) return false;
        }
        return true;
    }

    bool has_integer_coefficients() const {
        for (const auto& [m, c] : terms_) {
            (void)m;
            if (!c.is_integer()) return false;
        }
        return true;
    }

    // Canonical text form, e.g. "x2*y1^2 + x1^2*y2 - x1^2*y1^2".
    std::string str() const;

    const auto& terms() const { return terms_; }

private:
    struct grlex_less {
        bool operator()(const Monomial& a, const Monomial& b) const {
            unsigned long wa = monomial_weight(a), wb = monomial_weight(b);
            if (wa != wb) return wa < wb;
            // merge-walk in variable order, ascending exponent comparison
            auto ia = a.begin(), ib = b.begin();
            while (ia != a.end() || ib != b.end()) {
                if (ia == a.end()) return true; // a has exponent 0 at b's next var
                if (ib == b.end()) return false;
                if (ia->first == ib->first) {
                    if (ia->second != ib->second) return ia->second < ib->second;
                    ++ia;
                    ++ib;
                } else if (poly_var::less(ia->first, ib->first)) {
                    return false; // a has a positive exponent where b has 0
                } else {
                    return true;
                }
            }
            return false;
        }
    };

    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational, grlex_less> terms_;
};

template <>
struct ring_traits<MultiPoly> {
    static constexpr bool contains_q = true;
    static MultiPoly zero() { return MultiPoly(0); }
    static MultiPoly one() { return MultiPoly(1); }
    static MultiPoly from_int(long n) { return MultiPoly(n); }
    static bool is_unit(const MultiPoly& p) { return p.is_constant() && !p.is_zero(); }
    static MultiPoly inverse(const MultiPoly& p) {
        if (!is_unit(p))
            throw DomainError("non-invertible", "only nonzero constants are invertible in a polynomial ring");
        return MultiPoly(p.constant_term().inverse());
    }
    static MultiPoly div_int(const MultiPoly& p, long n) {
        return scale(p, Rational(1, n));
    }
    static MultiPoly scale(const MultiPoly& p, const Rational& q) {
        return p * MultiPoly(q);
    }
};

} // namespace fpk
