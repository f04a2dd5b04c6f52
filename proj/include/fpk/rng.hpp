#pragma once

#include <cstdint>

#include "fpk/rational.hpp"
#include "fpk/series.hpp"

namespace fpk {

// SplitMix64 (Steele, Lea & Flood 2014): a 64-bit PRNG with a trivially
// splittable state, used for all randomized suites. Deterministic across
// platforms; splitting gives independent per-trial streams.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0x633d5c4a8f2e1b37ULL); }

    // uniform in [lo, hi]
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    // numerator in [-9, 9], denominator in [1, 9]: small exact values that
    // keep symbolic blowup bounded while exercising nontrivial arithmetic
    Rational next_rational() { return Rational(next_in(-9, 9), next_in(1, 9)); }

    Rational next_nonzero_rational() {
        for (;;) {
            Rational r = next_rational();
            if (!r.is_zero()) return r;
        }
    }

    Rational next_nonnegative_rational() { return Rational(next_in(0, 9), next_in(1, 9)); }

    // uniform rational in [0, 1]
    Rational next_unit_interval() {
        long d = next_in(1, 9);
        return Rational(next_in(0, d), d);
    }

    Seq<Rational> next_seq(size_t order) {
        Seq<Rational> s(order);
        for (size_t i = 1; i <= order; ++i) s.at(i) = next_rational();
        return s;
    }

    // a sequence with invertible first entry (admissible for S/F transforms)
    Seq<Rational> next_unit_seq(size_t order) {
        Seq<Rational> s = next_seq(order);
        s.at(1) = next_nonzero_rational();
        return s;
    }

    // a G_+ point: first entry exactly 1
    Seq<Rational> next_gplus_seq(size_t order) {
        Seq<Rational> s = next_seq(order);
        s.at(1) = Rational(1);
        return s;
    }

private:
    uint64_t state_;
};

} // namespace fpk
