#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fpk/multipoly.hpp"
#include "fpk/noncrossing.hpp"
#include "fpk/rng.hpp"

using namespace fpk;
using Q = Rational;

namespace {

Seq<Q> seq(std::initializer_list<long> xs) {
    Seq<Q> s(xs.size());
    size_t i = 1;
    for (long x : xs) s.at(i++) = Q(x);
    return s;
}

bool brute_force_noncrossing(const NCPartition& p) {
    std::vector<int> block_of(p.n + 1, -1);
    for (size_t b = 0; b < p.blocks.size(); ++b)
        for (int v : p.blocks[b]) block_of[size_t(v)] = int(b);
    for (size_t a = 1; a <= p.n; ++a)
        for (size_t b = a + 1; b <= p.n; ++b)
            for (size_t c = b + 1; c <= p.n; ++c)
                for (size_t d = c + 1; d <= p.n; ++d)
                    if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
                        block_of[a] != block_of[b])
                        return false;
    return true;
}

}  // namespace

TEST_CASE("enumeration counts equal Catalan numbers, against a brute-force filter") {
    const size_t catalan[] = {0, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (size_t n = 1; n <= 8; ++n) {
        auto nc = enumerate_nc(n);
        CHECK(nc.size() == catalan[n]);
        // independent oracle: filter all set partitions by the crossing test
        size_t count = 0;
        for (auto& p : all_set_partitions(n))
            if (brute_force_noncrossing(p)) ++count;
        CHECK(count == catalan[n]);
        // every enumerated partition is valid, non-crossing, and distinct
        std::set<std::string> keys;
        for (auto& p : nc) {
            CHECK(p.is_valid());
            CHECK(brute_force_noncrossing(p));
            std::string key;
            for (auto& b : p.blocks) {
                for (int v : b) key += std::to_string(v) + ",";
                key += ";";
            }
            CHECK(keys.insert(key).second);
        }
    }
}

TEST_CASE("enumeration edge cases and cap") {
    auto nc1 = enumerate_nc(1);
    REQUIRE(nc1.size() == 1);
    CHECK(nc1[0].blocks == std::vector<std::vector<int>>{{1}});
    CHECK_THROWS_WITH_AS(enumerate_nc(nc_cap() + 1), doctest::Contains("cap"),
                         DomainError);
}

TEST_CASE("kreweras complement") {
    for (size_t n = 1; n <= 8; ++n) {
        std::set<std::string> images;
        for (auto& p : enumerate_nc(n)) {
            auto k = kreweras(p);
            CHECK(k.is_valid());
            CHECK(p.block_count() + k.block_count() == n + 1);
            std::string key;
            for (auto& b : k.blocks) {
                for (int v : b) key += std::to_string(v) + ",";
                key += ";";
            }
            images.insert(key);
        }
        // a bijection on NC(n)
        CHECK(images.size() == enumerate_nc(n).size());
    }
    // extremes: K(all singletons) = one block, K(one block) = all singletons
    NCPartition zero{4, {{1}, {2}, {3}, {4}}};
    NCPartition one{4, {{1, 2, 3, 4}}};
    CHECK(kreweras(zero).block_count() == 1);
    CHECK(kreweras(one).block_count() == 4);
}

TEST_CASE("boxtimes_ns kernel: printed symbolic forms") {
    Seq<MultiPoly> x(3), y(3);
    for (size_t i = 1; i <= 3; ++i) {
        x.at(i) = MultiPoly::var("x" + std::to_string(i));
        y.at(i) = MultiPoly::var("y" + std::to_string(i));
    }
    CHECK(boxtimes_ns_kernel(x, y, 2).str() == "x2*y1^2 + x1^2*y2");
    CHECK(boxtimes_ns_kernel(x, y, 3).str() ==
          "x3*y1^3 + 3*x1*x2*y1*y2 + x1^3*y3");
    // symmetry K_n(x,y) = K_n(y,x)
    for (size_t n = 1; n <= 3; ++n)
        CHECK(boxtimes_ns_kernel(x, y, n) == boxtimes_ns_kernel(y, x, n));
    // unit on the right: kernel(f, (1,0,0), n) = f_n
    Seq<MultiPoly> u(3);
    u.at(1) = MultiPoly(1);
    for (size_t n = 1; n <= 3; ++n) CHECK(boxtimes_ns_kernel(x, u, n) == x.at(n));
}

TEST_CASE("moments from cumulants and back") {
    CHECK(moments_from_cumulants(seq({0, 1, 0, 0, 0, 0})) ==
          seq({0, 1, 0, 2, 0, 5}));
    CHECK(moments_from_cumulants(seq({1, 1, 1, 1})) == seq({1, 2, 5, 14}));
    // Dirac: kappa = (a,0,...) -> moments a^n
    Seq<Q> d(5);
    d.at(1) = Q(3);
    auto dm = moments_from_cumulants(d);
    for (size_t i = 1; i <= 5; ++i) CHECK(dm.at(i) == Q(3).pow(i));

    CHECK(cumulants_from_moments(seq({0, 1, 0, 2, 0, 5})) ==
          seq({0, 1, 0, 0, 0, 0}));
    CHECK(cumulants_from_moments(seq({1, 2, 5, 14})) == seq({1, 1, 1, 1}));

    // mutually inverse on random rational sequences, N = 10
    SplitMix64 rng(2024);
    for (int t = 0; t < 20; ++t) {
        auto m = rng.next_seq(10);
        CHECK(moments_from_cumulants(cumulants_from_moments(m)) == m);
        CHECK(cumulants_from_moments(moments_from_cumulants(m)) == m);
    }
}

TEST_CASE("moeb vector") {
    CHECK(moeb_vector(6) == seq({1, -1, 2, -5, 14, -42}));
    CHECK(moeb_vector(1) == seq({1}));
    // defining property: Zeta boxtimes_ns Moeb = (1,0,...,0)
    auto zeta = seq({1, 1, 1, 1, 1, 1});
    auto mv = moeb_vector(6);
    for (size_t n = 1; n <= 6; ++n)
        CHECK(boxtimes_ns_kernel(zeta, mv, n) == (n == 1 ? Q(1) : Q(0)));
}
