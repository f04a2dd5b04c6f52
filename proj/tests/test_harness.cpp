#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fpk/json_io.hpp"
#include "fpk/rng.hpp"
#include "fpk/verify.hpp"

using namespace fpk;
using Q = Rational;

TEST_CASE("splittable rng determinism and ranges") {
    SplitMix64 a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    auto c = a.split(), d = b.split();
    for (int i = 0; i < 100; ++i) CHECK(c.next() == d.next());

    SplitMix64 r(7);
    for (int i = 0; i < 200; ++i) {
        auto q = r.next_rational();
        CHECK(q.den() <= 9);
        auto nz = r.next_nonzero_rational();
        CHECK_FALSE(nz.is_zero());
        auto u = r.next_unit_interval();
        CHECK(u.sign() >= 0);
        CHECK((Q(1) - u).sign() >= 0);
        long v = r.next_in(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    auto s = r.next_unit_seq(6);
    CHECK(s.order() == 6);
    CHECK_FALSE(s.at(1).is_zero());
    CHECK(r.next_gplus_seq(5).at(1) == Q(1));
}

TEST_CASE("every suite passes and is deterministic") {
    for (auto& name : suite_names) {
        auto r1 = run_suite(name, 8, 3, 2026);
        auto r2 = run_suite(name, 8, 3, 2026);
        CHECK(r1.passed());
        CHECK(r1.checks > 0);
        CHECK(r1.render() == r2.render());
        CHECK(r1.to_json().dump() == r2.to_json().dump());
    }
}

TEST_CASE("different seeds explore different cases but still pass") {
    auto r1 = run_suite("group_laws", 8, 3, 1);
    auto r2 = run_suite("group_laws", 8, 3, 2);
    CHECK(r1.passed());
    CHECK(r2.passed());
    CHECK(r1.checks == r2.checks);
}

TEST_CASE("run_all aggregates every suite") {
    auto reports = run_all_suites(8, 2, 99);
    CHECK(reports.size() == suite_names.size());
    for (auto& r : reports) CHECK(r.passed());
}

TEST_CASE("input validation") {
    CHECK_THROWS_WITH_AS(run_suite("nope", 8, 1, 0),
                         doctest::Contains("nope"), DomainError);
    CHECK_THROWS_AS(run_suite("witt", 2, 1, 0), DomainError);
}

TEST_CASE("report shape") {
    auto r = run_suite("transforms", 8, 2, 5);
    auto j = r.to_json();
    CHECK(j["suite"] == "transforms");
    CHECK(j["order"] == 8);
    CHECK(j["trials"] == 2);
    CHECK(j["seed"] == 5);
    CHECK(j["failures"].is_array());
    auto text = r.render();
    CHECK(text.find("transforms") != std::string::npos);
    CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("json round trips") {
    CHECK(rational_from_json(to_json(Q(-7, 3))) == Q(-7, 3));

    Seq<Q> s(4);
    s.at(1) = Q(1, 2);
    s.at(3) = Q(-5);
    CHECK(seq_from_json(to_json(s)) == s);

    TruncSeries<Q> f(3);
    f.coeff(0) = Q(1);
    f.coeff(2) = Q(2, 7);
    CHECK(series_from_json(to_json(f)) == f);

    GaussianRational g(Q(1, 3), Q(-2));
    CHECK(gaussian_from_json(to_json(g)) == g);

    NCPartition p{4, {{1, 4}, {2, 3}}};
    auto p2 = ncpartition_from_json(to_json(p));
    CHECK(p2.n == 4);
    CHECK(p2.blocks == p.blocks);

    CharPair cp{Q(1, 2), {{Q(0), Q(1)}, {Q(2), Q(3)}}};
    auto cp2 = charpair_from_json(to_json(cp));
    CHECK(cp2.gamma == cp.gamma);
    CHECK(cp2.sigma == cp.sigma);

    auto spec = MeasureSpec::free_poisson(Q(2), Q(-1, 3));
    auto spec2 = measure_from_json(to_json(spec));
    CHECK(cumulants_of(spec2, 5) == cumulants_of(spec, 5));
}

TEST_CASE("json validation failures") {
    CHECK_THROWS_AS(rational_from_json(json::parse("\"1/0\"")), std::exception);
    json bad = {{"n", 3}, {"blocks", {{1, 2}, {2, 3}}}};
    CHECK_THROWS_AS(ncpartition_from_json(bad), DomainError);

    auto e = error_json(DomainError("some-code", "details here"));
    CHECK(e["error"] == "some-code");
    CHECK(e["detail"] == "details here");
}
