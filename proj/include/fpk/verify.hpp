#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpk/json_io.hpp"

namespace fpk {

// Report of one property suite. Failures carry full counterexample JSON so a
// failure replays without the seed. The canonical renderings exclude the
// elapsed time, keeping both output modes byte-identical across re-runs.
struct SuiteReport {
    std::string suite;
    size_t order = 0;
    size_t trials = 0;
    uint64_t seed = 0;
    size_t checks = 0;
    struct Failure {
        std::string identity;
        json counterexample;
    };
    std::vector<Failure> failures;
    long long elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    json to_json() const;
    std::string render() const;
};

extern const std::vector<std::string> suite_names;

// {group_laws, transforms, ring_diagram, witt, hurwitz, measures, convex,
// omega_e}; deterministic given (name, order, trials, seed)
SuiteReport run_suite(const std::string& name, size_t order, size_t trials, uint64_t seed);

std::vector<SuiteReport> run_all_suites(size_t order, size_t trials, uint64_t seed);

} // namespace fpk
