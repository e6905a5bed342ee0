#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyhull/cyclic.hpp"

namespace cyhull {

struct SuiteResult {
    std::string name;
    uint64_t pass = 0;
    uint64_t fail = 0;
    std::string counterexample;  // first failing case, empty when clean
    std::string note;            // free-form extra (counts found, etc.)

    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    void ok() { ++pass; }
    void bad(const std::string& what) {
        if (fail == 0) counterexample = what;
        ++fail;
    }
};

bool all_pass(const std::vector<SuiteResult>& results);

/// Property suites for cyclic codes of one (q, n): factorization identities,
/// the self-reciprocal/self-paired bridge, hull/LCD formulas against the
/// oracle, LCP and intersection checks. Exhaustive over all 2^t codes below
/// the enumeration threshold, sampled above it.
std::vector<SuiteResult> run_code_suites(const CyclicSystem& sys, uint64_t pair_samples,
                                         uint64_t seed);

/// Trace-representation suites for n = q^m - 1: row-space equality between
/// the trace route and the generator route for every basic dual zero, the
/// vanishing criterion against direct evaluation on single-term and random
/// multi-term specs, normal-element independence, and the scan for
/// one-dimensional hulls (none may exist over F_2 or F_3).
std::vector<SuiteResult> run_trace_suites(const CyclicSystem& sys, uint64_t random_specs,
                                          uint64_t seed);

}  // namespace cyhull
