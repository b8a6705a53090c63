#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace decomp {

// Knobs for the verification suites.  max_n = 0 keeps each suite's pinned
// scan size; positive values shrink the exhaustive scans (never enlarge
// them), which is what the CLI exposes for quick runs.  The acceptance
// binary always runs with the defaults.
struct SuiteOptions {
    int max_n = 0;
    std::uint64_t seed = 2026;
    int grid_denominator = 4;
    std::size_t max_chains = 1000000;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The ten suites, in their canonical order.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// `which` is "all" or a comma-separated list of suite names.
std::vector<SuiteResult> run_suites(const std::string& which, const SuiteOptions& opt);

std::string format_suite_result(const SuiteResult& r);

} // namespace decomp
