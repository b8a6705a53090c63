// Acceptance gate: one criterion per line, each mapped to a verification
// suite with a pinned wall-clock budget.  Exit code is the number of failed
// criteria, so a green run exits 0.  Options stay at the library defaults on
// purpose; in particular the DECOMP_MAX_N environment cap used for quick CLI
// runs has no effect here.

#include <cstdio>
#include <string>
#include <vector>

#include "decomp/suites.hpp"

namespace {

struct Criterion {
    int number;
    const char* suite;
    double budget_seconds;
    const char* what;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table{
        {1, "b2-counts", 1.0, "square complex face counts and closures"},
        {2, "b3-geometry", 5.0, "cube geometry, subdivision and cone cover"},
        {3, "order-oracle", 300.0, "trivial-set complexes equal order complexes"},
        {4, "closure-minimality", 600.0, "closure laws, minimality, face lattices"},
        {5, "product-chains", 300.0, "product closures factor through projections"},
        {6, "product-sets", 600.0, "extreme sets multiply across products"},
        {7, "nested-image", 600.0, "nested embedding image characterization"},
        {8, "bergman", 120.0, "matroid type embedding and fan counts"},
        {9, "intersection-gap", 600.0, "closed non-face intersection exists"},
        {10, "ungraded-probe", 1.0, "ungraded face poset blocks realization"},
    };
    return table;
}

} // namespace

int main() {
    decomp::SuiteOptions opt;  // pinned defaults: full scans, seed 2026,
                               // grid denominator 4, one million chains
    int failures = 0;
    for (const Criterion& c : criteria()) {
        decomp::SuiteResult r = decomp::run_suite(c.suite, opt);
        bool on_time = r.seconds <= c.budget_seconds;
        bool pass = r.pass && on_time;
        if (!pass) ++failures;
        std::printf("criterion %2d [%s]: %s (%.1fs of %.0fs budget) %s: %s\n", c.number,
                    c.suite, pass ? "PASS" : "FAIL", r.seconds, c.budget_seconds, c.what,
                    r.detail.c_str());
        if (r.pass && !on_time)
            std::printf("criterion %2d [%s]: checks passed but exceeded the time budget\n",
                        c.number, c.suite);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria().size());
    return failures;
}
