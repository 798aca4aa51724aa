#pragma once

// Runtime self-check suites behind the `validate` CLI subcommand: for each
// module a compact set of invariant checks (closed forms against quadrature,
// identity cross-routes, grid oracles), reported as JSON.

#include <string>
#include <vector>

namespace spheroid::validate {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Suite {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;
};

struct Report {
    std::vector<Suite> suites;
    bool pass = false;
};

// Suites available to run, in canonical order:
// specfun, numerics, geometry, free, osc, oracle.
std::vector<std::string> suite_names();

// Runs one named suite. Unknown name is a domain error.
Suite run_suite(const std::string& name);

// Runs the given suites ("all" or empty selects every suite) and aggregates
// the report-level pass flag.
Report run(const std::vector<std::string>& names);

std::string to_json(const Report& r);

}  // namespace spheroid::validate
