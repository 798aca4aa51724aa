#pragma once

// Command-line front end: `free`, `osc`, `levels`, `validate`, `geometry`.
// Parameters come from defaults, then a JSON config file, then the
// environment (SPHEROID_QUAD_TOL), then flags; later sources win.

#include <iosfwd>
#include <string>
#include <vector>

#include "spheroid/geometry.hpp"
#include "spheroid/numerics.hpp"

namespace spheroid::cli {

enum class Command { none, free_particle, osc, levels, validate, geometry };

struct RunConfig {
    Command command = Command::none;
    double lambda = 1.0;
    double eps = 0.1;
    double omega = 1.0;
    int n_max = 4;
    Coupling coupling = Coupling::squared;
    std::string preset = "none";  // none | fig2a | fig2b | fig2c
    std::string out;              // CSV/JSON destination; empty = stdout
    std::string svg;              // SVG destination; empty = command default
    std::vector<std::string> suites;  // validate suites; empty = all
    numerics::QuadratureSpec quad;
};

// Presets fix (lambda, omega, eps):
// fig2a = (0.8, 1.0, 0.1), fig2b = (1.0, 1.0, 0.1), fig2c = (1.0, 1.4, 0.1).
// Unknown names are a domain error.
void apply_preset(RunConfig& config, const std::string& preset);

// Executes a resolved config. Tables and reports go to config.out when set,
// otherwise to `out`; diagnostics go to `err`. Returns the exit code:
// 0 success, 1 validation or computation failure, 2 bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full argv front end (flag parsing, config file, environment, precedence),
// used directly by main().
int run_main(int argc, const char* const* argv);

}  // namespace spheroid::cli
