#pragma once

// Shared spectrum-table type produced by the free-particle and oscillator
// modules and consumed by the CLI (CSV/SVG) layer.

#include <optional>
#include <string>
#include <vector>

namespace spheroid {

struct LevelRow {
    int n = 0;
    std::optional<int> l;     // empty for free-particle rows
    double e0 = 0.0;          // unperturbed energy
    double de1 = 0.0;         // authoritative first-order shift
    double de1_cross = 0.0;   // independent evaluation of the same shift
    double de1_err_est = 0.0; // quadrature error estimate combined with the
                              // cross-route discrepancy
    double total() const { return e0 + de1; }
};

// Per-n aggregate: the splitting width max_l dE - min_l dE and the two
// sublevel counts (rows per n versus distinct shifted energies; they differ
// because +-l pairs stay degenerate).
struct LevelAggregate {
    int n = 0;
    double width = 0.0;
    int sublevels_nominal = 0;
    int sublevels_distinct = 0;
};

struct LevelTable {
    std::vector<LevelRow> rows;
    std::vector<LevelAggregate> aggregates;

    // Mean splitting width over n = 0..n_cut (0 where a level has one row).
    double mean_width(int n_cut) const;
};

// Recompute the per-n aggregates from the rows. Distinct shifted energies
// are counted with the given absolute tolerance.
void rebuild_aggregates(LevelTable& table, double distinct_tol = 1e-12);

// Format a double with 12 significant digits, locale-free (std::to_chars).
std::string format_sig12(double v);

// Round to the nearest double representable by the 12-digit form; used so
// JSON reports carry the same 12-digit values the CSV output does.
double round_sig12(double v);

// Fixed CSV schema: n,l,E0,dE1,E,dE1_err_est. Free rows leave l empty.
std::string to_csv(const LevelTable& table);

}  // namespace spheroid
