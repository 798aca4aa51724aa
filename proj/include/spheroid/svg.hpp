#pragma once

// Static two-column level diagram: unperturbed energies on the left,
// shifted energies on the right, dashed connectors per (n, l) class.

#include <string>

#include "spheroid/level_table.hpp"

namespace spheroid {

// Renders the diagram; `base` supplies the left column (its E0 values) and
// `perturbed` the right column (its totals). The caller guarantees the two
// tables describe the same system (same lambda and omega).
std::string render_level_svg(const LevelTable& base, const LevelTable& perturbed);

// Renders and writes to `path`; throws std::runtime_error when the path is
// not writable.
void emit_level_svg(const LevelTable& base, const LevelTable& perturbed,
                    const std::string& path);

}  // namespace spheroid
