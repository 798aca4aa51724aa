#include "spheroid/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace spheroid {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 432.0;
constexpr double kLeftX0 = 96.0;
constexpr double kLeftX1 = 252.0;
constexpr double kRightX0 = 388.0;
constexpr double kRightX1 = 544.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// One drawn line in a column: an energy plus the labels of the rows on it.
struct Level {
    double energy = 0.0;
    std::string label;
};

std::string l_class_label(const std::set<int>& abs_ls, bool has_l) {
    if (!has_l) return "";
    std::string out;
    for (int al : abs_ls) {
        if (!out.empty()) out += ",";
        out += al == 0 ? "l=0" : "l=±" + std::to_string(al);
    }
    return out;
}

}  // namespace

std::string render_level_svg(const LevelTable& base, const LevelTable& perturbed) {
    // Left column: one line per n (E0 is l-independent). Right column: one
    // line per distinct shifted energy within each n, keyed by the 12-digit
    // rounded value so degenerate +-l rows collapse onto one line.
    std::map<int, double> left;
    for (const auto& row : base.rows) left[row.n] = row.e0;

    struct RightKey {
        int n;
        double energy;
        bool operator<(const RightKey& o) const {
            if (n != o.n) return n < o.n;
            return energy < o.energy;
        }
    };
    std::map<RightKey, std::set<int>> right_groups;
    bool has_l = false;
    for (const auto& row : perturbed.rows) {
        const RightKey key{row.n, round_sig12(row.total())};
        if (row.l.has_value()) {
            has_l = true;
            right_groups[key].insert(std::abs(*row.l));
        } else {
            right_groups[key];
        }
    }

    double lo = 0.0, hi = 0.0;
    bool first = true;
    auto widen = [&](double e) {
        if (first) {
            lo = hi = e;
            first = false;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    };
    for (const auto& [n, e] : left) widen(e);
    for (const auto& [key, ls] : right_groups) widen(key.energy);
    if (first) {
        lo = 0.0;
        hi = 1.0;
    }
    double pad = 0.05 * (hi - lo);
    if (pad <= 0.0) pad = std::max(1.0, std::abs(hi)) * 0.05;
    lo -= pad;
    hi += pad;
    auto y_of = [&](double e) {
        return kBottom - (e - lo) / (hi - lo) * (kBottom - kTop);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << num(kWidth) << " " << num(kHeight) << "\" font-family=\"sans-serif\""
        << " font-size=\"13\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\""
        << num(kHeight) << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(0.5 * (kLeftX0 + kLeftX1))
        << "\" y=\"26\" text-anchor=\"middle\" fill=\"#000\">E0 (sphere)</text>\n";
    svg << "<text x=\"" << num(0.5 * (kRightX0 + kRightX1))
        << "\" y=\"26\" text-anchor=\"middle\" fill=\"#000\">E0 + dE1 "
           "(spheroid)</text>\n";

    // Energy axis ticks along the left edge.
    for (int i = 0; i <= 4; ++i) {
        const double e = lo + (hi - lo) * i / 4.0;
        const double y = y_of(e);
        svg << "<line x1=\"40\" y1=\"" << num(y) << "\" x2=\"46\" y2=\""
            << num(y) << "\" stroke=\"#999\"/>\n";
        svg << "<text x=\"36\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\" fill=\"#555\">" << tick(e) << "</text>\n";
    }
    svg << "<line x1=\"46\" y1=\"" << num(kTop) << "\" x2=\"46\" y2=\""
        << num(kBottom) << "\" stroke=\"#999\"/>\n";

    for (const auto& [n, e] : left) {
        const double y = y_of(e);
        svg << "<line x1=\"" << num(kLeftX0) << "\" y1=\"" << num(y)
            << "\" x2=\"" << num(kLeftX1) << "\" y2=\"" << num(y)
            << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << num(kLeftX0 - 8) << "\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\" fill=\"#000\">n=" << n << "</text>\n";
    }

    for (const auto& [key, ls] : right_groups) {
        const double yr = y_of(key.energy);
        svg << "<line x1=\"" << num(kRightX0) << "\" y1=\"" << num(yr)
            << "\" x2=\"" << num(kRightX1) << "\" y2=\"" << num(yr)
            << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
        const std::string label = l_class_label(ls, has_l);
        if (!label.empty()) {
            svg << "<text x=\"" << num(kRightX1 + 8) << "\" y=\"" << num(yr + 4)
                << "\" fill=\"#000\">" << label << "</text>\n";
        }
        const auto it = left.find(key.n);
        if (it != left.end()) {
            svg << "<line x1=\"" << num(kLeftX1) << "\" y1=\""
                << num(y_of(it->second)) << "\" x2=\"" << num(kRightX0)
                << "\" y2=\"" << num(yr)
                << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

void emit_level_svg(const LevelTable& base, const LevelTable& perturbed,
                    const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open svg output path: " + path);
    }
    out << render_level_svg(base, perturbed);
    if (!out) {
        throw std::runtime_error("failed writing svg output: " + path);
    }
}

}  // namespace spheroid
