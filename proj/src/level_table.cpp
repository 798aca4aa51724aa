#include "spheroid/level_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

namespace spheroid {

double LevelTable::mean_width(int n_cut) const {
    double sum = 0.0;
    int count = 0;
    for (const LevelAggregate& agg : aggregates) {
        if (agg.n <= n_cut) {
            sum += agg.width;
            ++count;
        }
    }
    return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

void rebuild_aggregates(LevelTable& table, double distinct_tol) {
    std::map<int, std::vector<double>> shifts;
    for (const LevelRow& row : table.rows) {
        shifts[row.n].push_back(row.de1);
    }
    table.aggregates.clear();
    for (auto& [n, values] : shifts) {
        std::sort(values.begin(), values.end());
        LevelAggregate agg;
        agg.n = n;
        agg.width = values.back() - values.front();
        agg.sublevels_nominal = static_cast<int>(values.size());
        agg.sublevels_distinct = 1;
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] - values[i - 1] > distinct_tol) ++agg.sublevels_distinct;
        }
        table.aggregates.push_back(agg);
    }
}

std::string format_sig12(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double round_sig12(double v) {
    const std::string s = format_sig12(v);
    double out = v;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

std::string to_csv(const LevelTable& table) {
    std::string out = "n,l,E0,dE1,E,dE1_err_est\n";
    for (const LevelRow& row : table.rows) {
        out += std::to_string(row.n);
        out += ',';
        if (row.l.has_value()) out += std::to_string(*row.l);
        out += ',';
        out += format_sig12(row.e0);
        out += ',';
        out += format_sig12(row.de1);
        out += ',';
        out += format_sig12(row.total());
        out += ',';
        out += format_sig12(row.de1_err_est);
        out += '\n';
    }
    return out;
}

}  // namespace spheroid
