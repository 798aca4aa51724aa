#include "spheroid/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <set>

namespace spheroid::numerics {

namespace {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n with the standard Chebyshev-flavored initial
    // guess; roots come out ascending after the mirror step.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double dk = static_cast<double>(k);
                const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

const GaussRule& cached_rule(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, make_gauss_rule(n)).first;
    }
    return it->second;
}

struct RuleEval {
    double value;
    double magnitude;  // sum of |w f|, the round-off scale of the panel
};

RuleEval apply_rule(const GaussRule& rule, const std::function<double(double)>& f,
                    double a, double b) {
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double term = rule.weights[i] * f(mid + halfw * rule.nodes[i]);
        sum += term;
        mag += std::abs(term);
    }
    return {halfw * sum, halfw * mag};
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::domain_error("gauss_legendre: order must be positive");
    const GaussRule& rule = cached_rule(n);
    nodes = rule.nodes;
    weights = rule.weights;
}

IntegralResult integrate(const std::function<double(double)>& f, double lo,
                         double hi, const QuadratureSpec& spec) {
    if (!(lo < hi)) throw std::domain_error("integrate: requires lo < hi");
    if (spec.rel_tol <= 0.0 || spec.abs_tol <= 0.0 || spec.max_depth < 1 ||
        spec.base_order < 2) {
        throw std::domain_error("integrate: invalid quadrature spec");
    }
    const GaussRule& base = cached_rule(spec.base_order);
    const GaussRule& check = cached_rule(std::max(2, spec.base_order / 2));

    const double total_width = hi - lo;

    struct Panel {
        double a, b, value, err;
        int depth;
        bool refinable;
    };

    auto evaluate = [&](double a, double b, int depth) {
        const RuleEval high = apply_rule(base, f, a, b);
        const RuleEval low = apply_rule(check, f, a, b);
        Panel p;
        p.a = a;
        p.b = b;
        p.value = high.value;
        p.err = std::abs(high.value - low.value);
        p.depth = depth;
        // Once the rule difference sits at the round-off scale of the panel
        // sums, splitting cannot sharpen anything.
        const double noise = 32.0 * std::numeric_limits<double>::epsilon() *
                             (high.magnitude + low.magnitude);
        const double mid = 0.5 * (a + b);
        p.refinable =
            p.err > noise && mid > a && mid < b && depth < spec.max_depth;
        return p;
    };

    const Panel root = evaluate(lo, hi, 0);
    const double scale = std::max(std::abs(root.value), 1e-300);
    const double global_tol = std::max(spec.abs_tol, spec.rel_tol * scale);
    auto share_tol = [&](const Panel& p) {
        return global_tol * ((p.b - p.a) / total_width);
    };

    // Worst error first; ties resolve left to right so the refinement path
    // is reproducible bit for bit.
    auto worse = [](const Panel& x, const Panel& y) {
        if (x.err != y.err) return x.err > y.err;
        return x.a < y.a;
    };
    std::multiset<Panel, decltype(worse)> active(worse);
    std::vector<Panel> settled;
    double active_err = 0.0;
    double settled_err = 0.0;

    auto place = [&](const Panel& p) {
        if (p.refinable && p.err > share_tol(p)) {
            active.insert(p);
            active_err += p.err;
        } else {
            settled.push_back(p);
            settled_err += p.err;
        }
    };
    place(root);

    // Generous hard stop; hitting it means the integrand is noise-bound far
    // beyond anything the tolerances can express.
    const long max_panels = 1L << 18;
    long panels = 1;

    while (!active.empty() && panels < max_panels &&
           settled_err + active_err > 0.5 * global_tol) {
        const Panel worst = *active.begin();
        active.erase(active.begin());
        active_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        place(evaluate(worst.a, mid, worst.depth + 1));
        place(evaluate(mid, worst.b, worst.depth + 1));
        panels += 2;
    }

    settled.insert(settled.end(), active.begin(), active.end());
    std::sort(settled.begin(), settled.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0;
    double err = 0.0;
    for (const Panel& p : settled) {
        value += p.value;
        err += p.err;
    }
    if (err > global_tol) {
        throw ConvergenceError(
            "integrate: refinement exhausted before reaching tolerance", value,
            err);
    }
    return {value, err};
}

double central_diff(const std::function<double(double)>& f, double x, double h,
                    int order) {
    if (!(h > 0.0)) throw std::domain_error("central_diff: h must be positive");
    if (order == 1) {
        return (f(x + h) - f(x - h)) / (2.0 * h);
    }
    if (order == 2) {
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    }
    throw std::domain_error("central_diff: order must be 1 or 2");
}

std::vector<double> eig_tridiag(const std::vector<double>& diag,
                                const std::vector<double>& offdiag,
                                int k_lowest) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::domain_error("eig_tridiag: dimension must be positive");
    if (offdiag.size() + 1 != n) {
        throw std::domain_error("eig_tridiag: offdiag must have dimension-1 entries");
    }
    if (k_lowest < 0 || static_cast<std::size_t>(k_lowest) > n) {
        throw std::domain_error("eig_tridiag: k_lowest out of range");
    }
    if (k_lowest == 0) return {};

    std::vector<double> off2(n - 1);
    double max_off2 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        off2[i] = offdiag[i] * offdiag[i];
        max_off2 = std::max(max_off2, off2[i]);
    }
    const double pivmin =
        std::numeric_limits<double>::min() * std::max(1.0, max_off2);

    // Gershgorin bounds bracket the whole spectrum.
    double glo = std::numeric_limits<double>::infinity();
    double ghi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(offdiag[i]) : 0.0);
        glo = std::min(glo, diag[i] - r);
        ghi = std::max(ghi, diag[i] + r);
    }
    const double span = std::max(ghi - glo, std::abs(ghi) + std::abs(glo));
    glo -= 1e-14 * span + pivmin;
    ghi += 1e-14 * span + pivmin;

    // Sturm count: number of eigenvalues strictly below x.
    auto count_below = [&](double x) {
        int count = 0;
        double q = diag[0] - x;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
        for (std::size_t i = 1; i < n; ++i) {
            q = diag[i] - x - off2[i - 1] / q;
            if (std::abs(q) < pivmin) q = -pivmin;
            if (q < 0.0) ++count;
        }
        return count;
    };

    const double gmax = std::max(std::abs(glo), std::abs(ghi));
    std::vector<double> out(static_cast<std::size_t>(k_lowest));
    for (int j = 0; j < k_lowest; ++j) {
        double lo = glo;
        double hi = ghi;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(mid) >= j + 1) {
                hi = mid;
            } else {
                lo = mid;
            }
            const double tol = std::max(
                8.0 * std::numeric_limits<double>::epsilon() * gmax,
                1e-13 * std::max(std::abs(lo), std::abs(hi)));
            if (hi - lo <= tol) break;
        }
        out[static_cast<std::size_t>(j)] = 0.5 * (lo + hi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spheroid::numerics
