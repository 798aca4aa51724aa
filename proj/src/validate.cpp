#include "spheroid/validate.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "spheroid/free_particle.hpp"
#include "spheroid/geometry.hpp"
#include "spheroid/level_table.hpp"
#include "spheroid/numerics.hpp"
#include "spheroid/oracle.hpp"
#include "spheroid/oscillator.hpp"
#include "spheroid/specfun.hpp"

namespace spheroid::validate {

namespace {

constexpr double kPi = std::numbers::pi;

// Accumulates a worst-case deviation and renders the pass/detail pair.
class WorstCase {
  public:
    void feed(double deviation) { worst_ = std::max(worst_, deviation); }
    Check done(const std::string& name, double tol,
               const char* kind = "deviation") const {
        std::ostringstream detail;
        detail << "worst " << kind << " " << format_sig12(worst_) << ", tol "
               << format_sig12(tol);
        return {name, worst_ <= tol, detail.str()};
    }

  private:
    double worst_ = 0.0;
};

double rel_dev(double value, double reference) {
    const double scale = std::max(std::abs(reference), 1e-300);
    return std::abs(value - reference) / scale;
}

Suite suite_specfun() {
    Suite s;
    s.suite = "specfun";

    {
        WorstCase w;
        for (double x : {0.1, 0.5, 1.0, 2.3, 7.7, 15.5, 30.0}) {
            w.feed(rel_dev(specfun::gamma_fn(x + 1.0),
                           x * specfun::gamma_fn(x)));
        }
        s.checks.push_back(w.done("gamma_recurrence", 1e-12, "rel err"));
    }
    {
        WorstCase w;
        for (int n = 0; n <= 12; ++n) {
            const auto r = numerics::integrate(
                [n](double chi) { return std::pow(std::sin(chi), n); }, 0.0,
                0.5 * kPi);
            w.feed(std::abs(specfun::wallis_integral(n) - r.value));
        }
        s.checks.push_back(w.done("wallis_vs_quadrature", 1e-10, "abs err"));
    }
    {
        // Degree recurrence against the terminating hypergeometric series
        // through the Gamma-ratio mapping between the two.
        WorstCase w;
        for (int k = 0; k <= 6; ++k) {
            for (double alpha : {0.0, 1.0, 2.0, 3.0}) {
                for (double beta : {1.1, 2.5}) {
                    for (int i = 0; i <= 10; ++i) {
                        const double x = -1.0 + 0.2 * i;
                        const double lhs = specfun::hyp2f1_terminating(
                            k, alpha + beta + k + 1.0, alpha + 1.0,
                            0.5 * (1.0 - x));
                        const double ratio = std::exp(
                            specfun::log_gamma(k + 1.0) +
                            specfun::log_gamma(alpha + 1.0) -
                            specfun::log_gamma(k + alpha + 1.0));
                        const double rhs =
                            ratio * specfun::jacobi_p({k, alpha, beta}, x);
                        w.feed(std::abs(lhs - rhs) /
                               std::max(1.0, std::abs(rhs)));
                    }
                }
            }
        }
        s.checks.push_back(w.done("jacobi_vs_hypergeometric", 1e-10, "rel err"));
    }
    {
        // m-th derivative against a central stencil applied to the analytic
        // (m-1)-th derivative, which keeps the finite difference benign.
        WorstCase w;
        for (int k = 1; k <= 8; ++k) {
            for (int m : {1, 2}) {
                for (double x : {-0.7, -0.2, 0.3, 0.8}) {
                    const specfun::JacobiParams jp{k, 2.0, 1.0};
                    auto lower = [&](double t) {
                        return m == 1 ? specfun::jacobi_p(jp, t)
                                      : specfun::jacobi_p_deriv(jp, t, 1);
                    };
                    const double fd = numerics::central_diff(lower, x, 1e-6, 1);
                    w.feed(std::abs(specfun::jacobi_p_deriv(jp, x, m) - fd));
                }
            }
        }
        s.checks.push_back(w.done("jacobi_deriv_vs_fd", 1e-7, "abs err"));
    }
    return s;
}

Suite suite_numerics() {
    Suite s;
    s.suite = "numerics";

    {
        WorstCase w;
        const auto p5 = numerics::integrate(
            [](double x) { return x * x * x * x * x; }, 0.0, 1.0);
        w.feed(std::abs(p5.value - 1.0 / 6.0));
        const auto sn = numerics::integrate(
            [](double chi) { return std::sin(chi); }, 0.0, 0.5 * kPi);
        w.feed(std::abs(sn.value - 1.0));
        s.checks.push_back(w.done("polynomial_exactness", 1e-12, "abs err"));
    }
    {
        // Endpoint-integrable power of cos with a non-integer exponent.
        const double beta = std::sqrt(1.25);
        const auto r = numerics::integrate(
            [beta](double chi) {
                const double sc = std::sin(chi);
                return sc * sc * std::pow(std::cos(chi), 2.0 * beta - 1.0);
            },
            0.0, 0.5 * kPi);
        WorstCase w;
        w.feed(std::abs(r.value - 0.288735369876546));
        s.checks.push_back(w.done("endpoint_singularity", 1e-9, "abs err"));
    }
    {
        auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
        const double whole = numerics::integrate(f, 0.0, 2.0).value;
        const double split = numerics::integrate(f, 0.0, 0.7).value +
                             numerics::integrate(f, 0.7, 2.0).value;
        WorstCase w;
        w.feed(std::abs(whole - split));
        s.checks.push_back(w.done("split_additivity", 1e-12, "abs err"));
    }
    {
        WorstCase w;
        const auto eigs = numerics::eig_tridiag({2.0, 2.0, 2.0}, {-1.0, -1.0}, 1);
        w.feed(std::abs(eigs[0] - (2.0 - std::sqrt(2.0))));
        s.checks.push_back(w.done("eig_toeplitz", 1e-12, "abs err"));
    }
    {
        const std::vector<double> d = {1.0, 2.5, -0.5, 4.0};
        const std::vector<double> e = {0.7, -1.2, 0.4};
        const double c = 3.7;
        std::vector<double> dc = d, ec = e;
        for (auto& v : dc) v *= c;
        for (auto& v : ec) v *= c;
        const auto base = numerics::eig_tridiag(d, e, 4);
        const auto scaled = numerics::eig_tridiag(dc, ec, 4);
        WorstCase w;
        for (std::size_t i = 0; i < base.size(); ++i) {
            w.feed(rel_dev(scaled[i], c * base[i]));
        }
        s.checks.push_back(w.done("eig_scaling", 1e-12, "rel err"));
    }
    {
        auto f = [](double x) { return std::sin(x); };
        const double e1 =
            std::abs(numerics::central_diff(f, 0.7, 1e-2, 1) - std::cos(0.7));
        const double e2 =
            std::abs(numerics::central_diff(f, 0.7, 1e-3, 1) - std::cos(0.7));
        const double slope = std::log10(e1 / e2);
        std::ostringstream detail;
        detail << "order-1 stencil error slope " << format_sig12(slope)
               << ", expected 2 +- 0.1";
        s.checks.push_back(
            {"central_diff_order", std::abs(slope - 2.0) <= 0.1, detail.str()});
    }

    return s;
}

Suite suite_geometry() {
    Suite s;
    s.suite = "geometry";
    const std::vector<SurfaceParams> surfaces = {
        SurfaceParams::from_curvature(1.0, 0.1),
        SurfaceParams::from_curvature(0.8, -0.5),
        SurfaceParams::from_radii(1.1, 0.9),
        SurfaceParams::from_curvature(2.0, 0.0),
    };
    const std::vector<TangentPoint> points = {
        {0.3, -0.4}, {1.2, 0.7}, {5.0, -2.0}, {0.05, 0.0}};

    {
        WorstCase w;
        for (const auto& sp : surfaces) {
            for (const auto& t : points) {
                const EmbeddedPoint q = tangent_to_spheroid(t, sp, Sheet::upper);
                const TangentPoint back = spheroid_to_tangent(q, sp);
                w.feed(std::abs(back.x - t.x) + std::abs(back.y - t.y));
                const EmbeddedPoint qs = project_spheroid_to_sphere(q, sp);
                // Gnomonic chart of the sphere point directly.
                w.feed(std::abs(sp.a * qs.q1 / qs.q3 - t.x) +
                       std::abs(sp.a * qs.q2 / qs.q3 - t.y));
            }
        }
        s.checks.push_back(w.done("projection_round_trip", 1e-12, "abs err"));
    }
    {
        WorstCase w;
        for (const auto& sp : surfaces) {
            for (const auto& t : points) {
                const MetricTensor2 g1 = metric_tangent(t, sp);
                const MetricTensor2 g2 = metric_embedding(t, sp);
                w.feed(std::abs(g1.g11 - g2.g11) + std::abs(g1.g12 - g2.g12) +
                       std::abs(g1.g22 - g2.g22));
                if (!(g1.g11 > 0.0) || !(g1.det() > 0.0)) w.feed(1.0);
            }
        }
        s.checks.push_back(w.done("metric_two_routes", 1e-12, "abs err"));
    }
    {
        WorstCase w;
        for (const auto& sp : surfaces) {
            for (const auto& t : points) {
                const EmbeddedPoint q = tangent_to_spheroid(t, sp, Sheet::upper);
                w.feed(rel_dev(potential_spheroid_coords(q.q1, q.q2, sp, 1.3),
                               potential_osc(t, sp, 1.3)));
            }
        }
        s.checks.push_back(w.done("potential_composition", 1e-12, "rel err"));
    }
    {
        WorstCase w;
        const std::vector<ClassicalState> states = {
            {0.7, -0.3, 0.4, 0.9}, {1.5, 0.2, -1.1, 0.3}, {0.1, 0.1, 2.0, -0.5}};
        for (const auto& sp : surfaces) {
            for (const auto& c : states) {
                const MomentumPair mp = classical_momenta(c, sp);
                const double u = 1.0 + sp.lambda * (c.x * c.x + c.y * c.y);
                const double lhs = c.x * c.vx + c.y * c.vy;
                const double rhs =
                    (mp.p0.x * c.x + mp.p0.y * c.y) * u * u;
                w.feed(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            }
        }
        s.checks.push_back(w.done("momentum_identity", 1e-12, "rel err"));
    }
    {
        const ClassicalState c{0.7, -0.3, 0.4, 0.9};
        std::vector<double> residuals;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const SurfaceParams sp = SurfaceParams::from_curvature(1.0, eps);
            const HamiltonianParts hp = classical_hamiltonians(c, sp, 1.0);
            residuals.push_back(std::abs(hp.h_exact - hp.h0_osc - hp.h_eps));
        }
        const double slope =
            0.5 * (std::log10(residuals[0] / residuals[1]) +
                   std::log10(residuals[1] / residuals[2]));
        std::ostringstream detail;
        detail << "decomposition residual slope in eps " << format_sig12(slope)
               << ", expected 2 +- 0.1";
        s.checks.push_back({"hamiltonian_decomposition",
                            std::abs(slope - 2.0) <= 0.1, detail.str()});
    }
    return s;
}

Suite suite_free() {
    Suite s;
    s.suite = "free";

    {
        WorstCase w;
        for (double lambda : {0.5, 1.0, 2.0}) {
            const SurfaceParams sp = SurfaceParams::from_curvature(lambda, 0.1);
            for (int n : {0, 1, 2, 5, 10, 20}) {
                const free_particle::FreeState st(n, sp);
                const double closed = free_particle::shift1_closed(st);
                const double quad = free_particle::shift1_quadrature(st);
                w.feed(std::abs(closed - quad) /
                       std::max(std::abs(closed), 1e-300));
            }
        }
        s.checks.push_back(w.done("closed_vs_quadrature", 1e-8, "rel err"));
    }
    {
        WorstCase w;
        const SurfaceParams sp = SurfaceParams::from_curvature(1.3, 0.1);
        for (int n : {0, 1, 3, 8, 20}) {
            const free_particle::FreeState st(n, sp);
            const auto r = numerics::integrate(
                [&](double chi) {
                    const double f = free_particle::radial_wavefunction(st, chi);
                    return f * f * std::sin(chi);
                },
                0.0, 0.5 * kPi);
            w.feed(std::abs(2.0 * kPi / sp.lambda * r.value - 1.0));
        }
        s.checks.push_back(w.done("normalization", 1e-10, "abs err"));
    }
    {
        const free_particle::FreeState st1(
            3, SurfaceParams::from_curvature(1.0, 0.05));
        const free_particle::FreeState st2(
            3, SurfaceParams::from_curvature(1.0, 0.10));
        WorstCase w;
        w.feed(rel_dev(free_particle::shift1_closed(st2),
                       2.0 * free_particle::shift1_closed(st1)));
        s.checks.push_back(w.done("eps_linearity", 1e-14, "rel err"));
    }
    {
        WorstCase w;
        const SurfaceParams sp = SurfaceParams::from_curvature(1.0, 0.1);
        for (auto [m, n] : {std::pair{0, 1}, std::pair{2, 5}, std::pair{3, 4}}) {
            w.feed(std::abs(free_particle::offdiag_element(m, n, sp)));
        }
        s.checks.push_back(w.done("offdiag_vanishing", 1e-10, "abs err"));
    }
    return s;
}

Suite suite_osc() {
    Suite s;
    s.suite = "osc";
    const SurfaceParams fig2b = SurfaceParams::from_curvature(1.0, 0.1);
    const osc::OscParams pb(1.0, fig2b);

    {
        WorstCase w;
        WorstCase wf;
        for (auto [omega, lambda] :
             {std::pair{1.0, 0.8}, std::pair{1.4, 1.0}}) {
            const osc::OscParams p(
                omega, SurfaceParams::from_curvature(lambda, 0.1));
            for (auto [n, l] : {std::pair{0, 0}, std::pair{1, 1},
                                std::pair{2, 0}, std::pair{3, 3},
                                std::pair{8, 2}}) {
                const auto nc = osc::check_normalization({n, l}, p);
                w.feed(nc.rel_dev);
                wf.feed(std::abs(nc.azimuthal_convention_factor -
                                 std::sqrt(2.0 * kPi)));
            }
        }
        s.checks.push_back(w.done("normalization_closed_form", 1e-8, "rel dev"));
        s.checks.push_back(
            wf.done("azimuthal_convention_factor", 1e-8, "abs err"));
    }
    {
        WorstCase w;
        for (auto [n1, n2, l] :
             {std::tuple{0, 2, 0}, std::tuple{1, 3, 1}, std::tuple{2, 6, 2},
              std::tuple{1, 5, 1}}) {
            const osc::RadialState a({n1, l}, pb);
            const osc::RadialState b({n2, l}, pb);
            const auto r = numerics::integrate(
                [&](double chi) { return a(chi) * b(chi) * std::sin(chi); },
                0.0, 0.5 * kPi);
            w.feed(std::abs(2.0 * kPi / fig2b.lambda * r.value));
        }
        s.checks.push_back(w.done("orthogonality", 1e-8, "abs err"));
    }
    {
        WorstCase w;
        for (auto [n, l] :
             {std::pair{0, 0}, std::pair{2, 2}, std::pair{3, 1}}) {
            const double chi_form = osc::shift_kinetic({n, l}, pb);
            const double x_form = osc::shift_kinetic_xform({n, l}, pb);
            w.feed(std::abs(chi_form - x_form) /
                   std::max(1.0, std::abs(chi_form)));
        }
        s.checks.push_back(w.done("kinetic_xform_agreement", 1e-9, "rel err"));
    }
    {
        const osc::OscParams half(
            1.0, SurfaceParams::from_curvature(1.0, 0.05));
        WorstCase w;
        w.feed(rel_dev(osc::shift_total({2, 0}, pb),
                       2.0 * osc::shift_total({2, 0}, half)));
        s.checks.push_back(w.done("eps_linearity", 1e-12, "rel err"));
    }
    {
        WorstCase w;
        w.feed(std::abs(osc::shift_total({3, 1}, pb) -
                        osc::shift_total({3, -1}, pb)));
        w.feed(std::abs(osc::shift_total({4, 2}, pb) -
                        osc::shift_total({4, -2}, pb)));
        s.checks.push_back(w.done("pm_l_degeneracy", 1e-10, "abs err"));
    }
    {
        WorstCase w;
        for (auto [n, l] : {std::pair{1, 1}, std::pair{4, 2}}) {
            const osc::RadialState rs({n, l}, pb);
            for (double chi : {0.3, 0.8, 1.2}) {
                const double fd = numerics::central_diff(
                    [&rs](double c) { return rs(c); }, chi, 1e-6, 1);
                w.feed(std::abs(rs.derivative_chi(chi) - fd));
            }
        }
        s.checks.push_back(w.done("derivative_identity", 1e-6, "abs err"));
    }
    return s;
}

Suite suite_oracle() {
    Suite s;
    s.suite = "oracle";
    const SurfaceParams sphere = SurfaceParams::from_curvature(1.0, 0.0);
    const SurfaceParams fig2b = SurfaceParams::from_curvature(1.0, 0.1);

    {
        const auto rep = oracle::validate_free(sphere, 3, 3, 4000);
        s.checks.push_back({"free_sectors", rep.pass, rep.note});
    }
    {
        const auto rep = oracle::validate_osc(sphere, 1.4, 2, 4000);
        s.checks.push_back({"osc_sectors_coupling", rep.pass, rep.note});
    }
    {
        // Second-order convergence of the m=1 free sector eigenvalue.
        std::vector<double> errs;
        for (int n : {500, 1000, 2000, 4000}) {
            oracle::RadialProblem rp;
            rp.m = 1;
            rp.surface = sphere;
            rp.n_grid = n;
            const double e = oracle::lowest_eigenvalues(rp, 1)[0];
            errs.push_back(std::abs(e - 1.0));
        }
        double slope_sum = 0.0;
        for (int i = 0; i < 3; ++i) {
            slope_sum += std::log2(errs[i] / errs[i + 1]);
        }
        const double slope = slope_sum / 3.0;
        std::ostringstream detail;
        detail << "eigenvalue error slope " << format_sig12(slope)
               << ", expected 2 +- 0.2";
        s.checks.push_back(
            {"grid_convergence", std::abs(slope - 2.0) <= 0.2, detail.str()});
    }
    {
        // Staggered-offset choice must not move eigenvalues beyond the
        // discretization error scale.
        oracle::RadialProblem rp;
        rp.m = 1;
        rp.surface = sphere;
        rp.n_grid = 2000;
        const double mid = oracle::lowest_eigenvalues(rp, 1)[0];
        rp.n_grid = 1000;
        const double coarse = oracle::lowest_eigenvalues(rp, 1)[0];
        const double band = std::abs(mid - coarse);
        WorstCase w;
        for (double off : {0.4, 0.6}) {
            oracle::RadialProblem rq = rp;
            rq.n_grid = 2000;
            rq.offset = off;
            w.feed(std::abs(oracle::lowest_eigenvalues(rq, 1)[0] - mid) / band);
        }
        s.checks.push_back(
            w.done("offset_invariance", 1.0, "shift in error-band units"));
    }
    {
        WorstCase w;
        oracle::RadialProblem rp;
        rp.surface = fig2b;
        rp.n_grid = 4000;

        const osc::OscParams p(1.0, fig2b);
        rp.m = 1;
        w.feed(rel_dev(oracle::grid_shift(osc::OscState(1, 1), p, rp),
                       osc::shift_total({1, 1}, p)));

        const free_particle::FreeState fs(1, fig2b);
        rp.m = 1;
        w.feed(rel_dev(oracle::grid_shift(fs, rp),
                       free_particle::shift1_closed(fs)));
        s.checks.push_back(w.done("grid_shift_agreement", 1e-4, "rel err"));
    }
    return s;
}

void finish(Suite& s) {
    s.pass = true;
    for (const auto& c : s.checks) {
        if (!c.pass) s.pass = false;
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"specfun", "numerics", "geometry", "free", "osc", "oracle"};
}

Suite run_suite(const std::string& name) {
    Suite s;
    if (name == "specfun") {
        s = suite_specfun();
    } else if (name == "numerics") {
        s = suite_numerics();
    } else if (name == "geometry") {
        s = suite_geometry();
    } else if (name == "free") {
        s = suite_free();
    } else if (name == "osc") {
        s = suite_osc();
    } else if (name == "oracle") {
        s = suite_oracle();
    } else {
        throw std::domain_error("unknown validate suite: " + name);
    }
    finish(s);
    return s;
}

Report run(const std::vector<std::string>& names) {
    std::vector<std::string> wanted = names;
    if (wanted.empty() ||
        (wanted.size() == 1 && wanted.front() == "all")) {
        wanted = suite_names();
    }
    Report rep;
    rep.pass = true;
    for (const auto& n : wanted) {
        rep.suites.push_back(run_suite(n));
        if (!rep.suites.back().pass) rep.pass = false;
    }
    return rep;
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json out;
    out["suites"] = nlohmann::ordered_json::array();
    for (const auto& s : r.suites) {
        nlohmann::ordered_json js;
        js["suite"] = s.suite;
        js["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : s.checks) {
            js["checks"].push_back(
                {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        js["pass"] = s.pass;
        out["suites"].push_back(js);
    }
    out["pass"] = r.pass;
    return out.dump(2);
}

}  // namespace spheroid::validate
