#include "spheroid/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "spheroid/level_table.hpp"
#include "spheroid/numerics.hpp"

namespace spheroid::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSectorRelTol = 1e-3;
constexpr double kZeroModeTol = 1e-6;  // in units of lambda
constexpr double kShiftRelTol = 1e-4;

void validate_problem(const RadialProblem& rp) {
    if (rp.m < 0) throw std::domain_error("RadialProblem: m must be nonnegative");
    if (rp.n_grid < 100) {
        throw std::domain_error("RadialProblem: n_grid must be at least 100");
    }
    if (!(rp.offset > 0.0) || !(rp.offset < 1.0)) {
        throw std::domain_error("RadialProblem: offset must lie in (0, 1)");
    }
    if (rp.potential == PotentialKind::oscillator && !(rp.omega >= 0.0)) {
        throw std::domain_error("RadialProblem: omega must be nonnegative");
    }
    if (!(rp.surface.lambda > 0.0)) {
        throw std::domain_error("RadialProblem: lambda must be positive");
    }
}

double coupling_g(double omega, Coupling c) {
    return c == Coupling::squared ? omega * omega : omega;
}

// Midpoint-rule shift sums on the staggered grid with second-order finite
// differences for the radial derivative (one-sided at both edges). The
// sampled radial factor carries its own normalization, so the same sums
// serve the oscillator and free states.
template <typename Radial>
double discrete_shift(const Radial& phi_of, int abs_l, const SurfaceParams& s,
                      double g, int n, double offset) {
    const double lambda = s.lambda;
    const double eps = s.eps;
    const double h = 0.5 * kPi / n;
    std::vector<double> chi(n), phi(n), dphi(n);
    for (int j = 0; j < n; ++j) {
        chi[j] = (j + offset) * h;
        phi[j] = phi_of(chi[j]);
    }
    for (int j = 1; j + 1 < n; ++j) dphi[j] = (phi[j + 1] - phi[j - 1]) / (2.0 * h);
    dphi[0] = (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * h);
    dphi[n - 1] = (3.0 * phi[n - 1] - 4.0 * phi[n - 2] + phi[n - 3]) / (2.0 * h);

    double kin_sum = 0.0;
    double pot_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double sj = std::sin(chi[j]);
        kin_sum += h * sj *
                   osc::kinetic_shift_density(lambda, abs_l, phi[j], dphi[j], chi[j]);
        if (g != 0.0) {
            const double tj = std::tan(chi[j]);
            pot_sum += h * sj * (sj * sj + tj * tj) * phi[j] * phi[j];
        }
    }
    return -eps * kPi / lambda * kin_sum - eps * g * kPi / (lambda * lambda) * pot_sum;
}

template <typename Radial>
double grid_shift_impl(const Radial& phi_of, int abs_l, const SurfaceParams& s,
                       double g, const RadialProblem& rp, const char* who) {
    validate_problem(rp);
    if (rp.n_grid < 2000) {
        throw std::domain_error(std::string(who) +
                                ": grid_shift needs n_grid >= 2000");
    }
    if (rp.m != abs_l) {
        throw std::domain_error(std::string(who) +
                                ": rp.m must equal the state's azimuthal index");
    }
    if (rp.surface.lambda != s.lambda || rp.surface.eps != s.eps) {
        throw std::domain_error(std::string(who) +
                                ": rp.surface must match the state's surface");
    }
    if (s.eps == 0.0) return 0.0;
    const double full = discrete_shift(phi_of, abs_l, s, g, rp.n_grid, rp.offset);
    const double half = discrete_shift(phi_of, abs_l, s, g, rp.n_grid / 2, rp.offset);
    const double scale = std::max(std::abs(full), 1e-300);
    const double est = std::abs(full - half) / scale;
    if (est > kShiftRelTol) {
        std::ostringstream msg;
        msg << who << ": two-grid shift estimate " << est
            << " exceeds the 1e-4 agreement contract (under-resolved state)";
        throw ResolutionError(msg.str(), full, est);
    }
    return full;
}

double sector_rel_err(double computed, double reference, double lambda) {
    if (reference != 0.0) return std::abs(computed - reference) / std::abs(reference);
    return std::abs(computed) / lambda;
}

bool sector_mode_ok(double reference, double rel_err) {
    return rel_err <= (reference != 0.0 ? kSectorRelTol : kZeroModeTol);
}

SectorCheck run_sector(const RadialProblem& rp, const std::string& label,
                       const std::vector<double>& reference, bool gates) {
    SectorCheck sc;
    sc.sector = label;
    sc.grid = rp.n_grid;
    sc.reference = reference;
    sc.gates = gates;
    try {
        sc.computed = lowest_eigenvalues(rp, static_cast<int>(reference.size()));
    } catch (const std::exception&) {
        sc.pass = false;  // convergence failure flags the sector
        return sc;
    }
    sc.pass = true;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        sc.rel_err.push_back(
            sector_rel_err(sc.computed[i], reference[i], rp.surface.lambda));
        if (!sector_mode_ok(reference[i], sc.rel_err[i])) sc.pass = false;
    }
    return sc;
}

double max_rel_err(const OracleReport& rep, bool gates) {
    double worst = 0.0;
    for (const auto& sc : rep.sectors) {
        if (sc.gates != gates) continue;
        for (double e : sc.rel_err) worst = std::max(worst, e);
    }
    return worst;
}

}  // namespace

TridiagSystem build_problem(const RadialProblem& rp) {
    validate_problem(rp);
    const int n = rp.n_grid;
    const double lambda = rp.surface.lambda;
    const double h = 0.5 * kPi / n;
    const double g = rp.potential == PotentialKind::oscillator
                         ? coupling_g(rp.omega, rp.coupling)
                         : 0.0;

    TridiagSystem sys;
    sys.nodes.resize(n);
    sys.weights.resize(n);
    for (int j = 0; j < n; ++j) {
        sys.nodes[j] = (j + rp.offset) * h;
        // Interior cells have width h; the last cell extends to the pi/2
        // face exactly so the domain is tiled without overshoot.
        const double width = (j == n - 1) ? (1.5 - rp.offset) * h : h;
        sys.weights[j] = std::sin(sys.nodes[j]) * width;
    }

    std::vector<double> adiag(n, 0.0), aoff(n - 1, 0.0);
    // Flux through each interior face of the -(lambda/2)(sin f')' operator.
    for (int j = 1; j < n; ++j) {
        const double face = (j + rp.offset - 0.5) * h;
        const double cf = 0.5 * lambda * std::sin(face) / h;
        adiag[j - 1] += cf;
        adiag[j] += cf;
        aoff[j - 1] -= cf;
    }
    if (rp.boundary == BoundaryKind::dirichlet) {
        // Ghost value 0 at chi = pi/2, one half-cell away from the last node.
        const double dist = (1.0 - rp.offset) * h;
        adiag[n - 1] += 0.5 * lambda * 1.0 / dist;
    }
    for (int j = 0; j < n; ++j) {
        const double s = std::sin(sys.nodes[j]);
        double v = 0.0;
        if (rp.m > 0) {
            v += 0.5 * lambda * static_cast<double>(rp.m) *
                 static_cast<double>(rp.m) / (s * s);
        }
        if (g != 0.0) {
            const double t = std::tan(sys.nodes[j]);
            v += 0.5 * g / lambda * t * t;
        }
        adiag[j] += v * sys.weights[j];
    }

    sys.diag.resize(n);
    sys.offdiag.resize(n - 1);
    for (int j = 0; j < n; ++j) sys.diag[j] = adiag[j] / sys.weights[j];
    for (int j = 0; j + 1 < n; ++j) {
        sys.offdiag[j] = aoff[j] / std::sqrt(sys.weights[j] * sys.weights[j + 1]);
    }
    return sys;
}

std::vector<double> lowest_eigenvalues(const RadialProblem& rp, int k) {
    if (k < 1) throw std::domain_error("lowest_eigenvalues: k must be positive");
    const TridiagSystem sys = build_problem(rp);
    return numerics::eig_tridiag(sys.diag, sys.offdiag, k);
}

std::string to_json(const OracleReport& r) {
    nlohmann::ordered_json out;
    out["sectors"] = nlohmann::ordered_json::array();
    for (const auto& sc : r.sectors) {
        nlohmann::ordered_json j;
        j["sector"] = sc.sector;
        j["grid"] = sc.grid;
        j["computed"] = sc.computed;
        j["reference"] = sc.reference;
        j["rel_err"] = sc.rel_err;
        j["pass"] = sc.pass;
        j["gates"] = sc.gates;
        out["sectors"].push_back(j);
    }
    out["pass"] = r.pass;
    out["note"] = r.note;
    return out.dump(2);
}

OracleReport validate_free(const SurfaceParams& s, int m_max, int k_eigs,
                           int n_grid) {
    if (m_max < 0 || m_max > 5) {
        throw std::domain_error("validate_free: m_max must lie in [0, 5]");
    }
    if (k_eigs < 1 || k_eigs > 4) {
        throw std::domain_error("validate_free: k_eigs must lie in [1, 4]");
    }
    if (!s.is_sphere()) {
        throw std::domain_error(
            "validate_free: the grid discretizes the sphere operator, eps must be 0");
    }
    OracleReport rep;
    rep.pass = true;
    for (int m = 0; m <= m_max; ++m) {
        RadialProblem rp;
        rp.m = m;
        rp.potential = PotentialKind::free_particle;
        rp.surface = s;
        rp.n_grid = n_grid;
        rp.boundary = BoundaryKind::neumann;
        std::vector<double> reference;
        for (int i = 0; i < k_eigs; ++i) {
            const double big_n = static_cast<double>(m + 2 * i);
            reference.push_back(0.5 * s.lambda * big_n * (big_n + 1.0));
        }
        rep.sectors.push_back(
            run_sector(rp, "m=" + std::to_string(m), reference, true));
        if (!rep.sectors.back().pass) rep.pass = false;
    }
    std::ostringstream note;
    note << "hemisphere Neumann sectors; mode N = m + 2i per sector, lowest is "
            "the basis state n = m; worst rel err "
         << format_sig12(max_rel_err(rep, true));
    rep.note = note.str();
    return rep;
}

OracleReport validate_osc(const SurfaceParams& s, double omega, int l_max,
                          int n_grid) {
    if (l_max < 0 || l_max > 4) {
        throw std::domain_error("validate_osc: l_max must lie in [0, 4]");
    }
    if (!s.is_sphere()) {
        throw std::domain_error(
            "validate_osc: the grid discretizes the sphere operator, eps must be 0");
    }
    // The reference spectrum is the closed form under the squared coupling
    // (the convention the closed-form solution itself requires).
    const osc::OscParams ref_params(omega, s, Coupling::squared);
    OracleReport rep;
    rep.pass = true;
    for (const Coupling conv : {Coupling::squared, Coupling::literal}) {
        const bool gates = conv == Coupling::squared;
        for (int l = 0; l <= l_max; ++l) {
            RadialProblem rp;
            rp.m = l;
            rp.potential = PotentialKind::oscillator;
            rp.omega = omega;
            rp.coupling = conv;
            rp.surface = s;
            rp.n_grid = n_grid;
            rp.boundary = BoundaryKind::dirichlet;
            const std::vector<double> reference = {
                osc::energy0(osc::OscState(l, l), ref_params),
                osc::energy0(osc::OscState(l + 2, l), ref_params)};
            std::string label = "l=" + std::to_string(l);
            if (!gates) label += " literal";
            rep.sectors.push_back(run_sector(rp, label, reference, gates));
            if (gates && !rep.sectors.back().pass) rep.pass = false;
        }
    }
    const double worst_squared = max_rel_err(rep, true);
    const double worst_literal = max_rel_err(rep, false);
    bool literal_ok = true;
    for (const auto& sc : rep.sectors) {
        if (!sc.gates && !sc.pass) literal_ok = false;
    }
    std::ostringstream note;
    note << "coupling certification: squared worst rel err "
         << format_sig12(worst_squared) << ", literal worst rel err "
         << format_sig12(worst_literal) << "; matching convention: ";
    if (rep.pass && literal_ok) {
        note << "both (couplings coincide at omega = " << format_sig12(omega)
             << ")";
    } else if (rep.pass) {
        note << "squared";
    } else if (literal_ok) {
        note << "literal";
    } else {
        note << "none";
    }
    rep.note = note.str();
    return rep;
}

double grid_shift(const osc::OscState& st, const osc::OscParams& p,
                  const RadialProblem& rp) {
    const osc::RadialState rs(st, p);
    return grid_shift_impl([&rs](double chi) { return rs(chi); }, st.abs_l(),
                           p.surface, p.g(), rp, "grid_shift(osc)");
}

double grid_shift(const free_particle::FreeState& st, const RadialProblem& rp) {
    return grid_shift_impl(
        [&st](double chi) { return free_particle::radial_wavefunction(st, chi); },
        st.n, st.surface, 0.0, rp, "grid_shift(free)");
}

}  // namespace spheroid::oracle
