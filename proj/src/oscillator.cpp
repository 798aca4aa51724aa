#include "spheroid/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "spheroid/specfun.hpp"

namespace spheroid::osc {

namespace {

using numerics::IntegralResult;
using numerics::QuadratureSpec;
using specfun::JacobiParams;
using specfun::jacobi_p;
using specfun::log_gamma;

constexpr double kPi = std::numbers::pi;

double chi_of_x(double x) {
    return std::asin(std::sqrt(0.5 * (1.0 - x)));
}

std::pair<double, double> shift_kinetic_impl(const RadialState& rs,
                                             const QuadratureSpec& spec) {
    const OscParams& p = rs.params();
    const double eps = p.surface.eps;
    if (eps == 0.0) return {0.0, 0.0};
    const double lambda = p.surface.lambda;
    const int abs_l = rs.state().abs_l();
    auto integrand = [&](double chi) {
        return std::sin(chi) * kinetic_shift_density(lambda, abs_l, rs(chi),
                                                     rs.derivative_chi(chi), chi);
    };
    const IntegralResult r = numerics::integrate(integrand, 0.0, 0.5 * kPi, spec);
    const double pref = -eps * kPi / lambda;
    return {pref * r.value, std::abs(pref) * r.err_est};
}

std::pair<double, double> shift_potential_impl(const RadialState& rs,
                                               const QuadratureSpec& spec) {
    const OscParams& p = rs.params();
    const double eps = p.surface.eps;
    const double g = p.g();
    if (eps == 0.0 || g == 0.0) return {0.0, 0.0};
    const double lambda = p.surface.lambda;
    auto integrand = [&](double chi) {
        const double s = std::sin(chi);
        const double t = std::tan(chi);
        const double phi = rs(chi);
        return s * (s * s + t * t) * phi * phi;
    };
    const IntegralResult r = numerics::integrate(integrand, 0.0, 0.5 * kPi, spec);
    const double pref = -eps * g * kPi / (lambda * lambda);
    return {pref * r.value, std::abs(pref) * r.err_est};
}

}  // namespace

OscParams::OscParams(double omega, const SurfaceParams& s, Coupling coupling)
    : omega(omega), surface(s), coupling(coupling) {
    if (!(omega >= 0.0)) {
        throw std::domain_error("OscParams: omega must be nonnegative");
    }
}

double OscParams::g() const {
    return coupling == Coupling::squared ? omega * omega : omega;
}

double OscParams::big_omega() const {
    const double lambda = surface.lambda;
    return std::sqrt(g() + 0.25 * lambda * lambda);
}

double OscParams::beta() const { return big_omega() / surface.lambda; }

OscState::OscState(int n, int l) : n(n), l(l) {
    if (n < 0) throw std::domain_error("OscState: n must be nonnegative");
    const int al = l < 0 ? -l : l;
    if (al > n || (n - al) % 2 != 0) {
        throw std::domain_error("OscState: requires |l| <= n with n - |l| even");
    }
}

double energy0(const OscState& st, const OscParams& p) {
    const double np1 = static_cast<double>(st.n) + 1.0;
    return np1 * p.big_omega() + 0.5 * p.surface.lambda * np1 * np1;
}

double kinetic_shift_density(double lambda, int abs_l, double phi, double dphi,
                             double chi) {
    const double s = std::sin(chi);
    const double c = std::cos(chi);
    double brace =
        c * c * dphi * dphi - s * c * phi * dphi - 0.75 * s * s * phi * phi;
    if (abs_l != 0) {
        const double dl = static_cast<double>(abs_l);
        brace += dl * dl * phi * phi / (s * s);
    }
    return lambda * brace;
}

RadialState::RadialState(const OscState& st, const OscParams& p,
                         const QuadratureSpec& spec)
    : st_(st), p_(p), norm_(1.0) {
    const double lambda = p_.surface.lambda;
    // Precondition the quadrature with the closed-form constant so the
    // integral lands near 1 regardless of how sharply the state localizes
    // at large beta; the result A / sqrt(I) is exact for any scale A, so
    // the numerical value still comes from the quadrature alone.
    const double guess = norm_constant_closed(st, p);
    auto integrand = [this, guess, lambda](double chi) {
        const double v = guess * unnormalized(chi);
        return 2.0 * kPi / lambda * v * v * std::sin(chi);
    };
    const IntegralResult r = numerics::integrate(integrand, 0.0, 0.5 * kPi, spec);
    norm_ = guess / std::sqrt(r.value);
}

double RadialState::unnormalized(double chi) const {
    const int l = st_.abs_l();
    const int k = st_.k_r();
    const double beta = p_.beta();
    const double s = std::sin(chi);
    const double c = std::cos(chi);
    // Hypergeometric-form prefactor k! Gamma(l+1) / Gamma(k+l+1) keeps the
    // polynomial factor equal to 2F1(-k, k+l+beta+1; l+1; sin^2), so the
    // unnormalized shape matches the printed eigenfunction exactly.
    const double cpref = std::exp(log_gamma(k + 1.0) + log_gamma(l + 1.0) -
                                  log_gamma(static_cast<double>(k + l) + 1.0));
    const double poly = jacobi_p(JacobiParams{k, static_cast<double>(l), beta},
                                 1.0 - 2.0 * s * s);
    return cpref * std::pow(s, l) * std::pow(c, beta + 0.5) * poly;
}

double RadialState::operator()(double chi) const {
    return norm_ * unnormalized(chi);
}

double RadialState::derivative_chi(double chi) const {
    const int l = st_.abs_l();
    const int k = st_.k_r();
    const double beta = p_.beta();
    const double s = std::sin(chi);
    const double c = std::cos(chi);
    const double x = 1.0 - 2.0 * s * s;
    const double cpref = std::exp(log_gamma(k + 1.0) + log_gamma(l + 1.0) -
                                  log_gamma(static_cast<double>(k + l) + 1.0));
    const double pk = jacobi_p(JacobiParams{k, static_cast<double>(l), beta}, x);
    double out = -(beta + 0.5) * std::pow(s, l + 1) * std::pow(c, beta - 0.5) * pk;
    if (l >= 1) {
        out += static_cast<double>(l) * std::pow(s, l - 1) *
               std::pow(c, beta + 1.5) * pk;
    }
    if (k >= 1) {
        const double pk1 = jacobi_p(
            JacobiParams{k - 1, static_cast<double>(l + 1), beta + 1.0}, x);
        out += -2.0 * (static_cast<double>(l + k) + beta + 1.0) *
               std::pow(s, l + 1) * std::pow(c, beta + 1.5) * pk1;
    }
    return norm_ * cpref * out;
}

double RadialState::derivative_x(double x) const {
    if (!(x > -1.0) || !(x <= 1.0)) {
        throw std::domain_error("radial_derivative: x must lie in (-1, 1]");
    }
    return derivative_chi(chi_of_x(x));
}

double norm_constant(const OscState& st, const OscParams& p,
                     const QuadratureSpec& spec) {
    return RadialState(st, p, spec).norm();
}

double norm_constant_closed(const OscState& st, const OscParams& p) {
    const double l = static_cast<double>(st.abs_l());
    const double k = static_cast<double>(st.k_r());
    const double beta = p.beta();
    const double lambda = p.surface.lambda;
    const double log_n2 = std::log(2.0 * lambda) + log_gamma(k + l + 1.0) +
                          log_gamma(k + l + beta + 1.0) +
                          std::log(2.0 * k + l + beta + 1.0) - log_gamma(k + 1.0) -
                          2.0 * log_gamma(l + 1.0) - log_gamma(k + beta + 1.0);
    return std::exp(0.5 * log_n2);
}

NormalizationCheck check_normalization(const OscState& st, const OscParams& p,
                                       const QuadratureSpec& spec, double tol) {
    const double lambda = p.surface.lambda;
    const RadialState rs(st, p, spec);
    NormalizationCheck out;
    out.n_quadrature_full = rs.norm();
    out.n_closed = norm_constant_closed(st, p);
    // The full-measure constant already exists; the radial-measure constant
    // differs from it by exactly sqrt(2 pi). The closed-form value scales
    // the integrand toward 1 without entering the result (see RadialState).
    auto radial_only = [&](double chi) {
        const double v = out.n_closed * (rs(chi) / rs.norm());
        return v * v * std::sin(chi) / lambda;
    };
    const IntegralResult r = numerics::integrate(radial_only, 0.0, 0.5 * kPi, spec);
    out.n_quadrature_radial = out.n_closed / std::sqrt(r.value);
    out.rel_dev = std::abs(out.n_closed - out.n_quadrature_radial) / out.n_closed;
    out.azimuthal_convention_factor = out.n_closed / out.n_quadrature_full;
    out.pass = out.rel_dev <= tol;
    return out;
}

double radial_wavefunction(const OscState& st, const OscParams& p, double chi) {
    if (!(chi >= 0.0) || !(chi < 0.5 * kPi)) {
        throw std::domain_error("radial_wavefunction: chi must lie in [0, pi/2)");
    }
    return RadialState(st, p)(chi);
}

double radial_derivative(const OscState& st, const OscParams& p, double x) {
    return RadialState(st, p).derivative_x(x);
}

double shift_kinetic(const OscState& st, const OscParams& p,
                     const QuadratureSpec& spec) {
    return shift_kinetic_impl(RadialState(st, p, spec), spec).first;
}

double shift_kinetic_xform(const OscState& st, const OscParams& p,
                           const QuadratureSpec& spec) {
    const double eps = p.surface.eps;
    if (eps == 0.0) return 0.0;
    const double lambda = p.surface.lambda;
    const RadialState rs(st, p, spec);
    const int abs_l = st.abs_l();
    const double inv_two_root2 = 1.0 / (2.0 * std::sqrt(2.0));
    auto integrand = [&](double x) {
        const double chi = chi_of_x(x);
        return inv_two_root2 / std::sqrt(1.0 + x) *
               kinetic_shift_density(lambda, abs_l, rs(chi),
                                     rs.derivative_chi(chi), chi);
    };
    const IntegralResult r = numerics::integrate(integrand, -1.0, 1.0, spec);
    return -eps * kPi / lambda * r.value;
}

double shift_potential(const OscState& st, const OscParams& p,
                       const QuadratureSpec& spec) {
    return shift_potential_impl(RadialState(st, p, spec), spec).first;
}

double shift_total(const OscState& st, const OscParams& p,
                   const QuadratureSpec& spec) {
    const RadialState rs(st, p, spec);
    return shift_kinetic_impl(rs, spec).first + shift_potential_impl(rs, spec).first;
}

LevelTable level_table(int n_max, const OscParams& p, const QuadratureSpec& spec) {
    if (n_max < 0) throw std::domain_error("level_table: n_max must be nonnegative");
    LevelTable table;
    for (int n = 0; n <= n_max; ++n) {
        // One computation per |l| class; +-l rows share the value exactly.
        for (int al = n % 2; al <= n; al += 2) {
            const OscState st(n, al);
            const RadialState rs(st, p, spec);
            const auto [kin, kin_err] = shift_kinetic_impl(rs, spec);
            const auto [pot, pot_err] = shift_potential_impl(rs, spec);
            // Cross route: the kinetic piece redone in the x = cos(2 chi)
            // variable; the two quadratures share no panels.
            const double kin_cross = shift_kinetic_xform(st, p, spec);
            const double e0 = energy0(st, p);
            for (const int l : (al == 0) ? std::vector<int>{0}
                                         : std::vector<int>{-al, al}) {
                LevelRow row;
                row.n = n;
                row.l = l;
                row.e0 = e0;
                row.de1 = kin + pot;
                row.de1_cross = kin_cross + pot;
                row.de1_err_est = std::max(std::abs(row.de1 - row.de1_cross),
                                           kin_err + pot_err);
                table.rows.push_back(row);
            }
        }
    }
    // Sort rows by (n, l) so the table reads top-down like the diagrams.
    std::sort(table.rows.begin(), table.rows.end(),
              [](const LevelRow& a, const LevelRow& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return a.l.value_or(0) < b.l.value_or(0);
              });
    rebuild_aggregates(table);
    return table;
}

}  // namespace spheroid::osc
