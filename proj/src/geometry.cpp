#include "spheroid/geometry.hpp"

#include <cmath>
#include <numbers>

namespace spheroid {

namespace {

double on_spheroid_residual(const EmbeddedPoint& p, const SurfaceParams& s) {
    return std::abs((p.q1 * p.q1 + p.q2 * p.q2) / (s.b * s.b) +
                    p.q3 * p.q3 / (s.a * s.a) - 1.0);
}

}  // namespace

SurfaceParams SurfaceParams::from_radii(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("SurfaceParams: radii must be positive");
    }
    SurfaceParams s;
    s.a = a;
    s.b = b;
    s.lambda = 1.0 / (a * a);
    s.eps = (a * a) / (b * b) - 1.0;
    return s;
}

SurfaceParams SurfaceParams::from_curvature(double lambda, double eps) {
    if (!(lambda > 0.0)) {
        throw std::domain_error("SurfaceParams: lambda must be positive");
    }
    if (!(eps > -1.0)) {
        throw std::domain_error("SurfaceParams: eps must exceed -1");
    }
    SurfaceParams s;
    s.lambda = lambda;
    s.eps = eps;
    s.a = 1.0 / std::sqrt(lambda);
    s.b = s.a / std::sqrt(1.0 + eps);
    return s;
}

double TangentPoint::rho() const { return std::hypot(x, y); }

double TangentPoint::phi() const {
    double angle = std::atan2(y, x);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    return angle;
}

double TangentPoint::chi(const SurfaceParams& s) const {
    const double t = s.lambda * rho2();
    return std::asin(std::sqrt(t / (1.0 + t)));
}

EmbeddedPoint project_spheroid_to_sphere(const EmbeddedPoint& p, const SurfaceParams& s) {
    if (on_spheroid_residual(p, s) > 1e-9) {
        throw std::domain_error("project_spheroid_to_sphere: point is not on the spheroid");
    }
    EmbeddedPoint out;
    out.q1 = (s.a / s.b) * p.q1;
    out.q2 = (s.a / s.b) * p.q2;
    out.q3 = p.q3;
    out.sheet = p.sheet;
    return out;
}

EmbeddedPoint tangent_to_spheroid(const TangentPoint& t, const SurfaceParams& s, Sheet sheet) {
    const double denom = std::sqrt(s.a * s.a + t.rho2());
    EmbeddedPoint out;
    out.q1 = s.b * t.x / denom;
    out.q2 = s.b * t.y / denom;
    out.q3 = (sheet == Sheet::upper ? 1.0 : -1.0) * s.a * s.a / denom;
    out.sheet = sheet;
    return out;
}

TangentPoint spheroid_to_tangent(const EmbeddedPoint& p, const SurfaceParams& s) {
    if (p.q3 == 0.0) {
        throw std::domain_error("spheroid_to_tangent: the equator is outside the chart");
    }
    // From q = (b x, b y, a^2)/sqrt(a^2+rho^2): x = a^2 q1 / (b q3).
    TangentPoint t;
    t.x = s.a * s.a * p.q1 / (s.b * p.q3);
    t.y = s.a * s.a * p.q2 / (s.b * p.q3);
    return t;
}

MetricTensor2 metric_tangent(const TangentPoint& t, const SurfaceParams& s) {
    const double u = 1.0 + s.lambda * t.rho2();
    const double shape = 1.0 - s.eps / u;
    const double pref = 1.0 / (u * (1.0 + s.eps));
    MetricTensor2 g;
    g.g11 = pref * (1.0 - s.lambda * t.x * t.x / u * shape);
    g.g12 = pref * (-s.lambda * t.x * t.y / u * shape);
    g.g22 = pref * (1.0 - s.lambda * t.y * t.y / u * shape);
    return g;
}

MetricTensor2 metric_embedding(const TangentPoint& t, const SurfaceParams& s) {
    // q(x, y) = (b x, b y, a^2) * u with u = (a^2 + rho^2)^{-1/2};
    // columns of J are dq/dx and dq/dy.
    const double u = 1.0 / std::sqrt(s.a * s.a + t.rho2());
    const double u3 = u * u * u;
    const double jx[3] = {s.b * u - s.b * t.x * t.x * u3, -s.b * t.y * t.x * u3,
                          -s.a * s.a * t.x * u3};
    const double jy[3] = {-s.b * t.x * t.y * u3, s.b * u - s.b * t.y * t.y * u3,
                          -s.a * s.a * t.y * u3};
    MetricTensor2 g;
    g.g11 = jx[0] * jx[0] + jx[1] * jx[1] + jx[2] * jx[2];
    g.g12 = jx[0] * jy[0] + jx[1] * jy[1] + jx[2] * jy[2];
    g.g22 = jy[0] * jy[0] + jy[1] * jy[1] + jy[2] * jy[2];
    return g;
}

MetricTensor2 metric_spheroid_coords(double q1, double q2, const SurfaceParams& s) {
    const double disk = s.b * s.b - q1 * q1 - q2 * q2;
    if (!(disk > 0.0)) {
        throw std::domain_error("metric_spheroid_coords: point outside the equatorial disk");
    }
    const double ratio2 = (s.a * s.a) / (s.b * s.b);
    MetricTensor2 g;
    g.g11 = 1.0 + ratio2 * q1 * q1 / disk;
    g.g12 = ratio2 * q1 * q2 / disk;
    g.g22 = 1.0 + ratio2 * q2 * q2 / disk;
    return g;
}

double sphere_measure(double rho, const SurfaceParams& s) {
    const double u = 1.0 + s.lambda * rho * rho;
    return 1.0 / (u * u * u);
}

double potential_osc(const TangentPoint& t, const SurfaceParams& s, double omega) {
    if (omega < 0.0) throw std::domain_error("potential_osc: omega must be nonnegative");
    const double r2 = t.rho2();
    const double u = 1.0 + s.lambda * r2;
    return 0.5 * omega * omega * r2 * (1.0 / (1.0 + s.eps) + s.lambda * r2) / u;
}

double potential_spheroid_coords(double q1, double q2, const SurfaceParams& s, double omega) {
    const MetricTensor2 g = metric_spheroid_coords(q1, q2, s);
    const double s2 = g.g11 * q1 * q1 + 2.0 * g.g12 * q1 * q2 + g.g22 * q2 * q2;
    return 0.5 * omega * omega * s2;
}

double kinetic_energy(const ClassicalState& c, const SurfaceParams& s) {
    const MetricTensor2 g = metric_tangent(TangentPoint{c.x, c.y}, s);
    return 0.5 * (g.g11 * c.vx * c.vx + 2.0 * g.g12 * c.vx * c.vy + g.g22 * c.vy * c.vy);
}

MomentumPair classical_momenta(const ClassicalState& c, const SurfaceParams& s) {
    const double r2 = c.x * c.x + c.y * c.y;
    const double u = 1.0 + s.lambda * r2;
    const double xdot = c.x * c.vx + c.y * c.vy;
    MomentumPair out;
    const double exact_shape = (1.0 - s.eps / u) / u;
    const double exact_pref = 1.0 / (u * (1.0 + s.eps));
    out.p.x = exact_pref * (c.vx - s.lambda * xdot * c.x * exact_shape);
    out.p.y = exact_pref * (c.vy - s.lambda * xdot * c.y * exact_shape);
    out.p0.x = (c.vx - s.lambda * xdot * c.x / u) / u;
    out.p0.y = (c.vy - s.lambda * xdot * c.y / u) / u;
    return out;
}

HamiltonianParts classical_hamiltonians(const ClassicalState& c, const SurfaceParams& s,
                                        double omega) {
    const double r2 = c.x * c.x + c.y * c.y;
    const double u = 1.0 + s.lambda * r2;
    const double g = omega * omega;

    HamiltonianParts parts;
    parts.h_exact = kinetic_energy(c, s) + potential_osc(TangentPoint{c.x, c.y}, s, omega);

    const MomentumPair mom = classical_momenta(c, s);
    const double xp0 = c.x * mom.p0.x + c.y * mom.p0.y;
    // pi = p0 + lambda (x.p0) x; L = x ^ p0.
    const double pix = mom.p0.x + s.lambda * xp0 * c.x;
    const double piy = mom.p0.y + s.lambda * xp0 * c.y;
    const double ell = c.x * mom.p0.y - c.y * mom.p0.x;
    parts.h0_osc = 0.5 * (pix * pix + piy * piy + s.lambda * ell * ell) + 0.5 * g * r2;

    const double p02 = mom.p0.x * mom.p0.x + mom.p0.y * mom.p0.y;
    parts.h_eps = -0.5 * s.eps * (u * p02 + g * r2 / u);
    return parts;
}

}  // namespace spheroid
