#pragma once

// Coordinate systems on the spheroid (q1^2+q2^2)/b^2 + q3^2/a^2 = 1, the
// projection to the enclosing sphere of radius a, the gnomonic tangent-plane
// chart, the exact induced metric, the oscillator potential in each chart,
// and the classical momentum/Hamiltonian consistency layer.

#include <stdexcept>

namespace spheroid {

// Oscillator coupling convention: the potential prefactor is omega^2/2
// ("squared", physically consistent with the flat limit) or omega/2
// ("literal", retained only for comparison runs).
enum class Coupling { squared, literal };

enum class Sheet { upper, lower };

struct SurfaceParams {
    double a = 1.0;       // polar radius
    double b = 1.0;       // equatorial radius
    double lambda = 1.0;  // curvature 1/a^2
    double eps = 0.0;     // second eccentricity squared a^2/b^2 - 1

    static SurfaceParams from_radii(double a, double b);
    static SurfaceParams from_curvature(double lambda, double eps);
    bool is_sphere() const { return eps == 0.0; }
};

struct TangentPoint {
    double x = 0.0;
    double y = 0.0;

    double rho() const;
    double rho2() const { return x * x + y * y; }
    double phi() const;  // in [0, 2*pi)
    // Polar angle chi on the sphere, sin^2(chi) = lambda*rho^2/(1+lambda*rho^2).
    double chi(const SurfaceParams& s) const;
};

struct EmbeddedPoint {
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    Sheet sheet = Sheet::upper;
};

struct MetricTensor2 {
    double g11 = 1.0;
    double g12 = 0.0;
    double g22 = 1.0;
    double det() const { return g11 * g22 - g12 * g12; }
};

struct ClassicalState {
    double x = 0.0;
    double y = 0.0;
    double vx = 0.0;
    double vy = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Exact conjugate momentum p and the sphere momentum p0 (the eps=0 form).
struct MomentumPair {
    Vec2 p;
    Vec2 p0;
};

struct HamiltonianParts {
    double h_exact = 0.0;  // Legendre transform of the exact Lagrangian
    double h0_osc = 0.0;   // sphere oscillator Hamiltonian (pi, L form)
    double h_eps = 0.0;    // first-order-in-eps correction
};

// Radial projection from the spheroid onto the sphere of radius a:
// (q1, q2, q3) -> (a/b q1, a/b q2, q3). Validates the on-spheroid residual.
EmbeddedPoint project_spheroid_to_sphere(const EmbeddedPoint& p, const SurfaceParams& s);

// Inverse gnomonic map: tangent-plane (x, y) to the spheroid point
// (b x, b y, +-a^2)/sqrt(a^2 + rho^2).
EmbeddedPoint tangent_to_spheroid(const TangentPoint& t, const SurfaceParams& s, Sheet sheet);

// Gnomonic chart coordinates of an embedded point (inverse of the above).
TangentPoint spheroid_to_tangent(const EmbeddedPoint& p, const SurfaceParams& s);

// Closed-form induced metric in the tangent-plane chart:
// G = [delta_ij - lambda x_i x_j/(1+lambda rho^2) (1 - eps/(1+lambda rho^2))]
//     / ((1+lambda rho^2)(1+eps)).
MetricTensor2 metric_tangent(const TangentPoint& t, const SurfaceParams& s);

// Same metric assembled as J^T J from the analytic Jacobian of
// tangent_to_spheroid; independent route used in consistency tests.
MetricTensor2 metric_embedding(const TangentPoint& t, const SurfaceParams& s);

// Metric in the (q1, q2) chart of the spheroid itself:
// G_ab = delta_ab + (a/b)^2 q_a q_b / (b^2 - q1^2 - q2^2). Valid inside the
// equatorial disk q1^2 + q2^2 < b^2.
MetricTensor2 metric_spheroid_coords(double q1, double q2, const SurfaceParams& s);

// Determinant of the sphere metric in the tangent chart, (1+lambda rho^2)^-3.
double sphere_measure(double rho, const SurfaceParams& s);

// Oscillator potential in the tangent chart:
// (omega^2/2) rho^2 ((1+eps)^-1 + lambda rho^2)/(1+lambda rho^2).
double potential_osc(const TangentPoint& t, const SurfaceParams& s, double omega);

// Oscillator potential in the (q1, q2) chart, (omega^2/2) G_ab q_a q_b;
// composes with tangent_to_spheroid to reproduce potential_osc.
double potential_spheroid_coords(double q1, double q2, const SurfaceParams& s, double omega);

// Kinetic energy (1/2) G_ij v^i v^j with the closed-form metric.
double kinetic_energy(const ClassicalState& c, const SurfaceParams& s);

MomentumPair classical_momenta(const ClassicalState& c, const SurfaceParams& s);

// H_exact = T + V exactly in eps; h0_osc = (pi^2 + lambda L^2)/2 + (w^2/2)rho^2;
// h_eps = -(eps/2)[(1+lambda rho^2) p0^2 + w^2 rho^2/(1+lambda rho^2)].
// The residual h_exact - h0_osc - h_eps is O(eps^2).
HamiltonianParts classical_hamiltonians(const ClassicalState& c, const SurfaceParams& s,
                                        double omega);

}  // namespace spheroid
