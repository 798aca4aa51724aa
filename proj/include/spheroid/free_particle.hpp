#pragma once

// Free particle on the sphere (exact) and on the near-sphere spheroid to
// first order in eps: highest-weight eigenfunctions, normalization,
// closed-form and quadrature energy shifts, and the off-diagonal matrix
// elements whose vanishing keeps the first-order state correction zero.

#include <complex>

#include "spheroid/geometry.hpp"
#include "spheroid/level_table.hpp"
#include "spheroid/numerics.hpp"

namespace spheroid::free_particle {

struct FreeState {
    int n = 0;
    SurfaceParams surface;

    FreeState(int n, const SurfaceParams& s);
    // Normalization a_n with a_n^2 = lambda Gamma(3/2+n) / (pi^(3/2) Gamma(1+n)).
    double norm_a() const;
};

// E(0) = lambda n (n+1) / 2.
double energy0(int n, const SurfaceParams& s);

// psi_n = a_n (sin chi)^n e^{i n phi} on the upper hemisphere chart.
std::complex<double> wavefunction(const FreeState& st, const TangentPoint& t);

// Radial factor a_n (sin chi)^n; used by the grid oracle.
double radial_wavefunction(const FreeState& st, double chi);

// First-order shift, closed Gamma-ratio form (assembled in log space; the
// 2n^2 Gamma(n)/Gamma(1+n) factor is taken as its limit 2n so n=0 is regular).
double shift1_closed(const FreeState& st);

// Same shift as the chi-integral, evaluated by adaptive quadrature.
double shift1_quadrature(const FreeState& st,
                         const numerics::QuadratureSpec& spec = {});

// Symmetrized first-order matrix element between distinct highest-weight
// states m and n under the sphere measure; vanishes by azimuthal
// orthogonality. m = n is a domain error (use the shift operations).
std::complex<double> offdiag_element(int m, int n, const SurfaceParams& s,
                                     const numerics::QuadratureSpec& spec = {});

// Spectrum rows n = 0..n_max with both shift routes and their discrepancy.
LevelTable spectrum(int n_max, const SurfaceParams& s,
                    const numerics::QuadratureSpec& spec = {});

}  // namespace spheroid::free_particle
