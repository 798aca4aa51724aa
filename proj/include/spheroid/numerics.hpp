#pragma once

// Deterministic adaptive Gauss quadrature on finite intervals, central
// finite differences, and a symmetric tridiagonal eigenvalue kernel.

#include <functional>
#include <stdexcept>
#include <vector>

namespace spheroid::numerics {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int base_order = 31;  // Gauss points per panel
    int max_depth = 40;   // bisection levels before giving up
};

struct IntegralResult {
    double value = 0.0;
    double err_est = 0.0;
};

// Thrown when refinement runs out (depth or round-off limited) with the
// tolerance unmet; carries the best available estimate so callers can
// still inspect it.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double value, double err_est)
        : std::runtime_error(what), best_value(value), err_est(err_est) {}
    double best_value;
    double err_est;
};

// Adaptive bisection with a fixed-order Gauss rule per panel; the error
// estimate per panel is the difference between the base rule and a
// half-order Gauss rule. Panels bisect worst error first until the summed
// estimate meets the tolerance, with deterministic tie-breaking and a
// left-to-right final summation, so results are bit-reproducible for a
// given integrand. Gauss nodes are interior, which makes integrable
// endpoint singularities harmless.
IntegralResult integrate(const std::function<double(double)>& f, double lo,
                         double hi, const QuadratureSpec& spec = {});

// Second-order central stencils. order 1: (f(x+h)-f(x-h))/2h;
// order 2: (f(x+h)-2f(x)+f(x-h))/h^2.
double central_diff(const std::function<double(double)>& f, double x, double h,
                    int order);

// k_lowest smallest eigenvalues (ascending) of the symmetric tridiagonal
// matrix with the given diagonal and off-diagonal, via bisection on Sturm
// sequences. Deterministic; relative accuracy ~1e-12.
std::vector<double> eig_tridiag(const std::vector<double>& diag,
                                const std::vector<double>& offdiag,
                                int k_lowest);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]
// (ascending nodes). Exposed for tests.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace spheroid::numerics
