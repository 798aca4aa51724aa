#include "spheroid/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spheroid::specfun {

namespace {

// Lanczos approximation, g = 7, 9 coefficients (~15 significant digits on
// the positive real axis).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
    // Valid for x >= 0.5; callers shift smaller arguments up first.
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        series += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    if (x < 0.5) {
        // Gamma(x) = Gamma(x+1)/x keeps the Lanczos kernel in its sweet spot.
        return log_gamma_lanczos(x + 1.0) - std::log(x);
    }
    return log_gamma_lanczos(x);
}

double gamma_fn(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma_fn: argument must be positive");
    }
    if (x > 30.0) {
        return std::exp(log_gamma(x));
    }
    // Small arguments: exponentiating the log form is already exact to
    // working precision and keeps a single code path.
    return std::exp(log_gamma(x));
}

double pochhammer(double a, int k) {
    if (k < 0) {
        throw std::domain_error("pochhammer: k must be nonnegative");
    }
    double prod = 1.0;
    for (int j = 0; j < k; ++j) {
        prod *= a + static_cast<double>(j);
    }
    return prod;
}

double hyp2f1_terminating(int neg_deg, double b, double c, double z) {
    if (neg_deg < 0) {
        throw std::domain_error("hyp2f1_terminating: degree must be nonnegative");
    }
    // c = 0, -1, -2, ..., -(neg_deg-1) would divide by zero inside the series.
    if (c <= 0.0) {
        const double nearest = std::round(c);
        if (std::abs(c - nearest) < 1e-12 && nearest >= -static_cast<double>(neg_deg)) {
            throw std::domain_error("hyp2f1_terminating: c is a forbidden nonpositive integer");
        }
    }
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < neg_deg; ++j) {
        const double dj = static_cast<double>(j);
        term *= (-static_cast<double>(neg_deg) + dj) * (b + dj) /
                ((c + dj) * (dj + 1.0)) * z;
        sum += term;
    }
    return sum;
}

double jacobi_p(const JacobiParams& p, double x) {
    if (p.degree < 0) {
        throw std::domain_error("jacobi_p: degree must be nonnegative");
    }
    if (std::abs(x) > 1.0) {
        throw std::domain_error("jacobi_p: x must lie in [-1, 1]");
    }
    const double a = p.alpha;
    const double b = p.beta;
    if (p.degree == 0) return 1.0;
    double pkm1 = 1.0;
    double pk = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 1; k < p.degree; ++k) {
        const double dk = static_cast<double>(k);
        const double c1 = 2.0 * (dk + 1.0) * (dk + a + b + 1.0) * (2.0 * dk + a + b);
        const double c2 = (2.0 * dk + a + b + 1.0) * (a * a - b * b);
        const double c3 = (2.0 * dk + a + b) * (2.0 * dk + a + b + 1.0) * (2.0 * dk + a + b + 2.0);
        const double c4 = 2.0 * (dk + a) * (dk + b) * (2.0 * dk + a + b + 2.0);
        const double pkp1 = ((c2 + c3 * x) * pk - c4 * pkm1) / c1;
        pkm1 = pk;
        pk = pkp1;
    }
    return pk;
}

double jacobi_p_deriv(const JacobiParams& p, double x, int m) {
    if (m < 0) {
        throw std::domain_error("jacobi_p_deriv: m must be nonnegative");
    }
    if (m == 0) return jacobi_p(p, x);
    if (m > p.degree) return 0.0;
    // d^m/dx^m P_k^{(a,b)} = (a+b+k+1)_m / 2^m * P_{k-m}^{(a+m,b+m)}.
    const double dm = static_cast<double>(m);
    const double prefactor =
        pochhammer(p.alpha + p.beta + static_cast<double>(p.degree) + 1.0, m) /
        std::pow(2.0, dm);
    const JacobiParams shifted{p.degree - m, p.alpha + dm, p.beta + dm};
    return prefactor * jacobi_p(shifted, x);
}

double wallis_integral(double n) {
    if (!(n >= 0.0)) {
        throw std::domain_error("wallis_integral: exponent must be nonnegative");
    }
    const double root_pi = std::sqrt(std::numbers::pi);
    return root_pi * std::exp(log_gamma(0.5 * (1.0 + n)) - log_gamma(1.0 + 0.5 * n)) / 2.0;
}

}  // namespace spheroid::specfun
