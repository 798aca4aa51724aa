#pragma once

// Self-contained real special functions: Gamma, Pochhammer symbols, the
// terminating Gauss hypergeometric series, Jacobi polynomials and their
// derivatives. Everything here is a pure function of its arguments.

namespace spheroid::specfun {

// Jacobi polynomial parameters P_k^{(alpha,beta)} in the classical
// orthogonality range alpha > -1, beta > -1, degree k >= 0.
struct JacobiParams {
    int degree = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

// log Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// Gamma(x) for x > 0. Large arguments go through the log path so that
// ratios of large Gammas can be assembled without overflow.
double gamma_fn(double x);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

// Terminating 2F1(-neg_deg, b; c; z) summed in fixed ascending order.
// c must not be zero or a negative integer >= -neg_deg.
double hyp2f1_terminating(int neg_deg, double b, double c, double z);

// P_k^{(alpha,beta)}(x) for |x| <= 1 by the three-term degree recurrence.
double jacobi_p(const JacobiParams& p, double x);

// m-th derivative d^m/dx^m P_k^{(alpha,beta)}(x); returns 0 when m > k.
double jacobi_p_deriv(const JacobiParams& p, double x, int m);

// Integral of (sin chi)^n over [0, pi/2] for real n >= 0:
// sqrt(pi) Gamma((1+n)/2) / (2 Gamma(1+n/2)).
double wallis_integral(double n);

}  // namespace spheroid::specfun
