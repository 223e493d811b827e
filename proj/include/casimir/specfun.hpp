#pragma once

#include <utility>

namespace casimir {

/// Evaluation policy for omega_bar. Above `crossover` the direct sum is used;
/// below it the Jacobi dual form
///   omega_bar(y) = 1/2 { -1 + y^{-1/2} [1 + 2 omega_bar(1/y)] }.
struct ThetaEvalPolicy {
    double crossover = 1.0;
    double term_tolerance = 1e-13;
};

/// sum_{n>=1} exp(-n^2 pi y) by direct summation with a geometric tail bound.
/// Stops when the tail is below `tolerance` and below the double resolution of the sum.
double omega_bar_direct(double y, double tolerance = 1e-15);

/// sum_{n>=1} exp(-n^2 pi y), absolute error <= policy.term_tolerance.
double omega_bar(double y, const ThetaEvalPolicy& policy = {});

/// Strict bounds exp(-pi y) < omega_bar(y) < exp(-pi y) / (1 - exp(-2 pi y)).
std::pair<double, double> omega_bar_bounds(double y);

/// S_2(t) = sum_{n>=1} exp(-n^2 t) = omega_bar(t / pi).
double theta_sum(double t, const ThetaEvalPolicy& policy = {});

/// Hurwitz zeta sum_{n>=0} (n + q)^{-s} for s > 1, q > 0, via Euler-Maclaurin.
double hurwitz_zeta(double s, double q);

/// Riemann zeta for real s > 1, absolute error <= 1e-12.
double riemann_zeta(double s);

/// Epstein-Hurwitz sum  sum_{n>=1} (n^2 + a)^{-z},  z > 1/2, a >= 0.
double epstein_hurwitz_sum(double z, double a);

/// Generalized Epstein-Hurwitz zeta  2 sum_{n>=1} (n^2 + a)^{-z} + a^{-z}.
/// Only the convergent real domain z > 1/2 is implemented; a must be > 0.
double epstein_hurwitz_zeta(double z, double a);

/// g(u0) = int_{u0}^inf u ln(1 - e^{-u}) du
///       = -sum_{m>=1} e^{-m u0} (m u0 + 1) / m^3.
/// Negative, increasing, g(0) = -zeta(3), g(inf) = 0.
double log_tail_integral(double u0);

}  // namespace casimir
