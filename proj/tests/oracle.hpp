#pragma once

// Slow, independent reference computations used only by the tests.

#include <cmath>
#include <cstddef>

#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace oracle {

using casimir::pi;

inline double relerr(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// sum_{n>=1} exp(-n^2 pi y), summed until the terms underflow.
inline double omega_bar_brute(double y) {
    double s = 0.0;
    for (std::size_t n = 1;; ++n) {
        const double t = std::exp(-static_cast<double>(n * n) * pi * y);
        s += t;
        if (t < 1e-300 || t < s * 1e-18) break;
    }
    return s;
}

/// int_{u0}^inf u ln(1 - e^{-u}) du by plain adaptive quadrature.
inline double g_quadrature(double u0) {
    casimir::QuadratureOptions opt;
    opt.rel_tol = 1e-13;
    auto f = [](double u) {
        if (u == 0.0) return 0.0;
        return u < 1.0 ? u * std::log(-std::expm1(-u)) : u * std::log1p(-std::exp(-u));
    };
    double total = 0.0;
    double lo = u0;
    for (double hi : {u0 + 1.0, u0 + 5.0, u0 + 20.0, u0 + 60.0, u0 + 200.0}) {
        total += casimir::integrate(f, lo, hi, opt).value;
        lo = hi;
    }
    return total;
}

/// eta for perfect mirrors across a plasma, as a plain Matsubara sum of
/// quadrature values of g. n = 0 halved.
inline double eta_brute(double x, double kl, std::size_t n_max = 4000) {
    double eta = -0.5 * g_quadrature(2.0 * kl);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double u0 = 2.0 * std::hypot(pi * static_cast<double>(n) * x, kl);
        if (u0 > 700.0) break;
        eta -= g_quadrature(u0);
    }
    return eta;
}

}  // namespace oracle
