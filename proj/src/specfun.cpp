#include "casimir/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"

namespace casimir {
namespace {

// B_{2k} for k = 1..10.
constexpr std::array<double, 10> bernoulli_even = {
    1.0 / 6.0,          -1.0 / 30.0,  1.0 / 42.0,         -1.0 / 30.0,        5.0 / 66.0,
    -691.0 / 2730.0,    7.0 / 6.0,    -3617.0 / 510.0,    43867.0 / 798.0,    -174611.0 / 330.0};

// B_{2k} / (2k)!
constexpr std::array<double, 10> bernoulli_over_factorial = [] {
    std::array<double, 10> out{};
    double factorial = 1.0;
    for (std::size_t k = 1; k <= out.size(); ++k) {
        factorial *= static_cast<double>((2 * k - 1) * (2 * k));
        out[k - 1] = bernoulli_even[k - 1] / factorial;
    }
    return out;
}();

constexpr std::size_t max_theta_terms = 10'000'000;

void require_positive_finite(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(v));
}

}  // namespace

double omega_bar_direct(double y, double tolerance) {
    require_positive_finite(y, "y");
    const double py = pi * y;
    double sum = 0.0;
    for (std::size_t n = 1; n < max_theta_terms; ++n) {
        const double dn = static_cast<double>(n);
        sum += std::exp(-dn * dn * py);
        // Remaining terms decay faster than a geometric series with ratio
        // exp(-(2n+3) pi y), starting at exp(-(n+1)^2 pi y).
        const double next = std::exp(-(dn + 1.0) * (dn + 1.0) * py);
        const double tail = next / -std::expm1(-(2.0 * dn + 3.0) * py);
        // Also resolve the sum to full relative precision; the terms are cheap.
        if (tail <= tolerance && tail <= 1e-17 * sum) return sum;
    }
    throw ConvergenceError("omega_bar direct sum exhausted term budget", sum,
                           std::numeric_limits<double>::infinity(), max_theta_terms);
}

double omega_bar(double y, const ThetaEvalPolicy& policy) {
    require_positive_finite(y, "y");
    require_positive_finite(policy.crossover, "crossover");
    require_positive_finite(policy.term_tolerance, "term_tolerance");
    if (y >= policy.crossover) return omega_bar_direct(y, policy.term_tolerance);
    // The dual form amplifies the inner error by y^{-1/2}.
    const double root = std::sqrt(y);
    const double inner = omega_bar_direct(1.0 / y, policy.term_tolerance * root);
    return 0.5 * (-1.0 + (1.0 + 2.0 * inner) / root);
}

std::pair<double, double> omega_bar_bounds(double y) {
    require_positive_finite(y, "y");
    const double lower = std::exp(-pi * y);
    return {lower, lower / -std::expm1(-2.0 * pi * y)};
}

double theta_sum(double t, const ThetaEvalPolicy& policy) {
    require_positive_finite(t, "t");
    return omega_bar(t / pi, policy);
}

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("s must exceed 1, got " + std::to_string(s));
    require_positive_finite(q, "q");

    // Direct terms up to w = N + q >= 12, then the Euler-Maclaurin remainder.
    const std::size_t direct = q >= 12.0 ? 0 : static_cast<std::size_t>(std::ceil(12.0 - q));
    double sum = 0.0;
    for (std::size_t n = 0; n < direct; ++n) sum += std::pow(static_cast<double>(n) + q, -s);

    const double w = static_cast<double>(direct) + q;
    const double w_pow = std::pow(w, -s);
    double remainder = w * w_pow / (s - 1.0) + 0.5 * w_pow;

    // Term k: B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * w^{-s-2k+1}
    double rising = s;          // s (s+1) ... (s+2k-2)
    double power = w_pow / w;   // w^{-s-2k+1}
    for (std::size_t k = 1; k <= bernoulli_over_factorial.size(); ++k) {
        const double term = bernoulli_over_factorial[k - 1] * rising * power;
        remainder += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum + remainder)) break;
        const double dk = static_cast<double>(k);
        rising *= (s + 2.0 * dk - 1.0) * (s + 2.0 * dk);
        power /= w * w;
    }
    return sum + remainder;
}

double riemann_zeta(double s) {
    if (!(s > 1.0) || !std::isfinite(s)) throw DomainError("riemann_zeta requires s > 1, got " + std::to_string(s));
    return hurwitz_zeta(s, 1.0);
}

double epstein_hurwitz_sum(double z, double a) {
    if (!(z > 0.5) || !std::isfinite(z))
        throw DomainError("epstein_hurwitz requires z > 1/2 (continuation not implemented), got " +
                          std::to_string(z));
    if (!(a >= 0.0) || !std::isfinite(a))
        throw DomainError("a must be finite and non-negative, got " + std::to_string(a));

    // Direct terms while a/n^2 > 1/4, then binomial expansion of
    // (n^2 + a)^{-z} = n^{-2z} sum_j binom(-z, j) (a/n^2)^j over Hurwitz zetas.
    const auto first_tail =
        static_cast<std::size_t>(std::max(1.0, std::ceil(2.0 * std::sqrt(a)) + 1.0));
    double sum = 0.0;
    for (std::size_t n = 1; n < first_tail; ++n) {
        const double dn = static_cast<double>(n);
        sum += std::pow(dn * dn + a, -z);
    }
    const double start = static_cast<double>(first_tail);
    double tail = 0.0;
    double coeff = 1.0;  // binom(-z, j) a^j
    for (std::size_t j = 0; j < 400; ++j) {
        const double dj = static_cast<double>(j);
        const double term = coeff * hurwitz_zeta(2.0 * z + 2.0 * dj, start);
        tail += term;
        if (a == 0.0 || std::abs(term) <= 1e-17 * std::abs(sum + tail)) return sum + tail;
        coeff *= -(z + dj) / (dj + 1.0) * a;
    }
    throw ConvergenceError("epstein_hurwitz binomial tail did not converge", sum + tail,
                           std::numeric_limits<double>::infinity(), 400);
}

double epstein_hurwitz_zeta(double z, double a) {
    if (a == 0.0) throw DomainError("epstein_hurwitz_zeta: a^{-z} term is singular at a = 0");
    return 2.0 * epstein_hurwitz_sum(z, a) + std::pow(a, -z);
}

double log_tail_integral(double u0) {
    if (!(u0 >= 0.0)) throw DomainError("u0 must be non-negative, got " + std::to_string(u0));
    if (std::isinf(u0)) return 0.0;

    if (u0 <= 1.0) {
        // g(u0) = -zeta(3) - int_0^{u0} u ln(1 - e^{-u}) du, expanding
        // ln((1 - e^{-u})/u) = -u/2 + sum_k B_{2k} u^{2k} / (2k (2k)!).
        if (u0 == 0.0) return -Constants::zeta3;
        const double u2 = u0 * u0;
        double head = 0.5 * u2 * std::log(u0) - 0.25 * u2 - u2 * u0 / 6.0;
        double power = u2 * u2;  // u0^{2k+2}
        for (std::size_t k = 1; k <= bernoulli_over_factorial.size(); ++k) {
            const double dk = static_cast<double>(k);
            const double term = bernoulli_over_factorial[k - 1] * power / (2.0 * dk * (2.0 * dk + 2.0));
            head += term;
            if (std::abs(term) <= 1e-18) break;
            power *= u2;
        }
        return -Constants::zeta3 - head;
    }

    // -sum_m e^{-m u0} (m u0 + 1) / m^3. For m > M the terms are bounded by
    // (u0 + 1) e^{-m u0} / (M+1)^2, a geometric series.
    const double q = std::exp(-u0);
    if (q == 0.0) return -0.0;
    const double geometric = 1.0 / -std::expm1(-u0);
    double sum = 0.0;
    double qm = 1.0;
    for (std::size_t m = 1; m < 100000; ++m) {
        const double dm = static_cast<double>(m);
        qm *= q;
        sum += qm * (dm * u0 + 1.0) / (dm * dm * dm);
        const double bound = (u0 + 1.0) * qm * q * geometric / ((dm + 1.0) * (dm + 1.0));
        if (bound <= 1e-16 * sum) break;
    }
    return -sum;
}

}  // namespace casimir
