#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/specfun.hpp"

namespace casimir {
namespace {

// Integrand cut where the exponential factor has fallen by e^{-75} relative
// to its value at q = 0.
constexpr double exponent_margin = 75.0;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
}

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Upper bound on |log_tail_integral(u)|: (u + 1) e^{-u} / (1 - e^{-u}).
double tail_envelope(double u) { return (u + 1.0) * std::exp(-u) / -std::expm1(-u); }

/// Bound on sum_{j>=0} envelope(start + j * step), step > 0.
double tail_sum_bound(double start, double step) {
    const double head = tail_envelope(start);
    const double integral = (start + 2.0) * std::exp(-start) / -std::expm1(-start) / step;
    return head + integral;
}

/// ln(1 - r2 e^{-t}) without cancellation for r2 -> 1, t -> 0.
double log_one_minus(double r2, double t) {
    const double v = r2 * std::exp(-t);
    if (v < 0.5) return std::log1p(-v);
    return std::log((1.0 - r2) - r2 * std::expm1(-t));
}

double prefactor(double l, double T) { return -Constants::k_B * T / (4.0 * pi * l * l); }

FreeEnergyBreakdown to_breakdown(const EtaSplit& eta, double l, double T) {
    const double scale = prefactor(l, T);
    FreeEnergyBreakdown out;
    out.n0 = scale * eta.n0;
    out.npos = scale * eta.npos;
    out.total = out.n0 + out.npos;
    out.correction_factor = correction_factor(out.total, l);
    out.n_terms = eta.n_terms;
    out.est_error = std::abs(scale) * eta.est_error;
    return out;
}

/// Reduced Matsubara term -1/2 int_0^inf s ds [ln f_tm + ln f_te], s = 2 q l,
/// for imaginary frequency xi. Returns value and quadrature error.
QuadratureResult reduced_term(double l, double xi, const MirrorModel& mirror,
                              const MediumModel& medium, double rel_tol) {
    const Permittivity gap = eval_epsilon(medium, xi);
    const Permittivity wall = eval_mirror(mirror, xi);
    const double scale = 2.0 * l / Constants::c;
    const double u0 = scale * std::sqrt(gap.value_xi2);

    auto log_modes = [&](double s) {
        const double q = s / (2.0 * l);
        const double t = std::sqrt(s * s + u0 * u0);
        const Reflection r = fresnel(q, xi, gap, wall);
        return log_one_minus(r.tm * r.tm, t) + log_one_minus(r.te * r.te, t);
    };

    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    QuadratureResult res;
    if (u0 > 0.0) {
        // s = u0 sinh v, s ds = u0^2 sinh v cosh v dv
        const double v_max = std::acosh(1.0 + exponent_margin / u0);
        res = integrate(
            [&](double v) {
                const double sh = std::sinh(v);
                return u0 * u0 * sh * std::cosh(v) * log_modes(u0 * sh);
            },
            0.0, v_max, opt);
    } else {
        res = integrate_pieces([&](double s) { return s * log_modes(s); },
                               {0.0, 1.0, 10.0, exponent_margin + 5.0}, opt);
    }
    res.value *= -0.5;
    res.abs_error *= 0.5;
    return res;
}

}  // namespace

void EngineConfig::validate() const {
    require_positive(rel_tolerance, "rel_tolerance");
    require_positive(quadrature_rel_tol, "quadrature_rel_tol");
    if (max_matsubara < 1) throw DomainError("max_matsubara must be at least 1");
}

double matsubara_frequency(std::size_t n, double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw DomainError("T must be positive for Matsubara frequencies; use the zero-temperature path");
    return 2.0 * pi * static_cast<double>(n) * Constants::k_B * T / Constants::hbar;
}

double gamma_coeff(double q, double eps, double xi) {
    if (!(q >= 0.0)) throw DomainError("q must be non-negative");
    if (!(eps >= 1.0)) throw DomainError("eps must be >= 1");
    if (!(xi >= 0.0)) throw DomainError("xi must be non-negative");
    const double k = xi / Constants::c;
    return std::sqrt(q * q + eps * k * k);
}

double gamma_coeff(double q, const Permittivity& eps) {
    if (!(q >= 0.0)) throw DomainError("q must be non-negative");
    return std::sqrt(q * q + eps.value_xi2 / (Constants::c * Constants::c));
}

Reflection fresnel(double q, double xi, const Permittivity& gap, const Permittivity& mirror) {
    if (!(q >= 0.0) || !(xi >= 0.0)) throw DomainError("q and xi must be non-negative");
    if (q == 0.0 && xi == 0.0) throw DomainError("fresnel is indeterminate at q = xi = 0");
    if (mirror.divergence == Divergence::perfect) return {1.0, -1.0};
    if (gap.divergence == Divergence::perfect) return {-1.0, 1.0};

    const double g_gap = gamma_coeff(q, gap);
    const double g_m = gamma_coeff(q, mirror);
    Reflection r;
    r.te = (g_gap - g_m) / (g_gap + g_m);

    if (!gap.diverges() && !mirror.diverges()) {
        const double a = mirror.value * g_gap;
        const double b = gap.value * g_m;
        r.tm = (a - b) / (a + b);
    } else if (mirror.divergence == gap.divergence) {
        const double a = mirror.leading * g_gap;
        const double b = gap.leading * g_m;
        r.tm = (a - b) / (a + b);
    } else {
        r.tm = static_cast<int>(mirror.divergence) > static_cast<int>(gap.divergence) ? 1.0 : -1.0;
    }
    return r;
}

Reflection fresnel(double q, double xi, double eps_gap, double eps_mirror) {
    if (!(eps_gap >= 1.0)) throw DomainError("eps_gap must be >= 1");
    if (std::isinf(eps_mirror)) return {1.0, -1.0};
    if (!(eps_mirror >= 1.0)) throw DomainError("eps_mirror must be >= 1");
    const Permittivity gap{eps_gap, eps_gap * xi * xi, Divergence::none, 0.0};
    const Permittivity wall{eps_mirror, eps_mirror * xi * xi, Divergence::none, 0.0};
    return fresnel(q, xi, gap, wall);
}

double mode_condition(double gamma_gap, double d, double r) {
    if (!(d > 0.0)) throw DomainError("d must be positive");
    if (!(gamma_gap >= 0.0)) throw DomainError("gamma must be non-negative");
    if (!(std::abs(r) <= 1.0)) throw DomainError("|r| must not exceed 1");
    return 1.0 - std::exp(-2.0 * gamma_gap * d) * r * r;
}

EtaSplit eta_ideal_plasma(const ReducedPoint& point, const EngineConfig& cfg) {
    cfg.validate();
    require_positive(point.x, "x");
    if (!(point.kl >= 0.0) || !std::isfinite(point.kl)) throw DomainError("kl must be non-negative");

    const double k2 = point.kl * point.kl;
    auto exponent = [&](std::size_t n) {
        const double a = pi * point.x * static_cast<double>(n);
        return 2.0 * std::sqrt(a * a + k2);
    };

    EtaSplit eta;
    eta.n0 = -0.5 * log_tail_integral(2.0 * point.kl);
    CompensatedSum npos;
    double magnitude = 0.0;
    for (std::size_t n = 1;; ++n) {
        const double u = exponent(n);
        const double term = -log_tail_integral(u);
        npos.add(term);
        magnitude += term;
        // u_n is convex in n, so the remaining exponents grow at least as fast as
        // the last increment.
        const double next = exponent(n + 1);
        const double tail = tail_sum_bound(next, std::max(next - u, std::numeric_limits<double>::min()));
        const double total = eta.n0 + npos.value();
        if (tail <= cfg.rel_tolerance * total || tail == 0.0) {
            eta.npos = npos.value();
            eta.n_terms = n + 1;
            eta.est_error = tail + 1e-15 * (magnitude + eta.n0);
            return eta;
        }
        if (n + 1 >= cfg.max_matsubara)
            throw ConvergenceError("Matsubara cutoff exceeds max_matsubara", total, tail, n + 1);
    }
}

FreeEnergyBreakdown free_energy_ideal_plasma(double l, double T, double omega_p,
                                             const EngineConfig& cfg) {
    require_positive(l, "l");
    require_positive(T, "T");
    const ReducedPoint point = reduce_parameters(l, T, omega_p);
    return to_breakdown(eta_ideal_plasma(point, cfg), l, T);
}

double free_energy_n0(double l, double T, double kappa) {
    require_positive(l, "l");
    require_positive(T, "T");
    if (!(kappa >= 0.0) || std::isnan(kappa)) throw DomainError("kappa must be non-negative");
    return Constants::k_B * T / (2.0 * pi) * log_tail_integral(2.0 * l * kappa) / (4.0 * l * l);
}

FreeEnergyBreakdown free_energy_general(double l, double T, const MirrorModel& mirror,
                                        const MediumModel& medium, const EngineConfig& cfg) {
    cfg.validate();
    require_positive(l, "l");
    require_positive(T, "T");
    const double x = 2.0 * Constants::k_B * T * l / Constants::hbar_c;
    const double step = 2.0 * pi * x;

    // Each term is bounded by the perfect-mirror vacuum term at the same xi_n
    // (|r| <= 1, eps_gap >= 1). When the sum itself vanishes (identical media)
    // stop once the bound is negligible against the vacuum n = 0 scale.
    const double floor = cfg.rel_tolerance * 1e-12 * 0.5 * Constants::zeta3;

    EtaSplit eta;
    const auto zero = reduced_term(l, 0.0, mirror, medium, cfg.quadrature_rel_tol);
    eta.n0 = 0.5 * zero.value;
    double quad_error = 0.5 * zero.abs_error;
    CompensatedSum npos;
    double magnitude = std::abs(eta.n0);
    for (std::size_t n = 1;; ++n) {
        const auto term = reduced_term(l, matsubara_frequency(n, T), mirror, medium,
                                       cfg.quadrature_rel_tol);
        npos.add(term.value);
        magnitude += std::abs(term.value);
        quad_error += term.abs_error;
        const double tail = tail_sum_bound(step * static_cast<double>(n + 1), step);
        const double total = std::abs(eta.n0 + npos.value());
        if (tail <= cfg.rel_tolerance * total || tail <= floor) {
            eta.npos = npos.value();
            eta.n_terms = n + 1;
            eta.est_error = tail + quad_error + 1e-15 * magnitude;
            return to_breakdown(eta, l, T);
        }
        if (n + 1 >= cfg.max_matsubara)
            throw ConvergenceError("Matsubara cutoff exceeds max_matsubara",
                                   prefactor(l, T) * (eta.n0 + npos.value()),
                                   std::abs(prefactor(l, T)) * tail, n + 1);
    }
}

double free_energy_zero_temperature(double l, const MirrorModel& mirror, const MediumModel& medium,
                                    const EngineConfig& cfg) {
    cfg.validate();
    require_positive(l, "l");
    // E = -(hbar c / (16 pi^2 l^3)) int_0^inf eta(w) dw with xi = c w / (2 l).
    QuadratureOptions opt;
    opt.rel_tol = cfg.quadrature_rel_tol * 10.0;
    const double inner_tol = cfg.quadrature_rel_tol;
    const auto outer = integrate_pieces(
        [&](double w) {
            const double xi = Constants::c * w / (2.0 * l);
            return reduced_term(l, xi, mirror, medium, inner_tol).value;
        },
        {0.0, 1.0, 5.0, 20.0, exponent_margin + 5.0}, opt);
    return -Constants::hbar_c / (16.0 * pi * pi * l * l * l) * outer.value;
}

double correction_factor(double F, double l) { return F / casimir_energy_ideal(l); }

}  // namespace casimir
