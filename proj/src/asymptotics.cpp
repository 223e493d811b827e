#include "casimir/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {
namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
}

double reduced_x(double l, double T) { return 2.0 * Constants::k_B * T * l / Constants::hbar_c; }

ScreeningRegime regime_of(double kl) {
    if (kl == 0.0) return ScreeningRegime::unscreened;
    if (kl < 1.0) return ScreeningRegime::weak;
    if (kl < 3.0) return ScreeningRegime::moderate;
    return ScreeningRegime::strong;
}

void require_oracle_domain(const ReducedPoint& p) {
    if (!(p.x > 1.0) || !std::isfinite(p.x))
        throw DomainError("eta oracle requires x > 1, got x = " + std::to_string(p.x));
    if (!(p.kl >= 0.0) || !std::isfinite(p.kl)) throw DomainError("kl must be non-negative");
}

}  // namespace

double asym_n0(double l, double T, double kappa) {
    require_positive(l, "l");
    require_positive(T, "T");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw DomainError("asym_n0 is undefined for kappa = 0; the unscreened limit is -zeta(3) k T / (8 pi l^2)");
    const double u = 2.0 * l * kappa;
    return -(Constants::k_B * T * kappa * kappa / (2.0 * pi)) * std::exp(-u) * (1.0 / u + 1.0 / (u * u));
}

double asym_npos(double l, double T, double kappa) {
    require_positive(l, "l");
    require_positive(T, "T");
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be non-negative");
    const double x = reduced_x(l, T);
    const double kl = kappa * l;
    const double kT = Constants::k_B * T;
    const double screening = kl * kl / (pi * x);
    return -(kT * kT / (l * Constants::hbar_c)) * std::exp(-screening - 2.0 * pi * x);
}

AsymptoteBreakdown asym_total(double l, double T, double kappa) {
    AsymptoteBreakdown out;
    out.n0 = free_energy_n0(l, T, kappa);
    out.n0_closed_form = kappa > 0.0 ? asym_n0(l, T, kappa) : std::numeric_limits<double>::quiet_NaN();
    out.npos = asym_npos(l, T, kappa);
    out.total = out.n0 + out.npos;
    out.low_t = low_t_series(l, T);
    out.validity.x_gt_1 = reduced_x(l, T) > 1.0;
    out.validity.kl_regime = regime_of(kappa * l);
    return out;
}

LowTemperatureSeries low_t_series(double l, double T) {
    require_positive(l, "l");
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("T must be non-negative");
    const double kT = Constants::k_B * T;
    const double hc = Constants::hbar_c;
    LowTemperatureSeries s;
    s.zero_point = casimir_energy_ideal(l);
    s.pair_sea = -Constants::zeta3 * kT * kT * kT / (2.0 * pi * hc * hc);
    s.blackbody = pi * pi * l * kT * kT * kT * kT / (45.0 * hc * hc * hc);
    return s;
}

double pair_density_si(double T) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("T must be non-negative");
    const double r = Constants::k_B * T / Constants::hbar_c;
    return 3.0 * Constants::zeta3 * r * r * r / (2.0 * pi * pi);
}

double pair_sea_energy(double rho_minus, double rho_plus) {
    return -pi * (rho_minus + rho_plus) * Constants::hbar_c / 6.0;
}

EtaOracle eta_oracle(const ReducedPoint& point, const ThetaEvalPolicy& policy, double rel_tol) {
    require_oracle_domain(point);
    const double x = point.x;
    const double x2 = x * x;
    const double damping = pi * point.rho_bar;
    auto wb = [&](double y) { return omega_bar(y, policy); };

    QuadratureOptions opt;
    opt.rel_tol = rel_tol;

    // y in [0, x^2]: e^{-pi rho_bar y} y^{-5/2} omega_bar(x^2/y) [2 omega_bar(y)]
    auto near = [&](double y, bool second) {
        const double base = std::exp(-damping * y) * std::pow(y, -2.5) * wb(x2 / y);
        return second ? base * 2.0 * wb(y) : base;
    };
    // y = x^2 / s on [x^2, inf): x^{-3} s^{1/2} e^{-pi rho_bar x^2 / s} omega_bar(s) [2 omega_bar(x^2/s)]
    auto far = [&](double s, bool second) {
        const double base = std::sqrt(s) * std::exp(-damping * x2 / s) * wb(s) / (x2 * x);
        return second ? base * 2.0 * wb(x2 / s) : base;
    };

    EtaOracle out;
    for (const bool second : {false, true}) {
        const auto a = integrate([&](double y) { return near(y, second); }, 0.0, 1.0, opt);
        const auto b = integrate([&](double y) { return near(y, second); }, 1.0, x2, opt);
        const auto c = integrate([&](double s) { return far(s, second); }, 0.0, 1.0, opt);
        const double value = pi * x2 * x * (a.value + b.value + c.value);
        out.abs_error += pi * x2 * x * (a.abs_error + b.abs_error + c.abs_error);
        (second ? out.eta2 : out.eta1) = value;
    }
    return out;
}

double eta1_integral(double kl, const ThetaEvalPolicy& policy, double rel_tol) {
    if (!(kl >= 0.0) || !std::isfinite(kl)) throw DomainError("kl must be non-negative");
    const double damping = kl * kl / pi;
    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    const auto inner = integrate(
        [&](double y) { return std::sqrt(y) * std::exp(-damping / y) * omega_bar(y, policy); }, 0.0,
        1.0, opt);
    // y = 1/s on [1, inf)
    const auto outer = integrate(
        [&](double s) {
            return std::pow(s, -2.5) * std::exp(-damping * s) * omega_bar(1.0 / s, policy);
        },
        0.0, 1.0, opt);
    return pi * (inner.value + outer.value);
}

double eta1_identity_check(double l, double T, double kappa) {
    require_positive(l, "l");
    require_positive(T, "T");
    const double x = reduced_x(l, T);
    if (!(x > 1.0)) throw DomainError("eta1 identity check requires x > 1, got x = " + std::to_string(x));
    const double reference = -4.0 * pi * l * l * free_energy_n0(l, T, kappa) / (Constants::k_B * T);
    const double quadrature = eta1_integral(kappa * l);
    return std::abs(quadrature - reference) / std::abs(reference);
}

double eta2_saddle_point(const ReducedPoint& point) {
    require_positive(point.x, "x");
    return 2.0 * pi * point.x * std::exp(-pi * point.rho_bar * point.x - 2.0 * pi * point.x);
}

SandwichBounds i2_sandwich(const ReducedPoint& point, const ThetaEvalPolicy& policy) {
    require_oracle_domain(point);
    const double x2 = point.x * point.x;
    const double damping = pi * point.rho_bar;
    QuadratureOptions opt;
    opt.rel_tol = 1e-12;

    auto weight = [&](double y) { return std::pow(y, -2.5) * std::exp(-damping * y); };
    SandwichBounds out;
    out.value = integrate(
                    [&](double y) {
                        return weight(y) * omega_bar(y, policy) * omega_bar(x2 / y, policy);
                    },
                    1.0, x2, opt)
                    .value;
    out.lower = integrate(
                    [&](double y) {
                        return weight(y) * omega_bar_bounds(y).first * omega_bar_bounds(x2 / y).first;
                    },
                    1.0, x2, opt)
                    .value;
    out.upper = integrate(
                    [&](double y) {
                        return weight(y) * omega_bar_bounds(y).second * omega_bar_bounds(x2 / y).second;
                    },
                    1.0, x2, opt)
                    .value;
    return out;
}

}  // namespace casimir
