#include "casimir/units.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

void require_finite_nonnegative(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
        throw DomainError(std::string(name) + " must be finite and non-negative, got " +
                          std::to_string(v));
}

}  // namespace

ReducedPoint ReducedPoint::from(double x, double kl) {
    ReducedPoint p;
    p.x = x;
    p.kl = kl;
    if (x > 0.0) {
        const double r = kl / (pi * x);
        p.rho_bar = r * r;
    } else {
        p.rho_bar = kl > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return p;
}

ReducedPoint reduce_parameters(double l, double T, double omega_p) {
    require_finite_nonnegative(l, "l");
    require_finite_nonnegative(T, "T");
    require_finite_nonnegative(omega_p, "omega_p");
    if (l == 0.0) throw DomainError("l must be positive");
    const double x = 2.0 * Constants::k_B * T * l / Constants::hbar_c;
    const double kl = omega_p / Constants::c * l;
    return ReducedPoint::from(x, kl);
}

PhysicalPoint restore_parameters(const ReducedPoint& point, double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("T must be positive to restore l");
    if (!(point.x > 0.0) || !std::isfinite(point.x)) throw DomainError("x must be positive");
    if (!(point.kl >= 0.0) || !std::isfinite(point.kl)) throw DomainError("kl must be non-negative");
    PhysicalPoint out;
    out.T = T;
    out.l = point.x * Constants::hbar_c / (2.0 * Constants::k_B * T);
    out.omega_p = point.kl / out.l * Constants::c;
    return out;
}

double density_to_plasma_frequency(double rho) {
    require_finite_nonnegative(rho, "rho");
    return std::sqrt(4.0 * pi * rho * Constants::e2 / Constants::m_e);
}

double plasma_frequency_to_density(double omega_p) {
    require_finite_nonnegative(omega_p, "omega_p");
    return omega_p * omega_p * Constants::m_e / (4.0 * pi * Constants::e2);
}

double casimir_energy_ideal(double l) {
    if (!(l > 0.0)) throw DomainError("l must be positive");
    return -pi * pi * Constants::hbar_c / (720.0 * l * l * l);
}

}  // namespace casimir
