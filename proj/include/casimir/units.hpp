#pragma once

#include <numbers>

namespace casimir {

/// CODATA-2018 constants. SI values are primary; the MeV/fm forms are derived
/// from them so that hbar_c and hbar*c can never drift apart.
///
///   quantity          value                      unit
///   hbar              1.054571817e-34            J s      (exact)
///   c                 299792458                  m/s      (exact)
///   k_B               1.380649e-23               J/K      (exact)
///   MeV               1.602176634e-13            J        (exact)
///   m_e               9.1093837015e-31           kg
///   alpha             7.2973525693e-3            -
///   zeta(3)           1.2020569031595942854      -
///
/// e^2 in Gaussian units is alpha * hbar_c; there is no charge constant.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;
    static constexpr double c = 299792458.0;
    static constexpr double k_B = 1.380649e-23;
    static constexpr double MeV = 1.602176634e-13;
    static constexpr double fm = 1e-15;
    static constexpr double m_e = 9.1093837015e-31;
    static constexpr double alpha = 7.2973525693e-3;
    static constexpr double zeta3 = 1.2020569031595942854;

    static constexpr double hbar_c = hbar * c;                        // J m
    static constexpr double hbar_c_MeV_fm = hbar_c / MeV / fm;        // MeV fm
    static constexpr double m_e_MeV = m_e * c * c / MeV;              // MeV/c^2
    static constexpr double k_B_MeV = k_B / MeV;                      // MeV/K
    static constexpr double e2 = alpha * hbar_c;                      // J m  (Gaussian e^2)
    static constexpr double e2_MeV_fm = alpha * hbar_c_MeV_fm;        // MeV fm
};

using Constants = PhysicalConstants;

/// The dimensionless state every core formula consumes.
///   x       = 2 k_B T l / (hbar c)
///   kl      = kappa l, kappa = omega_p / c
///   rho_bar = (kl / (pi x))^2
struct ReducedPoint {
    double x = 0.0;
    double kl = 0.0;
    double rho_bar = 0.0;

    /// Builds a point from (x, kl) and fills rho_bar. x == 0 gives the +inf sentinel
    /// (or 0 when kl == 0).
    static ReducedPoint from(double x, double kl);
};

struct PhysicalPoint {
    double l = 0.0;        // m
    double T = 0.0;        // K
    double omega_p = 0.0;  // rad/s
};

ReducedPoint reduce_parameters(double l, double T, double omega_p);

/// Inverse of reduce_parameters at known temperature. Requires T > 0.
PhysicalPoint restore_parameters(const ReducedPoint& point, double T);

/// omega_p = sqrt(4 pi rho e^2 / m_e), rho in m^-3.
double density_to_plasma_frequency(double rho);
double plasma_frequency_to_density(double omega_p);

/// -pi^2 hbar c / (720 l^3): the ideal zero-temperature Casimir energy per area.
double casimir_energy_ideal(double l);

inline constexpr double pi = std::numbers::pi;

}  // namespace casimir
