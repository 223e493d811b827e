#pragma once

#include <cstddef>

#include "casimir/dielectric.hpp"
#include "casimir/units.hpp"

namespace casimir {

struct EngineConfig {
    double rel_tolerance = 1e-12;        // Matsubara truncation, relative to |F|
    std::size_t max_matsubara = 10'000'000;
    double quadrature_rel_tol = 1e-11;   // per q-integral (and per xi-integral at T = 0)

    void validate() const;
};

/// Free energy per unit area, J/m^2, split into the zero-frequency term and
/// the sum over n >= 1.
struct FreeEnergyBreakdown {
    double total = 0.0;
    double n0 = 0.0;
    double npos = 0.0;
    double correction_factor = 0.0;
    std::size_t n_terms = 0;  // Matsubara terms summed, including n = 0
    double est_error = 0.0;   // absolute bound, J/m^2
};

/// The dimensionless form eta = -4 pi l^2 F / (k T), split the same way.
struct EtaSplit {
    double n0 = 0.0;
    double npos = 0.0;
    std::size_t n_terms = 0;
    double est_error = 0.0;

    double total() const noexcept { return n0 + npos; }
};

struct Reflection {
    double tm = 0.0;
    double te = 0.0;
};

/// xi_n = 2 pi n k_B T / hbar.
double matsubara_frequency(std::size_t n, double T);

/// gamma = sqrt(q^2 + eps xi^2 / c^2) on the imaginary frequency axis.
double gamma_coeff(double q, double eps, double xi);
double gamma_coeff(double q, const Permittivity& eps);

/// Reflection amplitudes at the gap/mirror interface seen from the gap:
///   r_tm = (eps_m g_gap - eps_gap g_m) / (eps_m g_gap + eps_gap g_m)
///   r_te = (g_gap - g_m) / (g_gap + g_m)
/// At xi = 0 a diverging permittivity is resolved by its order: the faster
/// divergence wins r_tm (-> +1 for the mirror, -1 for the gap); r_te uses the
/// finite limit of eps xi^2, so Drude mirrors give r_te -> 0.
Reflection fresnel(double q, double xi, const Permittivity& gap, const Permittivity& mirror);
Reflection fresnel(double q, double xi, double eps_gap, double eps_mirror);

/// f = 1 - exp(-2 gamma_gap d) r^2.
double mode_condition(double gamma_gap, double d, double r);

/// Perfect mirrors across a plasma, in reduced form. Each Matsubara term is
/// the closed series -log_tail_integral(2 sqrt((pi n x)^2 + kl^2)).
EtaSplit eta_ideal_plasma(const ReducedPoint& point, const EngineConfig& cfg = {});

FreeEnergyBreakdown free_energy_ideal_plasma(double l, double T, double omega_p,
                                             const EngineConfig& cfg = {});

/// (k T / 2 pi) int_kappa^inf t ln(1 - e^{-2 l t}) dt.
double free_energy_n0(double l, double T, double kappa);

/// Matsubara sum with q-integrals by adaptive quadrature, any mirror and gap.
FreeEnergyBreakdown free_energy_general(double l, double T, const MirrorModel& mirror,
                                        const MediumModel& medium, const EngineConfig& cfg = {});

/// T = 0 energy per area from the nested (xi, q) integral.
double free_energy_zero_temperature(double l, const MirrorModel& mirror, const MediumModel& medium,
                                    const EngineConfig& cfg = {});

/// F divided by the ideal zero-temperature Casimir energy -pi^2 hbar c / (720 l^3).
double correction_factor(double F, double l);

}  // namespace casimir
