#pragma once

#include "casimir/lifshitz.hpp"

/// Femtometer-scale estimates: the screened zero-frequency exponent e^{-2 l kappa}
/// matched to a Yukawa e^{-l / l_pi}. Energies in MeV, lengths in fm, number
/// densities in fm^-3, temperatures in K.
namespace casimir::nuclear {

/// Neutral pion rest energy, MeV.
inline constexpr double pion_mass_MeV = 135.0;
/// Temperature quoted for the nuclear estimate, K.
inline constexpr double quoted_temperature_K = 3.2e11;
/// Screening length quoted for a 135 MeV meson, fm.
inline constexpr double quoted_screening_length_fm = 1.458;

struct NuclearReport {
    double meson_mass = 0.0;         // MeV
    double screening_length = 0.0;   // fm, hbar c / m
    double kappa = 0.0;              // fm^-1, 1 / (2 screening_length)
    double pair_density_each = 0.0;  // fm^-3, required density per species
    double total_density = 0.0;      // fm^-3, electrons + positrons
    double effective_temperature = 0.0;  // K, temperature used for the energies
    double kT = 0.0;                 // MeV
    double x = 0.0;
    double kl = 0.0;
    double E_n0 = 0.0;               // MeV, zero-frequency asymptote
    double E_n0_exact = 0.0;         // MeV, exact zero-frequency integral
    double E_npos_asym = 0.0;        // MeV, n >= 1 asymptote
    double E_npos_exact = 0.0;       // MeV, exact n >= 1 Matsubara sum
    double E_total = 0.0;            // MeV, E_n0 + E_npos_asym
    double E_total_exact = 0.0;      // MeV, exact engine total
    double plate_area = 0.0;         // fm^2
    double separation = 0.0;         // fm
};

/// 2 hbar omega_p for a total (electron + positron) density in fm^-3.
double meson_mass_from_density(double rho_total);
double density_from_meson_mass(double meson_mass);

/// hbar c / m, fm.
double screening_length(double meson_mass);

/// Per-species equilibrium pair density at temperature T, fm^-3.
double pair_density(double T);
double temperature_from_pair_density(double rho_each);

/// Temperature whose equilibrium pair plasma (rho_total = 2 rho_each) gives
/// the meson mass.
double temperature_from_meson_mass(double meson_mass);

/// hbar c / (2 l k_B): zero-point energy equated to the blackbody term.
double effective_temperature(double l);

NuclearReport energy_partition(double l, double T, double meson_mass, double area,
                               const EngineConfig& cfg = {});

}  // namespace casimir::nuclear
