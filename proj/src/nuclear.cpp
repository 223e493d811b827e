#include "casimir/nuclear.hpp"

#include <cmath>
#include <string>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"

namespace casimir::nuclear {
namespace {

constexpr double per_fm3 = 1e45;     // m^-3 per fm^-3
constexpr double fm2 = 1e-30;        // m^2 per fm^2

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
}

}  // namespace

double meson_mass_from_density(double rho_total) {
    if (!(rho_total >= 0.0) || !std::isfinite(rho_total))
        throw DomainError("rho_total must be non-negative, got " + std::to_string(rho_total));
    const double omega_p = density_to_plasma_frequency(rho_total * per_fm3);
    return 2.0 * Constants::hbar * omega_p / Constants::MeV;
}

double density_from_meson_mass(double meson_mass) {
    if (!(meson_mass >= 0.0) || !std::isfinite(meson_mass))
        throw DomainError("meson_mass must be non-negative");
    const double omega_p = meson_mass * Constants::MeV / (2.0 * Constants::hbar);
    return plasma_frequency_to_density(omega_p) / per_fm3;
}

double screening_length(double meson_mass) {
    require_positive(meson_mass, "meson_mass");
    return Constants::hbar_c_MeV_fm / meson_mass;
}

double pair_density(double T) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("T must be non-negative");
    return pair_density_si(T) / per_fm3;
}

double temperature_from_pair_density(double rho_each) {
    if (!(rho_each >= 0.0) || !std::isfinite(rho_each)) throw DomainError("rho must be non-negative");
    const double kT_over_hbar_c = std::cbrt(rho_each * per_fm3 * 2.0 * pi * pi / (3.0 * Constants::zeta3));
    return kT_over_hbar_c * Constants::hbar_c / Constants::k_B;
}

double temperature_from_meson_mass(double meson_mass) {
    require_positive(meson_mass, "meson_mass");
    return temperature_from_pair_density(0.5 * density_from_meson_mass(meson_mass));
}

double effective_temperature(double l) {
    require_positive(l, "l");
    return Constants::hbar_c_MeV_fm / (2.0 * l * Constants::k_B_MeV);
}

NuclearReport energy_partition(double l, double T, double meson_mass, double area,
                               const EngineConfig& cfg) {
    require_positive(l, "separation");
    require_positive(T, "T");
    require_positive(meson_mass, "meson_mass");
    require_positive(area, "area");

    NuclearReport r;
    r.meson_mass = meson_mass;
    r.screening_length = screening_length(meson_mass);
    r.kappa = 1.0 / (2.0 * r.screening_length);
    r.total_density = density_from_meson_mass(meson_mass);
    r.pair_density_each = 0.5 * r.total_density;
    r.effective_temperature = T;
    r.kT = Constants::k_B_MeV * T;
    r.plate_area = area;
    r.separation = l;

    const double l_si = l * Constants::fm;
    const double kappa_si = r.kappa / Constants::fm;
    const double to_MeV = area * fm2 / Constants::MeV;  // (J/m^2) -> MeV on the plate
    const ReducedPoint point = reduce_parameters(l_si, T, kappa_si * Constants::c);
    r.x = point.x;
    r.kl = point.kl;

    // Binding energies are reported positive.
    r.E_n0 = -asym_n0(l_si, T, kappa_si) * to_MeV;
    r.E_npos_asym = -asym_npos(l_si, T, kappa_si) * to_MeV;
    const FreeEnergyBreakdown exact = free_energy_ideal_plasma(l_si, T, kappa_si * Constants::c, cfg);
    r.E_n0_exact = -exact.n0 * to_MeV;
    r.E_npos_exact = -exact.npos * to_MeV;
    r.E_total = r.E_n0 + r.E_npos_asym;
    r.E_total_exact = -exact.total * to_MeV;
    return r;
}

}  // namespace casimir::nuclear
