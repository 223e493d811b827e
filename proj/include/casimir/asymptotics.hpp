#pragma once

#include "casimir/specfun.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class ScreeningRegime {
    unscreened,  // kl == 0
    weak,        // kl < 1
    moderate,    // 1 <= kl < 3
    strong,      // kl >= 3, where the zero-frequency asymptote is within 1%
};

struct AsymptoteValidity {
    bool x_gt_1 = false;  // the finite-frequency saddle point assumes x > 1
    ScreeningRegime kl_regime = ScreeningRegime::unscreened;
};

/// Low-temperature expansion for perfect mirrors in vacuum, J/m^2.
struct LowTemperatureSeries {
    double zero_point = 0.0;  // -pi^2 hbar c / (720 l^3)
    double pair_sea = 0.0;    // -zeta(3) (k T)^3 / (2 pi (hbar c)^2)
    double blackbody = 0.0;   // +pi^2 l (k T)^4 / (45 (hbar c)^3)

    double sum() const noexcept { return zero_point + pair_sea + blackbody; }
};

/// High-x free energy: the zero-frequency integral kept exact plus the
/// saddle-point asymptote of the n >= 1 terms. All energies J/m^2, all <= 0.
struct AsymptoteBreakdown {
    double n0 = 0.0;              // exact zero-frequency integral
    double n0_closed_form = 0.0;  // large-kl asymptote of n0; NaN when kappa == 0
    double npos = 0.0;            // asymptote of the n >= 1 terms
    double total = 0.0;           // n0 + npos
    LowTemperatureSeries low_t;
    AsymptoteValidity validity;
};

/// -(k T kappa^2 / 2 pi) e^{-2 l kappa} [1/(2 l kappa) + 1/(4 l^2 kappa^2)]. kappa > 0.
double asym_n0(double l, double T, double kappa);

/// -((k T)^2 / (l hbar c)) e^{-pi rho_bar x} e^{-2 pi x}, pi rho_bar x = (kappa l)^2 / (pi x).
double asym_npos(double l, double T, double kappa);

AsymptoteBreakdown asym_total(double l, double T, double kappa);

LowTemperatureSeries low_t_series(double l, double T);

/// Equilibrium electron (or positron) density 3 zeta(3) (k T)^3 / (2 pi^2 (hbar c)^3), m^-3.
double pair_density_si(double T);

/// Pair-sea form of the T^3 term: -pi (rho_- + rho_+) hbar c / 6, densities in m^-3.
double pair_sea_energy(double rho_minus, double rho_plus);

/// eta = pi x^3 (I1 + I2) split into its two integrals, each evaluated by
/// adaptive quadrature on [0, 1], [1, x^2], [x^2, inf) with theta sums.
struct EtaOracle {
    double eta1 = 0.0;
    double eta2 = 0.0;
    double abs_error = 0.0;

    double total() const noexcept { return eta1 + eta2; }
};

/// Requires point.x > 1.
EtaOracle eta_oracle(const ReducedPoint& point, const ThetaEvalPolicy& policy = {},
                     double rel_tol = 1e-10);

/// pi int_0^inf sqrt(y) e^{-(kl)^2 / (pi y)} omega_bar(y) dy.
double eta1_integral(double kl, const ThetaEvalPolicy& policy = {}, double rel_tol = 1e-10);

/// Relative deviation of eta1_integral from -4 pi l^2 F_n0 / (k T). Requires x > 1.
double eta1_identity_check(double l, double T, double kappa);

/// 2 pi x e^{-pi rho_bar x} e^{-2 pi x}: the Laplace estimate of eta2.
double eta2_saddle_point(const ReducedPoint& point);

/// K = int_1^{x^2} y^{-5/2} e^{-pi rho_bar y} omega_bar(y) omega_bar(x^2/y) dy with
/// the same integral using the lower and upper theta bounds.
struct SandwichBounds {
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
};
SandwichBounds i2_sandwich(const ReducedPoint& point, const ThetaEvalPolicy& policy = {});

}  // namespace casimir
