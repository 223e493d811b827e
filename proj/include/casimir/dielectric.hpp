#pragma once

#include <istream>
#include <variant>
#include <vector>

namespace casimir {

struct Vacuum {};

/// Collisionless plasma: eps(i xi) = 1 + omega_p^2 / xi^2.
struct Plasma {
    double omega_p = 0.0;  // rad/s
    explicit Plasma(double omega_p);
};

/// eps(i xi) = 1 + omega_p^2 / (xi (xi + gamma)).
struct Drude {
    double omega_p = 0.0;  // rad/s
    double gamma = 0.0;    // rad/s
    Drude(double omega_p, double gamma);
};

struct DielectricSample {
    double xi = 0.0;   // rad/s
    double eps = 1.0;  // eps(i xi)
};

/// Sampled eps(i xi), interpolated linearly in (ln xi, ln eps) and clamped to
/// the end values outside the sampled range.
class Tabulated {
public:
    explicit Tabulated(std::vector<DielectricSample> samples);
    const std::vector<DielectricSample>& samples() const noexcept { return samples_; }

private:
    std::vector<DielectricSample> samples_;
};

using MediumModel = std::variant<Vacuum, Plasma, Drude, Tabulated>;

struct PerfectMetal {};
struct Material {
    MediumModel medium;
};
using MirrorModel = std::variant<PerfectMetal, Material>;

/// How eps(i xi) behaves as xi -> 0.
enum class Divergence {
    none,            // finite
    inverse_linear,  // Drude-like, eps ~ L / xi
    inverse_square,  // plasma-like, eps ~ L / xi^2
    perfect,         // perfect conductor at every frequency
};

/// eps(i xi) with enough information for reflection coefficients to take the
/// analytic xi -> 0 limit instead of propagating infinities.
struct Permittivity {
    double value = 1.0;             // eps; +inf when divergent at xi = 0
    double value_xi2 = 0.0;         // eps * xi^2 (rad/s)^2, its limit at xi = 0
    Divergence divergence = Divergence::none;
    double leading = 0.0;           // L in eps ~ L / xi^k at xi = 0

    bool diverges() const noexcept { return divergence != Divergence::none; }
};

Permittivity eval_epsilon(const MediumModel& model, double xi);
Permittivity eval_mirror(const MirrorModel& mirror, double xi);

/// Reads the `xi_rad_s,eps` CSV format. Blank lines and lines starting with
/// '#' are ignored. Throws ParseError with the 1-based line number.
Tabulated load_dielectric_table(std::istream& in);

/// Samples a model on a log grid of `points` frequencies in [xi_min, xi_max].
Tabulated tabulate(const MediumModel& model, double xi_min, double xi_max, std::size_t points);

}  // namespace casimir
