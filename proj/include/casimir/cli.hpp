#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/dielectric.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

inline constexpr const char* tool_version = "casimir-plasma 1.0.0";

inline constexpr const char* csv_header =
    "l_m,T_K,wp_rad_s,x,kappa_l,F_total_J_m2,F_n0_J_m2,F_npos_J_m2,corr_factor,"
    "asym_n0_J_m2,asym_npos_J_m2,ratio_n0,ratio_npos,err";
inline constexpr const char* ratio_header =
    "l_m,T_K,wp_rad_s,x,kappa_l,F_total_J_m2,F_n0_J_m2,F_npos_J_m2,corr_factor,"
    "asym_n0_J_m2,asym_npos_J_m2,ratio_n0,ratio_npos,ratio_total,err";

enum class Spacing { linear, log };

/// Mirror and gap selection as given on the command line.
struct ModelSelection {
    std::string mirror = "perfect";  // perfect | plasma | drude | table
    double mirror_wp = 0.0;
    double mirror_gamma = 0.0;
    std::string mirror_file;
    double wp = 0.0;                 // gap plasma frequency; 0 is vacuum
    std::string medium_file;         // tabulated gap, overrides wp

    MirrorModel mirror_model() const;
    MediumModel medium_model() const;
    /// Perfect mirrors across a plasma (or vacuum): the series engine applies.
    bool ideal_plasma() const;
};

struct SweepSpec {
    double l_min = 0.0;
    double l_max = 0.0;
    std::size_t points = 2;
    Spacing spacing = Spacing::log;
    double T = 300.0;
    ModelSelection models;
    std::size_t threads = 1;

    void validate() const;
    std::vector<double> separations() const;
};

struct SweepRow {
    double l = 0.0;
    double T = 0.0;
    double wp = 0.0;
    double x = 0.0;
    double kl = 0.0;
    double F_total = 0.0;
    double F_n0 = 0.0;
    double F_npos = 0.0;
    double corr = 0.0;
    double asym_n0 = 0.0;
    double asym_npos = 0.0;
    double ratio_n0 = 0.0;
    double ratio_npos = 0.0;
    double ratio_total = 0.0;
    std::string err;
};

/// One row; numerical failures land in `err` instead of throwing.
SweepRow evaluate_row(double l, const SweepSpec& spec, const EngineConfig& cfg = {});

/// Rows in ascending l. Evaluated on spec.threads workers, returned in input order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const EngineConfig& cfg = {});

/// CSV line for a row, 10 significant digits, empty cells for undefined values.
std::string format_row(const SweepRow& row, bool with_ratio_total);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
