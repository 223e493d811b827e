#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/nuclear.hpp"
#include "casimir/units.hpp"

namespace casimir::cli {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    if (!std::isfinite(v)) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    return buf;
}

// Shortest text that reads back to the same double.
std::string fmt_exact(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

Tabulated read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open dielectric table '" + path + "'");
    try {
        return load_dielectric_table(in);
    } catch (const ParseError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

using Config = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Flat `key = value` lines; '#' starts a comment.
Config read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    Config cfg;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError(path + ": line " + std::to_string(n) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        cfg[key] = trim(line.substr(eq + 1));
    }
    return cfg;
}

std::vector<double> parse_list(const std::string& text, const std::string& key) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::replace(s.begin(), s.end(), '[', ' ');
    std::replace(s.begin(), s.end(), ']', ' ');
    std::istringstream is(s);
    std::vector<double> out;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError(key + ": '" + tok + "' is not a number");
        }
    }
    return out;
}

std::optional<std::string> find_config_path(int argc, const char* const* argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return std::nullopt;
}

// Config values become option defaults, so flags given on the command line win.
void apply_config(CLI::App& sub, const Config& cfg, std::vector<double>* wp_list) {
    for (const auto& [key, value] : cfg) {
        if (key == "config") continue;
        if (key == "wp" && wp_list) {
            *wp_list = parse_list(value, "wp");
            continue;
        }
        CLI::Option* opt = nullptr;
        try {
            opt = sub.get_option("--" + key);
        } catch (const CLI::OptionNotFound&) {
            throw DomainError("config: unknown key '" + key + "' for " + sub.get_name());
        }
        try {
            opt->default_val(value);
        } catch (const CLI::Error& e) {
            throw DomainError("config: " + key + ": " + e.what());
        }
    }
}

void add_model_flags(CLI::App& sub, ModelSelection& sel) {
    sub.add_option("--mirror", sel.mirror, "Mirror model")
        ->check(CLI::IsMember({"perfect", "plasma", "drude", "table"}));
    sub.add_option("--mirror-wp", sel.mirror_wp, "Mirror plasma frequency, rad/s")
        ->check(CLI::NonNegativeNumber);
    sub.add_option("--mirror-gamma", sel.mirror_gamma, "Mirror Drude damping, rad/s")
        ->check(CLI::NonNegativeNumber);
    sub.add_option("--mirror-file", sel.mirror_file, "Mirror eps(i xi) table (xi_rad_s,eps)");
    sub.add_option("--medium-file", sel.medium_file, "Gap eps(i xi) table, replaces --wp");
}

std::string model_flags_text(const ModelSelection& m) {
    std::string s = " --mirror=" + m.mirror;
    if (m.mirror == "plasma" || m.mirror == "drude") s += " --mirror-wp=" + fmt_exact(m.mirror_wp);
    if (m.mirror == "drude") s += " --mirror-gamma=" + fmt_exact(m.mirror_gamma);
    if (m.mirror == "table") s += " --mirror-file=" + m.mirror_file;
    if (!m.medium_file.empty()) s += " --medium-file=" + m.medium_file;
    return s;
}

void write_csv(std::ostream& out, const std::string& flags, const std::vector<SweepRow>& rows,
               bool ratio) {
    out << "# " << tool_version << '\n';
    out << "# flags: " << flags << '\n';
    out << (ratio ? ratio_header : csv_header) << '\n';
    for (const auto& r : rows) out << format_row(r, ratio) << '\n';
}

// Writes to --output when given, otherwise to `out`.
template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("--output: cannot open '" + path + "'");
    fn(file);
}

struct SweepFlags {
    double l_min = 0.0;
    double l_max = 0.0;
    std::size_t points = 50;
    std::string spacing = "log";
    double T = 300.0;
    std::vector<double> wp{0.0};
    std::size_t threads = 1;
    std::string output;
    std::string config;
    ModelSelection models;
};

void add_sweep_flags(CLI::App& sub, SweepFlags& f) {
    sub.add_option("--lmin", f.l_min, "Smallest separation, m")->check(CLI::PositiveNumber);
    sub.add_option("--lmax", f.l_max, "Largest separation, m")->check(CLI::PositiveNumber);
    sub.add_option("--points", f.points, "Number of separations (>= 2)");
    sub.add_option("--spacing", f.spacing, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));
    sub.add_option("--temp", f.T, "Temperature, K")->check(CLI::NonNegativeNumber);
    sub.add_option("--wp", f.wp, "Gap plasma frequency (one or more), rad/s")
        ->check(CLI::NonNegativeNumber)
        ->expected(1, 64);
    sub.add_option("--threads", f.threads, "Worker threads (0 = hardware)");
    sub.add_option("--output", f.output, "CSV destination (default stdout)");
    sub.add_option("--config", f.config, "key = value file; flags override it");
    add_model_flags(sub, f.models);
}

std::vector<SweepSpec> specs_from(const SweepFlags& f) {
    std::vector<SweepSpec> specs;
    for (double wp : f.wp) {
        SweepSpec s;
        s.l_min = f.l_min;
        s.l_max = f.l_max;
        s.points = f.points;
        s.spacing = f.spacing == "linear" ? Spacing::linear : Spacing::log;
        s.T = f.T;
        s.models = f.models;
        s.models.wp = wp;
        s.threads = f.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : f.threads;
        s.validate();
        specs.push_back(s);
    }
    return specs;
}

std::string sweep_flags_text(const char* name, const SweepFlags& f) {
    std::string s = name;
    s += " --lmin=" + fmt_exact(f.l_min) + " --lmax=" + fmt_exact(f.l_max) +
         " --points=" + std::to_string(f.points) + " --spacing=" + f.spacing +
         " --temp=" + fmt_exact(f.T) + " --wp=";
    for (std::size_t i = 0; i < f.wp.size(); ++i) s += (i ? "," : "") + fmt_exact(f.wp[i]);
    return s + model_flags_text(f.models);
}

int do_sweep(const SweepFlags& f, bool ratio, std::ostream& out) {
    const auto specs = specs_from(f);
    if (ratio) {
        for (const auto& s : specs) {
            if (!s.models.ideal_plasma())
                throw DomainError("ratio: asymptotes exist only for --mirror perfect with a plasma gap");
            if (!(s.models.wp > 0.0))
                throw DomainError("ratio: --wp must be > 0 (the zero-frequency asymptote is undefined at kappa = 0)");
            if (!(s.T > 0.0)) throw DomainError("ratio: --temp must be > 0");
        }
    }
    std::vector<SweepRow> rows;
    for (const auto& s : specs) {
        auto part = run_sweep(s);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    with_output(f.output, out, [&](std::ostream& o) {
        write_csv(o, sweep_flags_text(ratio ? "ratio" : "sweep", f), rows, ratio);
    });
    return exit_ok;
}

struct EvalFlags {
    std::optional<double> l;
    double T = 300.0;
    double wp = 0.0;
    std::string config;
    ModelSelection models;
};

int do_eval(const EvalFlags& f, std::ostream& out) {
    const double l = *f.l;
    ModelSelection models = f.models;
    models.wp = f.wp;
    const auto mirror = models.mirror_model();
    const auto medium = models.medium_model();
    const ReducedPoint p = reduce_parameters(l, f.T, models.medium_file.empty() ? f.wp : 0.0);

    if (f.T == 0.0) {
        const double E = free_energy_zero_temperature(l, mirror, medium);
        out << "F_total_J_m2=" << fmt(E) << " corr_factor=" << fmt(correction_factor(E, l))
            << " engine=zero_temperature\n";
        return exit_ok;
    }
    const FreeEnergyBreakdown b = models.ideal_plasma() ? free_energy_ideal_plasma(l, f.T, f.wp)
                                                        : free_energy_general(l, f.T, mirror, medium);
    out << "F_total_J_m2=" << fmt(b.total) << " F_n0_J_m2=" << fmt(b.n0) << " F_npos_J_m2=" << fmt(b.npos)
        << " corr_factor=" << fmt(b.correction_factor) << " x=" << fmt(p.x);
    if (models.medium_file.empty()) out << " kappa_l=" << fmt(p.kl);
    out << " n_terms=" << b.n_terms << " est_error_J_m2=" << fmt(b.est_error)
        << " engine=" << (models.ideal_plasma() ? "series" : "quadrature") << '\n';
    return exit_ok;
}

struct NuclearFlags {
    double meson_mass = nuclear::pion_mass_MeV;
    double sep = 0.5;
    double area = 1.0;
    std::string temp_mode = "paper";
    std::string config;
};

int do_nuclear(const NuclearFlags& f, std::ostream& out) {
    const double T_quoted = nuclear::quoted_temperature_K;
    const double T_balance = nuclear::effective_temperature(f.sep);
    const double T_density = nuclear::temperature_from_meson_mass(f.meson_mass);
    const double T = f.temp_mode == "balance" ? T_balance : f.temp_mode == "density" ? T_density : T_quoted;
    const auto r = nuclear::energy_partition(f.sep, T, f.meson_mass, f.area);

    auto line = [&](const char* key, double v, const char* unit) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-24s %.6g %s\n", key, v, unit);
        out << buf;
    };
    out << "temp_mode                " << f.temp_mode << '\n';
    line("meson_mass", r.meson_mass, "MeV");
    line("separation", r.separation, "fm");
    line("plate_area", r.plate_area, "fm^2");
    line("screening_length", r.screening_length, "fm");
    line("kappa", r.kappa, "fm^-1");
    line("total_density", r.total_density, "fm^-3");
    line("pair_density_each", r.pair_density_each, "fm^-3");
    line("T_used", r.effective_temperature, "K");
    line("T_quoted", T_quoted, "K");
    line("T_balance", T_balance, "K");
    line("T_density", T_density, "K");
    line("kT", r.kT, "MeV");
    line("x", r.x, "");
    line("kappa_l", r.kl, "");
    line("E_n0", r.E_n0, "MeV");
    line("E_n0_exact", r.E_n0_exact, "MeV");
    line("E_npos_asym", r.E_npos_asym, "MeV");
    line("E_npos_exact", r.E_npos_exact, "MeV");
    line("E_total", r.E_total, "MeV");
    line("E_total_exact", r.E_total_exact, "MeV");

    char note[256];
    std::snprintf(note, sizeof note,
                  "note: quoted T = %.3g K; zero-point balance at %.3g fm gives %.3g K (%+.1f%%); "
                  "pair density for %.4g MeV gives %.3g K (%+.1f%%)\n",
                  T_quoted, f.sep, T_balance, 100.0 * (T_balance / T_quoted - 1.0), f.meson_mass,
                  T_density, 100.0 * (T_density / T_quoted - 1.0));
    out << note;
    if (r.x < 1.0) out << "note: x < 1, the n >= 1 asymptote is outside its range of validity\n";
    return exit_ok;
}

}  // namespace

MirrorModel ModelSelection::mirror_model() const {
    if (mirror == "perfect") return PerfectMetal{};
    if (mirror == "plasma") {
        if (!(mirror_wp > 0.0)) throw DomainError("--mirror-wp must be > 0 for a plasma mirror");
        return Material{Plasma(mirror_wp)};
    }
    if (mirror == "drude") {
        if (!(mirror_wp > 0.0)) throw DomainError("--mirror-wp must be > 0 for a Drude mirror");
        if (!(mirror_gamma > 0.0)) throw DomainError("--mirror-gamma must be > 0 for a Drude mirror");
        return Material{Drude(mirror_wp, mirror_gamma)};
    }
    if (mirror == "table") {
        if (mirror_file.empty()) throw DomainError("--mirror-file is required with --mirror table");
        return Material{read_table(mirror_file)};
    }
    throw DomainError("--mirror: unknown model '" + mirror + "'");
}

MediumModel ModelSelection::medium_model() const {
    if (!medium_file.empty()) return read_table(medium_file);
    if (!(wp >= 0.0) || !std::isfinite(wp)) throw DomainError("--wp must be non-negative");
    if (wp == 0.0) return Vacuum{};
    return Plasma(wp);
}

bool ModelSelection::ideal_plasma() const { return mirror == "perfect" && medium_file.empty(); }

void SweepSpec::validate() const {
    if (!(l_min > 0.0) || !std::isfinite(l_min)) throw DomainError("--lmin must be positive");
    if (!(l_max > l_min) || !std::isfinite(l_max)) throw DomainError("--lmax must exceed --lmin");
    if (points < 2) throw DomainError("--points must be at least 2");
    if (!(T >= 0.0) || !std::isfinite(T)) throw DomainError("--temp must be non-negative");
    if (!(models.wp >= 0.0) || !std::isfinite(models.wp)) throw DomainError("--wp must be non-negative");
    if (threads == 0) throw DomainError("--threads must be positive");
}

std::vector<double> SweepSpec::separations() const {
    validate();
    std::vector<double> l(points);
    const double n = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / n;
        l[i] = spacing == Spacing::linear ? l_min + (l_max - l_min) * t
                                          : l_min * std::pow(l_max / l_min, t);
    }
    l.front() = l_min;
    l.back() = l_max;
    return l;
}

SweepRow evaluate_row(double l, const SweepSpec& spec, const EngineConfig& cfg) {
    SweepRow row;
    row.l = l;
    row.T = spec.T;
    row.wp = spec.models.wp;
    row.x = row.kl = nan;
    row.F_total = row.F_n0 = row.F_npos = row.corr = nan;
    row.asym_n0 = row.asym_npos = row.ratio_n0 = row.ratio_npos = row.ratio_total = nan;
    try {
        const bool plasma_gap = spec.models.medium_file.empty();
        const ReducedPoint p = reduce_parameters(l, spec.T, plasma_gap ? spec.models.wp : 0.0);
        row.x = p.x;
        if (plasma_gap) row.kl = p.kl;

        if (spec.T == 0.0) {
            row.F_total =
                free_energy_zero_temperature(l, spec.models.mirror_model(), spec.models.medium_model(), cfg);
            row.corr = correction_factor(row.F_total, l);
            return row;
        }
        const FreeEnergyBreakdown b =
            spec.models.ideal_plasma()
                ? free_energy_ideal_plasma(l, spec.T, spec.models.wp, cfg)
                : free_energy_general(l, spec.T, spec.models.mirror_model(), spec.models.medium_model(), cfg);
        row.F_total = b.total;
        row.F_n0 = b.n0;
        row.F_npos = b.npos;
        row.corr = b.correction_factor;

        if (spec.models.ideal_plasma()) {
            const double kappa = spec.models.wp / Constants::c;
            const AsymptoteBreakdown a = asym_total(l, spec.T, kappa);
            row.asym_n0 = a.n0_closed_form;
            row.asym_npos = a.npos;
            row.ratio_n0 = row.F_n0 / row.asym_n0;
            row.ratio_npos = row.F_npos / row.asym_npos;
            row.ratio_total = row.F_total / a.total;
        }
    } catch (const std::exception& e) {
        row.err = csv_safe(e.what());
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const EngineConfig& cfg) {
    const std::vector<double> ls = spec.separations();
    std::vector<SweepRow> rows(ls.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ls.size(); i = next++) rows[i] = evaluate_row(ls[i], spec, cfg);
    };
    const std::size_t n_workers = std::min(spec.threads, ls.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

std::string format_row(const SweepRow& r, bool with_ratio_total) {
    std::string s;
    for (double v : {r.l, r.T, r.wp, r.x, r.kl, r.F_total, r.F_n0, r.F_npos, r.corr, r.asym_n0,
                     r.asym_npos, r.ratio_n0, r.ratio_npos}) {
        s += fmt(v);
        s += ',';
    }
    if (with_ratio_total) {
        s += fmt(r.ratio_total);
        s += ',';
    }
    s += r.err;
    return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Screened Casimir-Lifshitz free energy between mirrors across a plasma", "casimir"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    EvalFlags ef;
    double eval_sep = 0.0;
    auto* eval = app.add_subcommand("eval", "Free energy at one separation");
    auto* sep_opt = eval->add_option("--sep", eval_sep, "Separation, m")->check(CLI::PositiveNumber);
    eval->add_option("--temp", ef.T, "Temperature, K")->check(CLI::NonNegativeNumber);
    eval->add_option("--wp", ef.wp, "Gap plasma frequency, rad/s")->check(CLI::NonNegativeNumber);
    eval->add_option("--config", ef.config, "key = value file; flags override it");
    add_model_flags(*eval, ef.models);

    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "Separation sweep as CSV");
    add_sweep_flags(*sweep, sf);

    SweepFlags rf;
    auto* ratio = app.add_subcommand("ratio", "Engine to asymptote ratios as CSV");
    add_sweep_flags(*ratio, rf);

    NuclearFlags nf;
    auto* nuc = app.add_subcommand("nuclear", "Femtometer-scale energy estimate");
    nuc->add_option("--meson-mass", nf.meson_mass, "Meson mass, MeV")->check(CLI::PositiveNumber);
    nuc->add_option("--sep", nf.sep, "Separation, fm")->check(CLI::PositiveNumber);
    nuc->add_option("--area", nf.area, "Plate area, fm^2")->check(CLI::PositiveNumber);
    nuc->add_option("--temp-mode", nf.temp_mode, "Temperature: paper (quoted 3.2e11 K), balance (zero-point balance at --sep), density (pair plasma for --meson-mass)")
        ->check(CLI::IsMember({"paper", "balance", "density"}));
    nuc->add_option("--config", nf.config, "key = value file; flags override it");

    try {
        if (const auto path = find_config_path(argc, argv)) {
            const Config cfg = read_config(*path);
            std::string name;
            for (int i = 1; i < argc && name.empty(); ++i) {
                const std::string a = argv[i];
                if (a == "eval" || a == "sweep" || a == "ratio" || a == "nuclear") name = a;
            }
            if (name == "eval") apply_config(*eval, cfg, nullptr);
            if (name == "sweep") apply_config(*sweep, cfg, &sf.wp);
            if (name == "ratio") apply_config(*ratio, cfg, &rf.wp);
            if (name == "nuclear") apply_config(*nuc, cfg, nullptr);
        }
        app.parse(argc, argv);
        if (eval->parsed()) {
            if (sep_opt->count() == 0 && sep_opt->get_default_str().empty()) {
                err << "error: --sep is required\n" << eval->help();
                return exit_usage;
            }
            ef.l = eval_sep;
            return do_eval(ef, out);
        }
        if (sweep->parsed()) return do_sweep(sf, false, out);
        if (ratio->parsed()) return do_sweep(rf, true, out);
        if (nuc->parsed()) return do_nuclear(nf, out);
        return exit_usage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << " (terms " << e.terms() << ", partial " << e.partial_sum()
            << ", tail bound " << e.tail_bound() << ")\n";
        return exit_numerical;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << " (worst interval [" << e.worst_lo() << ", " << e.worst_hi()
            << "], error " << e.abs_error() << ")\n";
        return exit_numerical;
    }
}

}  // namespace casimir::cli
