#include "casimir/dielectric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line) {
    field = trim(field);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("not a number: '" + std::string(field) + "'", line);
    return v;
}

}  // namespace

Plasma::Plasma(double omega_p_) : omega_p(omega_p_) {
    if (!(omega_p >= 0.0) || !std::isfinite(omega_p))
        throw DomainError("plasma omega_p must be finite and non-negative");
}

Drude::Drude(double omega_p_, double gamma_) : omega_p(omega_p_), gamma(gamma_) {
    if (!(omega_p >= 0.0) || !std::isfinite(omega_p))
        throw DomainError("drude omega_p must be finite and non-negative");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("drude gamma must be positive");
}

Tabulated::Tabulated(std::vector<DielectricSample> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) throw DomainError("dielectric table needs at least 2 samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (!(s.xi > 0.0) || !std::isfinite(s.xi))
            throw DomainError("sample " + std::to_string(i) + ": xi must be positive");
        if (!(s.eps >= 1.0) || !std::isfinite(s.eps))
            throw DomainError("sample " + std::to_string(i) + ": eps must be >= 1");
        if (i > 0 && !(s.xi > samples_[i - 1].xi))
            throw DomainError("sample " + std::to_string(i) + ": xi not strictly increasing");
    }
}

Permittivity eval_epsilon(const MediumModel& model, double xi) {
    if (!(xi >= 0.0)) throw DomainError("xi must be non-negative");
    return std::visit(
        overloaded{
            [&](const Vacuum&) { return Permittivity{1.0, xi * xi, Divergence::none, 0.0}; },
            [&](const Plasma& p) {
                const double wp2 = p.omega_p * p.omega_p;
                if (wp2 == 0.0) return Permittivity{1.0, xi * xi, Divergence::none, 0.0};
                if (xi == 0.0) return Permittivity{inf, wp2, Divergence::inverse_square, wp2};
                return Permittivity{1.0 + wp2 / (xi * xi), xi * xi + wp2, Divergence::none, 0.0};
            },
            [&](const Drude& d) {
                const double wp2 = d.omega_p * d.omega_p;
                if (wp2 == 0.0) return Permittivity{1.0, xi * xi, Divergence::none, 0.0};
                if (xi == 0.0) return Permittivity{inf, 0.0, Divergence::inverse_linear, wp2 / d.gamma};
                return Permittivity{1.0 + wp2 / (xi * (xi + d.gamma)),
                                    xi * xi + wp2 * xi / (xi + d.gamma), Divergence::none, 0.0};
            },
            [&](const Tabulated& t) {
                const auto& s = t.samples();
                double eps;
                if (xi <= s.front().xi) {
                    eps = s.front().eps;
                } else if (xi >= s.back().xi) {
                    eps = s.back().eps;
                } else {
                    const auto hi = std::upper_bound(s.begin(), s.end(), xi,
                                                     [](double v, const DielectricSample& smp) {
                                                         return v < smp.xi;
                                                     });
                    const auto lo = hi - 1;
                    const double w = std::log(xi / lo->xi) / std::log(hi->xi / lo->xi);
                    eps = std::exp((1.0 - w) * std::log(lo->eps) + w * std::log(hi->eps));
                }
                return Permittivity{eps, eps * xi * xi, Divergence::none, 0.0};
            },
        },
        model);
}

Permittivity eval_mirror(const MirrorModel& mirror, double xi) {
    if (std::holds_alternative<PerfectMetal>(mirror))
        return Permittivity{inf, inf, Divergence::perfect, inf};
    return eval_epsilon(std::get<Material>(mirror).medium, xi);
}

Tabulated load_dielectric_table(std::istream& in) {
    std::vector<DielectricSample> samples;
    std::string raw;
    std::size_t line = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        if (!header_seen) {
            if (text != "xi_rad_s,eps") throw ParseError("expected header 'xi_rad_s,eps'", line);
            header_seen = true;
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("expected two comma-separated values", line);
        const double xi = parse_number(text.substr(0, comma), line);
        const double eps = parse_number(text.substr(comma + 1), line);
        if (!(xi > 0.0) || !std::isfinite(xi)) throw ParseError("xi must be positive", line);
        if (!(eps >= 1.0) || !std::isfinite(eps)) throw ParseError("eps must be >= 1", line);
        if (!samples.empty() && !(xi > samples.back().xi))
            throw ParseError("xi not strictly increasing", line);
        samples.push_back({xi, eps});
    }
    if (!header_seen) throw ParseError("missing header 'xi_rad_s,eps'", 0);
    if (samples.size() < 2) throw ParseError("need at least 2 samples", 0);
    return Tabulated(std::move(samples));
}

Tabulated tabulate(const MediumModel& model, double xi_min, double xi_max, std::size_t points) {
    if (!(xi_min > 0.0) || !(xi_max > xi_min) || points < 2)
        throw DomainError("tabulate needs 0 < xi_min < xi_max and at least 2 points");
    std::vector<DielectricSample> samples(points);
    const double step = std::log(xi_max / xi_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double xi = xi_min * std::exp(step * static_cast<double>(i));
        samples[i] = {xi, eval_epsilon(model, xi).value};
    }
    return Tabulated(std::move(samples));
}

}  // namespace casimir
