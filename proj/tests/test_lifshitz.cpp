#include <doctest.h>

#include <cmath>
#include <limits>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/specfun.hpp"
#include "oracle.hpp"

using namespace casimir;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("Matsubara frequencies") {
    CHECK(matsubara_frequency(0, 300.0) == 0.0);
    CHECK(matsubara_frequency(1, 300.0) == doctest::Approx(2.4677902551530605e14).epsilon(1e-12));
    CHECK(matsubara_frequency(7, 300.0) == doctest::Approx(7 * matsubara_frequency(1, 300.0)));
    CHECK_THROWS_AS(matsubara_frequency(1, 0.0), DomainError);
}

TEST_CASE("gamma coefficient") {
    CHECK(gamma_coeff(3.0, 2.0, 0.0) == 3.0);
    CHECK(gamma_coeff(0.0, 4.0, Constants::c) == doctest::Approx(2.0));
    CHECK(gamma_coeff(1e6, 2.0, Constants::c * 1e6) == doctest::Approx(std::sqrt(3.0) * 1e6).epsilon(1e-15));
}

TEST_CASE("Fresnel coefficients") {
    const auto same = fresnel(1e6, 1e14, 3.0, 3.0);
    CHECK(same.tm == 0.0);
    CHECK(same.te == 0.0);
    const auto perfect = fresnel(1e6, 1e14, 1.0, inf);
    CHECK(perfect.tm == 1.0);
    CHECK(perfect.te == -1.0);
    const auto normal = fresnel(0.0, 1e14, 1.0, 4.0);
    CHECK(normal.te == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(normal.tm == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(fresnel(0.0, 0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("Fresnel limits at zero frequency") {
    const auto vac = eval_epsilon(Vacuum{}, 0.0);
    const auto drude = fresnel(1e6, 0.0, vac, eval_epsilon(Drude(1e16, 1e14), 0.0));
    CHECK(drude.tm == 1.0);
    CHECK(drude.te == 0.0);
    const double wp = 1e15;
    const double q = 2e6;
    const auto plasma = fresnel(q, 0.0, vac, eval_epsilon(Plasma(wp), 0.0));
    CHECK(plasma.tm == 1.0);
    const double gm = std::sqrt(q * q + std::pow(wp / Constants::c, 2));
    CHECK(plasma.te == doctest::Approx((q - gm) / (q + gm)).epsilon(1e-14));
    // Plasma gap against plasma mirror, equal divergence orders: ratio of leading terms.
    const auto both = fresnel(q, 0.0, eval_epsilon(Plasma(wp), 0.0), eval_epsilon(Plasma(wp), 0.0));
    CHECK(both.tm == 0.0);
    CHECK(both.te == 0.0);
    // Perfect mirror wins any divergence.
    const auto pm = fresnel(q, 0.0, eval_epsilon(Plasma(wp), 0.0), eval_mirror(PerfectMetal{}, 0.0));
    CHECK(pm.tm == 1.0);
    CHECK(pm.te == -1.0);
}

TEST_CASE("Fresnel approaches its zero-frequency limit continuously") {
    const double wp = 1e15;
    const double q = 1e6;
    const auto vac0 = eval_epsilon(Vacuum{}, 0.0);
    const auto at0 = fresnel(q, 0.0, vac0, eval_epsilon(Plasma(wp), 0.0));
    const double xi = 1e3;
    const auto near = fresnel(q, xi, eval_epsilon(Vacuum{}, xi), eval_epsilon(Plasma(wp), xi));
    CHECK(near.tm == doctest::Approx(at0.tm).epsilon(1e-9));
    CHECK(near.te == doctest::Approx(at0.te).epsilon(1e-9));
}

TEST_CASE("mode condition") {
    CHECK(mode_condition(1e6, 1e-6, 0.0) == 1.0);
    CHECK(mode_condition(5.0, 1.0, 1.0) == doctest::Approx(1.0 - std::exp(-10.0)));
    CHECK(mode_condition(5.0, 1.0, -1.0) == doctest::Approx(1.0 - std::exp(-10.0)));
    CHECK(mode_condition(1.0, 1e3, 1.0) == 1.0);
    CHECK_THROWS_AS(mode_condition(1.0, 1.0, 1.5), DomainError);
}

TEST_CASE("ideal engine against independent high-precision sums") {
    struct Case {
        double x, kl, eta;
    };
    for (const Case c : {Case{0.5, 0.0, 0.79623303813529725}, Case{1.0, 1.0, 0.21951243428655267},
                         Case{3.0, 2.0, 0.045979375987762261}, Case{0.2, 0.5, 1.3506530086010327},
                         Case{2.0, 8.0, 9.87714846067962108e-7}, Case{0.1, 10.0, 4.02951261505153993e-7}}) {
        const auto eta = eta_ideal_plasma(ReducedPoint::from(c.x, c.kl));
        CHECK(oracle::relerr(eta.total(), c.eta) < 1e-12);
        CHECK(eta.est_error <= 1e-11 * c.eta);
    }
}

TEST_CASE("ideal engine against a brute-force quadrature sum") {
    for (double x : {0.3, 1.5})
        for (double kl : {0.0, 0.7, 4.0}) {
            const double ref = oracle::eta_brute(x, kl);
            CHECK(oracle::relerr(eta_ideal_plasma(ReducedPoint::from(x, kl)).total(), ref) < 1e-10);
        }
}

TEST_CASE("ideal engine limits") {
    const auto cold = free_energy_ideal_plasma(1e-6, 1e-3, 0.0);
    CHECK(cold.total == doctest::Approx(-4.3338e-10).epsilon(1e-4));
    CHECK(cold.correction_factor == doctest::Approx(1.0).epsilon(1e-6));
    const double hot_ref = -Constants::zeta3 * Constants::k_B * 300.0 / (8.0 * pi * 1e-10);
    const auto hot = free_energy_ideal_plasma(1e-5, 300.0, 0.0);
    CHECK(hot.total == doctest::Approx(hot_ref).epsilon(1e-3));
    CHECK(hot.n0 == doctest::Approx(hot_ref).epsilon(1e-14));
    CHECK(hot.correction_factor == doctest::Approx(4.571).epsilon(1e-3));
}

TEST_CASE("free energy splits and signs") {
    for (double wp : {0.0, 1e13, 1e14, 1e15}) {
        const auto f = free_energy_ideal_plasma(2e-6, 300.0, wp);
        CHECK(f.total == f.n0 + f.npos);
        CHECK(f.n0 <= 0.0);
        CHECK(f.npos <= 0.0);
        CHECK(f.n0 == doctest::Approx(free_energy_n0(2e-6, 300.0, wp / Constants::c)).epsilon(1e-14));
    }
}

TEST_CASE("free_energy_n0") {
    CHECK(free_energy_n0(1e-5, 300.0, 0.0) ==
          doctest::Approx(-Constants::zeta3 * Constants::k_B * 300.0 / (8.0 * pi * 1e-10)).epsilon(1e-13));
    CHECK(free_energy_n0(1e-5, 300.0, 1e9) == 0.0);
    CHECK(free_energy_n0(1e-5, 300.0, 1e6) < 0.0);
    CHECK_THROWS_AS(free_energy_n0(1e-5, 300.0, -1.0), DomainError);
}

TEST_CASE("convergence failure carries the partial sum") {
    EngineConfig cfg;
    cfg.max_matsubara = 10;
    try {
        free_energy_ideal_plasma(1e-6, 1.0, 0.0, cfg);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.terms() == 10);
        CHECK(e.partial_sum() > 0.0);
        CHECK(e.tail_bound() > 0.0);
    }
}

TEST_CASE("general engine reproduces the series engine") {
    for (double wp : {0.0, 1e14, 1e15}) {
        const double l = 1e-6, T = 300.0;
        const auto series = free_energy_ideal_plasma(l, T, wp);
        const MediumModel gap = wp == 0.0 ? MediumModel{Vacuum{}} : MediumModel{Plasma(wp)};
        const auto quad = free_energy_general(l, T, PerfectMetal{}, gap);
        CHECK(oracle::relerr(quad.total, series.total) < 1e-8);
        CHECK(oracle::relerr(quad.n0, series.n0) < 1e-8);
    }
}

TEST_CASE("identical media have no interaction") {
    const auto f = free_energy_general(1e-6, 300.0, Material{Plasma(1e14)}, Plasma(1e14));
    CHECK(f.total == 0.0);
}

TEST_CASE("Drude mirrors keep half of the zero-frequency term") {
    const double l = 2e-5, T = 300.0;
    const auto drude = free_energy_general(l, T, Material{Drude(1.37e16, 5.3e13)}, Vacuum{});
    const auto ideal = free_energy_ideal_plasma(l, T, 0.0);
    CHECK(drude.n0 == doctest::Approx(0.5 * ideal.n0).epsilon(1e-10));
}

TEST_CASE("real mirrors are weaker than perfect ones") {
    const double l = 5e-7, T = 300.0;
    const auto perfect = free_energy_general(l, T, PerfectMetal{}, Vacuum{});
    const auto plasma = free_energy_general(l, T, Material{Plasma(1.37e16)}, Vacuum{});
    const auto drude = free_energy_general(l, T, Material{Drude(1.37e16, 5.3e13)}, Vacuum{});
    CHECK(plasma.total < 0.0);
    CHECK(std::abs(plasma.total) < std::abs(perfect.total));
    CHECK(std::abs(drude.total) < std::abs(plasma.total));
}

TEST_CASE("zero-temperature path") {
    const double E = free_energy_zero_temperature(1e-6, PerfectMetal{}, Vacuum{});
    CHECK(E == doctest::Approx(casimir_energy_ideal(1e-6)).epsilon(1e-8));
    const double screened = free_energy_zero_temperature(1e-6, PerfectMetal{}, Plasma(1e16));
    CHECK(screened < 0.0);
    CHECK(std::abs(screened) < 1e-3 * std::abs(E));
    CHECK(free_energy_zero_temperature(1e-6, Material{Vacuum{}}, Vacuum{}) == 0.0);
}

TEST_CASE("zero-temperature path is the cold limit of the Matsubara sum") {
    for (double wp : {3e14, 1e15}) {
        const double E = free_energy_zero_temperature(1e-6, PerfectMetal{}, Plasma(wp));
        const auto cold = free_energy_ideal_plasma(1e-6, 0.5, wp);
        CHECK(oracle::relerr(E, cold.total) < 1e-6);
    }
    const double drude = free_energy_zero_temperature(3e-7, Material{Drude(1.37e16, 5.3e13)}, Vacuum{});
    const double plasma = free_energy_zero_temperature(3e-7, Material{Plasma(1.37e16)}, Vacuum{});
    CHECK(drude < 0.0);
    CHECK(std::abs(drude) < std::abs(plasma));
}

TEST_CASE("correction factor") {
    CHECK(correction_factor(casimir_energy_ideal(3e-7), 3e-7) == doctest::Approx(1.0));
    CHECK(correction_factor(0.0, 3e-7) == 0.0);
}

TEST_CASE("engine configuration is validated") {
    EngineConfig cfg;
    cfg.rel_tolerance = 0.0;
    CHECK_THROWS_AS(free_energy_ideal_plasma(1e-6, 300.0, 0.0, cfg), DomainError);
    CHECK_THROWS_AS(free_energy_ideal_plasma(0.0, 300.0, 0.0), DomainError);
    CHECK_THROWS_AS(free_energy_ideal_plasma(1e-6, 0.0, 0.0), DomainError);
}
