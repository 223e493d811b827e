#include <doctest.h>

#include <cmath>
#include <sstream>

#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"

using namespace casimir;

TEST_CASE("model values on the imaginary axis") {
    CHECK(eval_epsilon(Plasma(1e14), 1e14).value == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(eval_epsilon(Drude(1e16, 1e14), 1e16).value == doctest::Approx(1.0 + 1.0 / 1.01).epsilon(1e-12));
    for (double xi : {0.0, 1.0, 1e15}) CHECK(eval_epsilon(Vacuum{}, xi).value == 1.0);
}

TEST_CASE("eps xi^2 is carried consistently") {
    const auto p = eval_epsilon(Plasma(3e14), 2e14);
    CHECK(p.value_xi2 == doctest::Approx(p.value * 4e28).epsilon(1e-14));
    const auto d = eval_epsilon(Drude(3e14, 1e13), 2e14);
    CHECK(d.value_xi2 == doctest::Approx(d.value * 4e28).epsilon(1e-14));
}

TEST_CASE("zero-frequency divergences are reported, not evaluated") {
    const auto p = eval_epsilon(Plasma(1e14), 0.0);
    CHECK(p.divergence == Divergence::inverse_square);
    CHECK(std::isinf(p.value));
    CHECK(p.value_xi2 == doctest::Approx(1e28));
    const auto d = eval_epsilon(Drude(1e14, 1e12), 0.0);
    CHECK(d.divergence == Divergence::inverse_linear);
    CHECK(d.value_xi2 == 0.0);
    CHECK(d.leading == doctest::Approx(1e16));
    CHECK(eval_epsilon(Plasma(0.0), 0.0).divergence == Divergence::none);
    CHECK(eval_mirror(PerfectMetal{}, 0.0).divergence == Divergence::perfect);
    CHECK(eval_mirror(Material{Vacuum{}}, 5.0).value == 1.0);
}

TEST_CASE("Drude approaches plasma as gamma -> 0") {
    const double wp = 1e15;
    const Drude d(wp, wp * 1e-8);
    const Plasma p(wp);
    // Relative gap is (eps - 1)/eps * gamma / (xi + gamma) < gamma / xi.
    for (double xi = wp * 1e-3; xi < wp * 1e3; xi *= 3.0) {
        const double dv = eval_epsilon(d, xi).value;
        const double pv = eval_epsilon(p, xi).value;
        CHECK(std::abs(dv - pv) / pv < d.gamma / xi);
        if (xi >= wp * 1e-2) CHECK(std::abs(dv - pv) / pv < 1e-6);
    }
}

TEST_CASE("model constructors validate") {
    CHECK_THROWS_AS(Plasma(-1.0), DomainError);
    CHECK_THROWS_AS(Drude(1e14, 0.0), DomainError);
    CHECK_THROWS_AS(Drude(-1e14, 1.0), DomainError);
    CHECK_THROWS_AS(eval_epsilon(Vacuum{}, -1.0), DomainError);
    CHECK_THROWS_AS(Tabulated({{1.0, 2.0}}), DomainError);
    CHECK_THROWS_AS(Tabulated({{1.0, 2.0}, {1.0, 1.5}}), DomainError);
    CHECK_THROWS_AS(Tabulated({{1.0, 0.5}, {2.0, 1.5}}), DomainError);
}

TEST_CASE("table interpolation is log-log and clamped") {
    const Tabulated t({{1e13, 100.0}, {1e15, 1.0}});
    CHECK(eval_epsilon(t, 1e14).value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(eval_epsilon(t, 1e12).value == 100.0);
    CHECK(eval_epsilon(t, 0.0).value == 100.0);
    CHECK(eval_epsilon(t, 1e16).value == 1.0);
    CHECK(eval_epsilon(t, 1e13).value == 100.0);
}

TEST_CASE("loading a table") {
    std::istringstream in("# gold, made up\nxi_rad_s,eps\n1e13, 120\n\n2e14,3.5\n");
    const auto t = load_dielectric_table(in);
    REQUIRE(t.samples().size() == 2);
    CHECK(t.samples()[1].xi == 2e14);
    CHECK(t.samples()[1].eps == 3.5);
}

TEST_CASE("table errors carry line numbers") {
    auto line_of = [](const char* text) -> std::size_t {
        std::istringstream in(text);
        try {
            load_dielectric_table(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("xi_rad_s,eps\n2e14,3\n1e14,4\n") == 3);
    CHECK(line_of("xi_rad_s,eps\n1e14,3\n# c\n2e14,abc\n") == 4);
    CHECK(line_of("xi,eps\n1,2\n") == 1);
    CHECK(line_of("xi_rad_s,eps\n1e14,0.5\n") == 2);
    CHECK(line_of("xi_rad_s,eps\n1e14,2,3\n") == 2);
    CHECK(line_of("xi_rad_s,eps\n1e14,2\n") == 0);
    std::istringstream bad("xi_rad_s,eps\n2e14,3\n1e14,4\n");
    try {
        load_dielectric_table(bad);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
}

TEST_CASE("a sampled Drude table reproduces the model at midpoints") {
    const Drude d(1.37e16, 5.3e13);
    const auto t = tabulate(d, 1e12, 1e18, 64);
    const auto& s = t.samples();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double mid = std::sqrt(s[i].xi * s[i + 1].xi);
        CHECK(eval_epsilon(t, mid).value == doctest::Approx(eval_epsilon(d, mid).value).epsilon(0.01));
    }
}
