#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zeromode/errors.hpp"
#include "zeromode/quadrature.hpp"

using namespace zeromode;
using std::numbers::pi;

TEST_CASE("single K15 panel is exact for low-degree polynomials") {
    for (int d = 0; d <= 22; ++d) {
        const auto r = gauss_kronrod15([d](double x) { return std::pow(x, d); }, 0.0, 1.0);
        CHECK(r.value == doctest::Approx(1.0 / (d + 1)).epsilon(1e-14));
    }
    CHECK(gauss_kronrod15([](double) { return 1.0; }, 0.0, 1.0).evaluations == 15);
}

TEST_CASE("adaptive integration on finite intervals") {
    const auto e = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12, 1e-15);
    CHECK(e.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    // Integrable endpoint singularity.
    const auto s = integrate([](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0, 1e-10, 1e-14);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-8));
    const auto o = integrate([](double x) { return std::sin(50.0 * x); }, 0.0, pi, 1e-12, 1e-14);
    CHECK(std::abs(o.value) < 1e-11);
}

TEST_CASE("budget exhaustion raises QuadratureError") {
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-9)); }, 0.0, 1.0, 1e-14, 1e-300, 50),
                    QuadratureError);
}

TEST_CASE("semi-infinite integrals") {
    SemiInfiniteConfig cfg;
    cfg.rel_tol = 1e-12;
    const auto e = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, cfg);
    CHECK(e.integral.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto p = integrate_to_infinity([](double x) { return std::pow(1.0 + x * x, -3.0); }, 0.0, cfg);
    CHECK(p.integral.value == doctest::Approx(3.0 * pi / 16.0).epsilon(1e-11));
    CHECK(p.upper >= cfg.initial_upper);

    // 1/(1+x^2) tails off too slowly to settle before the cap.
    CHECK_THROWS_AS(integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, cfg), QuadratureError);
}
