#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "zeromode/errors.hpp"
#include "zeromode/lattice.hpp"

using namespace zeromode;

TEST_CASE("coupling matrix layout") {
    const auto h3 = build_coupling_matrix({3, 0.5, 1.2});
    const auto& k = h3.potential();
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(k(i, i) == doctest::Approx(1.44 + 8.0));
        CHECK(k(i, (i + 1) % 3) == doctest::Approx(-4.0));
    }
    // N = 2: the bond wraps twice.
    const auto h2 = build_coupling_matrix({2, 1.0, 0.5});
    const auto& k2 = h2.potential();
    CHECK(k2(0, 0) == doctest::Approx(0.25 + 2.0));
    CHECK(k2(0, 1) == doctest::Approx(-2.0));
    // Massless rows sum to zero.
    const auto h0 = build_coupling_matrix({7, 0.3, 0.0});
    const auto& k0 = h0.potential();
    for (std::size_t i = 0; i < 7; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 7; ++j) s += k0(i, j);
        CHECK(std::abs(s) < 1e-12);
    }
    CHECK_THROWS_AS(build_coupling_matrix({1, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(build_coupling_matrix({4, 0.0, 0.0}), DomainError);
}

TEST_CASE("circulant eigenvalues match the dispersion for N <= 64") {
    for (std::size_t n = 2; n <= 64; ++n) {
        const LatticeParams p{n, 0.8, 0.6};
        const auto num = eigendecompose_symmetric(build_coupling_matrix(p)).eigenvalues;
        const auto ana = dispersion_spectrum(p);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(num[i] - ana[i]) < 1e-12);
    }
}

TEST_CASE("dispersion values") {
    const LatticeParams p{3, 0.5, 1.0};
    CHECK(dispersion(0, p) == doctest::Approx(1.0));
    CHECK(dispersion(1, p) == doctest::Approx(1.0 + 3.0 / 0.25));
    CHECK(dispersion(0, {5, 1.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(dispersion(3, p), DomainError);
}

TEST_CASE("zero mode counting") {
    for (std::size_t n = 2; n <= 32; ++n) {
        const auto eig = eigendecompose_symmetric(build_coupling_matrix({n, 1.0, 0.0})).eigenvalues;
        CHECK(zero_mode_count(eig) == 1);
    }
    CHECK(zero_mode_count(dispersion_spectrum({7, 1.0, 0.0})) == 1);
    CHECK(zero_mode_count(dispersion_spectrum({7, 1.0, 1.0})) == 0);
    const auto t = transformed_modes(5, 1.0);
    std::vector<double> sq;
    for (double w : t.omega_bar) sq.push_back(w * w);
    CHECK(zero_mode_count(sq) == 1);
}

TEST_CASE("transformed spectrum") {
    CHECK(lattice_mu(1.0, 0.0) == 1.0);
    CHECK(lattice_mu(1.0, 1e-8) == doctest::Approx(1.0));
    const auto t = transformed_modes({6, 1.0, std::sqrt(2.0)});
    CHECK(t.mu == doctest::Approx(0.5));
    CHECK(t.omega_bar[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(t.omega_bar[3] == doctest::Approx(std::sqrt(1.5)));
    CHECK(transformed_modes(8, 0.999999).omega_bar[0] < 1.1e-3);

    // The transformed matrix reproduces omega_bar^2.
    for (std::size_t n : {2u, 5u, 16u}) {
        const auto num = eigendecompose_symmetric(transformed_coupling_matrix(n, 0.7)).eigenvalues;
        auto ana = transformed_modes(n, 0.7).omega_bar;
        for (double& w : ana) w *= w;
        std::sort(ana.begin(), ana.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(num[i] - ana[i]) < 1e-12);
    }
    CHECK_THROWS_AS(transformed_modes(4, 1.5), DomainError);
}

TEST_CASE("fixed-end chain") {
    for (double a : {1.0, 0.5}) {
        for (double mf : {0.0, 1.0}) {
            const LatticeParams p{3, a, mf};
            const auto num = eigendecompose_symmetric(build_fixed_end_matrix(p)).eigenvalues;
            const double m2 = mf * mf, inv = 1.0 / (a * a);
            CHECK(std::abs(num[0] - (m2 + (2.0 - std::sqrt(2.0)) * inv)) < 1e-12);
            CHECK(std::abs(num[1] - (m2 + 2.0 * inv)) < 1e-12);
            CHECK(std::abs(num[2] - (m2 + (2.0 + std::sqrt(2.0)) * inv)) < 1e-12);
            const auto ana = fixed_end_spectrum(p);
            for (int i = 0; i < 3; ++i) CHECK(std::abs(num[i] - ana[i]) < 1e-12);
        }
    }
    // Different boundary, different spectrum.
    const LatticeParams p{3, 1.0, 0.0};
    CHECK(std::abs(fixed_end_spectrum(p)[0] - dispersion_spectrum(p)[0]) > 0.5);
}

TEST_CASE("half-chain entropy") {
    const auto cut2 = half_chain(2);
    CHECK(half_chain_entropy({2, 1.0, 10.0}, cut2, false).nats() < 0.01);

    // Massless chain: zero mode shared by both halves.
    CHECK(half_chain_entropy({8, 1.0, 0.0}, half_chain(8), false).is_divergent());
    CHECK(transformed_entropy(8, 1.0, half_chain(8)).is_divergent());

    // Original and transformed systems differ by an overall scale of K.
    for (auto [n, a, mf] : {std::tuple<std::size_t, double, double>{4, 1.0, 0.5}, std::tuple<std::size_t, double, double>{10, 0.3, 2.0},
                               std::tuple<std::size_t, double, double>{32, 1.0, 0.1}}) {
        const LatticeParams p{n, a, mf};
        CHECK(std::abs(half_chain_entropy(p, half_chain(n), false).nats() -
                       half_chain_entropy(p, half_chain(n), true).nats()) < 1e-8);
    }

    double prev = -1.0;
    for (double mu : {0.9, 0.99, 0.999}) {
        const double s = transformed_entropy(32, mu, half_chain(32)).nats();
        CHECK(s > prev);
        prev = s;
    }

    // a -> large at fixed m_f decouples the sites.
    CHECK(half_chain_entropy({6, 1e4, 1.0}, half_chain(6), false).nats() < 1e-12);

    // UV growth at fixed physical length.
    prev = -1.0;
    for (double a : {2.0, 1.0, 0.5, 0.25}) {
        const auto n = static_cast<std::size_t>(std::lround(16.0 / a));
        const double s = half_chain_entropy({n, a, 1.0}, half_chain(n), false).nats();
        CHECK(s > prev);
        prev = s;
    }
}
