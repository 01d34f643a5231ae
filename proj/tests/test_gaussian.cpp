#include <doctest.h>

#include <cmath>
#include <random>

#include "zeromode/closed_forms.hpp"
#include "zeromode/errors.hpp"
#include "zeromode/gaussian.hpp"
#include "zeromode/tripartite.hpp"

using namespace zeromode;

namespace {

Matrix random_pd(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
    return a.transpose() * a + Matrix::identity(n) * 0.1;
}

// omega0 = 1, omega_- = R.
Matrix pair_potential(double R) {
    const double w1sq = 0.5 * (1.0 - R * R);
    return Matrix{{1.0 - w1sq, w1sq}, {w1sq, 1.0 - w1sq}};
}

}  // namespace

TEST_CASE("EntropyValue") {
    CHECK(EntropyValue::finite(0.5).nats() == 0.5);
    CHECK_FALSE(EntropyValue::finite(0.5).is_divergent());
    CHECK_FALSE(std::signbit(EntropyValue::finite(-0.0).nats()));
    CHECK_THROWS_AS(EntropyValue::finite(-1e-3), DomainError);
    CHECK_THROWS_AS(EntropyValue::finite(INFINITY), DomainError);
    const auto d = EntropyValue::divergent(kCauseZeroMode);
    CHECK(d.is_divergent());
    CHECK(std::isinf(d.nats()));
    CHECK(*d.divergence_cause() == "zero-mode");
}

TEST_CASE("QuadraticHamiltonian rejects asymmetric input") {
    CHECK_THROWS_AS(QuadraticHamiltonian(Matrix{{1.0, 0.5}, {0.4, 1.0}}), AsymmetricMatrix);
    CHECK_NOTHROW(QuadraticHamiltonian(Matrix{{1.0, 0.5}, {0.5 + 1e-15, 1.0}}));
    CHECK_THROWS_AS(QuadraticHamiltonian(Matrix(2, 3)), DomainError);
}

TEST_CASE("eigendecompose_symmetric examples") {
    const auto id = eigendecompose_symmetric(Matrix::identity(3));
    for (double v : id.eigenvalues) CHECK(v == doctest::Approx(1.0));

    const std::array<double, 2> d{4.0, 9.0};
    const auto diag = eigendecompose_symmetric(Matrix::diagonal(d));
    CHECK(diag.eigenvalues[0] == doctest::Approx(4.0));
    CHECK(diag.eigenvalues[1] == doctest::Approx(9.0));

    // Free-particle point of the three-body potential: kappa = (0, 1, 1 + a^2 + b^2).
    const auto fp = eigendecompose_symmetric(tripartite_potential({1.0, 1.0, 2.0}));
    CHECK(std::abs(fp.eigenvalues[0]) < 1e-14);
    CHECK(fp.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(fp.eigenvalues[2] == doctest::Approx(3.0));
    CHECK(fp.regimes[0] == ModeRegime::zero);
}

TEST_CASE("classify_modes") {
    const std::vector<double> a{0.0, 1.0, 4.0};
    const auto ra = classify_modes(a, 1e-10);
    CHECK(ra[0] == ModeRegime::zero);
    CHECK(ra[1] == ModeRegime::positive);
    CHECK(ra[2] == ModeRegime::positive);

    const std::vector<double> b{1.0, 1.0, 1.0};
    for (auto r : classify_modes(b, 1e-10)) CHECK(r == ModeRegime::positive);

    const std::vector<double> c{-0.5, 1.0, 2.0};
    CHECK(classify_modes(c, 1e-10)[0] == ModeRegime::negative);

    // Threshold scales with the largest eigenvalue.
    const std::vector<double> e{5e-9, 100.0};
    CHECK(classify_modes(e, 1e-10)[0] == ModeRegime::zero);
    CHECK(classify_modes(e, 1e-12)[0] == ModeRegime::positive);
    CHECK(std::string(to_string(ModeRegime::negative)) == "negative");
}

TEST_CASE("matrix_sqrt_psd") {
    const std::array<double, 2> d{4.0, 9.0};
    const Matrix r = matrix_sqrt_psd(Matrix::diagonal(d));
    CHECK(r(0, 0) == doctest::Approx(2.0));
    CHECK(r(1, 1) == doctest::Approx(3.0));
    CHECK(std::abs(r(0, 1)) < 1e-15);
    CHECK(frobenius_norm(matrix_sqrt_psd(Matrix::identity(4)) - Matrix::identity(4)) < 1e-14);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const Matrix k = random_pd(rng, 5);
        const Matrix s = matrix_sqrt_psd(k);
        CHECK(frobenius_norm(s * s - k) / frobenius_norm(k) < 1e-9);
        CHECK(max_abs_asymmetry(s) < 1e-14);
    }

    // Two-oscillator potential: Omega has eigenvalues omega_+ = 1 and omega_- = R.
    const auto e = eigendecompose_symmetric(matrix_sqrt_psd(pair_potential(0.3)));
    CHECK(e.eigenvalues[0] == doctest::Approx(0.3));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0));

    // Tiny negative eigenvalues are clipped; real inversion throws.
    const Matrix tiny{{1.0, 0.0}, {0.0, -1e-14}};
    CHECK(matrix_sqrt_psd(tiny)(1, 1) == 0.0);
    CHECK_THROWS_AS(matrix_sqrt_psd(Matrix{{1.0, 0.0}, {0.0, -0.1}}), InvertedOscillator);
}

TEST_CASE("reduce_to_xi: product state") {
    const QuadraticHamiltonian h(Matrix{{2.0, 0.0, 0.0}, {0.0, 3.0, 0.5}, {0.0, 0.5, 1.0}});
    const std::array<std::size_t, 1> traced{0};
    const auto xi = reduce_to_xi(h, traced);
    CHECK_FALSE(xi.divergent);
    for (double x : xi.xis) CHECK(x == 0.0);
    CHECK(entanglement_entropy(h, traced).nats() == 0.0);
}

TEST_CASE("reduce_to_xi reproduces the two-oscillator xi(R)") {
    for (double R : {0.01, 0.25, 0.5, 0.9}) {
        const std::array<std::size_t, 1> traced{1};
        const auto xi = reduce_to_xi(QuadraticHamiltonian(pair_potential(R)), traced);
        REQUIRE(xi.xis.size() == 1);
        CHECK(xi.xis[0] == doctest::Approx(xi_of_R(R)).epsilon(1e-12));
    }
}

TEST_CASE("reduce_to_xi input validation") {
    const QuadraticHamiltonian h(Matrix::identity(3));
    const std::array<std::size_t, 1> out_of_range{3};
    const std::array<std::size_t, 2> dup{1, 1};
    const std::array<std::size_t, 3> all{0, 1, 2};
    CHECK_THROWS_AS(reduce_to_xi(h, out_of_range), DomainError);
    CHECK_THROWS_AS(reduce_to_xi(h, dup), DomainError);
    CHECK_THROWS_AS(reduce_to_xi(h, all), DomainError);
    CHECK_THROWS_AS(reduce_to_xi(h, std::span<const std::size_t>{}), DomainError);
}

TEST_CASE("zero modes") {
    // Zero mode shared between the partitions: flagged divergence.
    const QuadraticHamiltonian fp(tripartite_potential({1.0, 1.0, 2.0}));
    const std::array<std::size_t, 2> traced{1, 2};
    const auto xi = reduce_to_xi(fp, traced);
    CHECK(xi.divergent);
    const auto s = entropy_from_xi(xi);
    CHECK(s.is_divergent());
    CHECK(*s.divergence_cause() == kCauseZeroMode);

    // Zero mode (1, 1, 0) living only in the kept block.
    const QuadraticHamiltonian kept_zero(Matrix{{1.0, -1.0, 0.1}, {-1.0, 1.0, -0.1}, {0.1, -0.1, 1.0}});
    const std::array<std::size_t, 1> third{2};
    CHECK_THROWS_AS(reduce_to_xi(kept_zero, third), SingularBlock);

    // Inverted mode.
    const QuadraticHamiltonian inv(tripartite_potential({2.0, 0.0, 1.0}));
    CHECK_THROWS_AS(reduce_to_xi(inv, traced), InvertedOscillator);
}

TEST_CASE("entropy_from_xi and mode_entropy") {
    CHECK(mode_entropy(0.0) == 0.0);
    CHECK(mode_entropy(0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(entropy_from_xi(XiSpectrum{{0.5, 0.5}, false}).nats() == doctest::Approx(4.0 * std::log(2.0)));
    CHECK(entropy_from_xi(XiSpectrum{{}, false}).nats() == 0.0);
    // S(xi) is increasing on [0, 1).
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
        const double s = mode_entropy(i / 100.0);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("complementary partitions give equal entropy") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 6);
        const QuadraticHamiltonian h(random_pd(rng, n));
        std::vector<std::size_t> p, q;
        for (std::size_t i = 0; i < n; ++i) ((i * 7 + static_cast<std::size_t>(t)) % 3 == 0 ? p : q).push_back(i);
        if (p.empty() || q.empty()) continue;
        CHECK(std::abs(entanglement_entropy(h, p).nats() - entanglement_entropy(h, q).nats()) < 1e-8);
        for (double x : reduce_to_xi(h, p).xis) {
            CHECK(x >= 0.0);
            CHECK(x < 1.0);
        }
    }
}

TEST_CASE("entropy grows monotonically as a shared zero mode is approached") {
    const std::array<std::size_t, 2> traced{1, 2};
    double prev = -1.0;
    for (double d : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
        const double s = entanglement_entropy(QuadraticHamiltonian(tripartite_potential({1.0, 1.0, 2.0 + d})), traced).nats();
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("xi approaches 1 near the free-particle point") {
    const std::array<std::size_t, 2> traced{1, 2};
    auto gap = [&](double d) {
        return 1.0 - reduce_to_xi(QuadraticHamiltonian(tripartite_potential({1.0, 1.0, 2.0 + d})), traced).xis.at(0);
    };
    // 1 - xi ~ delta^(1/4).
    CHECK(gap(1e-6) == doctest::Approx(0.0894760036850416).epsilon(1e-8));
    CHECK(gap(1e-8) < gap(1e-6));
    CHECK(std::log(gap(1e-4) / gap(1e-8)) / std::log(1e4) == doctest::Approx(0.25).epsilon(0.08));
}

// The example value 1 - xi < 1e-4 at k = 2 + 1e-6 does not hold: the gap is
// 0.089 there and only reaches 1e-4 near delta ~ 1e-18, below double
// resolution of k = 2. Kept as a visible known failure.
TEST_CASE("xi within 1e-4 of 1 at k = 2 + 1e-6" * doctest::should_fail()) {
    const std::array<std::size_t, 2> traced{1, 2};
    const auto xi = reduce_to_xi(QuadraticHamiltonian(tripartite_potential({1.0, 1.0, 2.0 + 1e-6})), traced);
    CHECK(1.0 - xi.xis.at(0) < 1e-4);
}
