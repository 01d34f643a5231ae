#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "zeromode/errors.hpp"
#include "zeromode/tripartite.hpp"

using namespace zeromode;

TEST_CASE("scale") {
    TripartiteParams p;
    p.m = 2.0;
    p.M = 3.0;
    p.omega = 0.5;
    p.Omega_env = 1.5;
    auto c = scale(p);
    CHECK(c.alpha_t == 0.0);
    CHECK(c.beta_t == 0.0);
    CHECK(c.k == doctest::Approx(9.0));

    p.alpha = std::sqrt(p.M * p.m) * p.omega * p.omega;
    CHECK(scale(p).alpha_t == doctest::Approx(1.0));

    // alpha^2 + beta^2 = M Omega^2 m omega^2 lands on the free-particle line.
    p.alpha = 0.6 * std::sqrt(p.M * p.Omega_env * p.Omega_env * p.m * p.omega * p.omega);
    p.beta = 0.8 * std::sqrt(p.M * p.Omega_env * p.Omega_env * p.m * p.omega * p.omega);
    c = scale(p);
    CHECK(c.coupling_sq() == doctest::Approx(c.k));
    CHECK(classify(p).label == RegimeLabel::free_particle);

    p.m = 0.0;
    CHECK_THROWS_AS(scale(p), DomainError);
}

TEST_CASE("kappa closed form") {
    auto k = kappa_closed_form({0.0, 0.0, 3.0});
    CHECK(k[0] == 1.0);
    CHECK(k[1] == doctest::Approx(1.0));
    CHECK(k[2] == doctest::Approx(3.0));

    k = kappa_closed_form({1.0, 1.0, 2.0});
    CHECK(k[1] == doctest::Approx(0.0));
    CHECK(k[2] == doctest::Approx(3.0));

    k = kappa_closed_form({2.0, 0.0, 1.0});
    CHECK(k[1] == doctest::Approx(-1.0));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2.0, 2.0), kk(0.1, 5.0);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const ScaledCoupling c{u(rng), u(rng), kk(rng)};
        auto closed = kappa_closed_form(c);
        CHECK(closed[0] == 1.0);
        CHECK(closed[1] <= closed[2]);
        std::sort(closed.begin(), closed.end());
        const auto num = eigendecompose_symmetric(tripartite_potential(c)).eigenvalues;
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(closed[i] - num[i]));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("classify") {
    CHECK(classify(ScaledCoupling{0.5, 0.5, 1.0}).label == RegimeLabel::normal);  // a^2+b^2 = k/2
    CHECK(classify(ScaledCoupling{1.0, 1.0, 2.0}).label == RegimeLabel::free_particle);
    CHECK(classify(ScaledCoupling{1.0, 1.0, 1.0}).label == RegimeLabel::inverted);  // a^2+b^2 = 2k
    CHECK(classify(ScaledCoupling{1.0, 1.0, 2.0 + 1e-6}).label == RegimeLabel::normal);
    const auto r = classify(ScaledCoupling{1.0, 1.0, 1.0});
    CHECK(r.kappa2 < 0.0);
    CHECK(std::string(to_string(RegimeLabel::free_particle)) == "free_particle");
}

TEST_CASE("normal coordinates") {
    const Matrix z = normal_coordinates(1.0, 1.0);
    CHECK(z(0, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(z(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(z(0, 2) == 0.0);
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{-0.4, 2.5}, std::pair{0.0, 1.0}}) {
        const Matrix n = normal_coordinates(a, b);
        CHECK(frobenius_norm(n * n.transpose() - Matrix::identity(3)) < 1e-12);
        const double s = a * a + b * b;
        const Matrix d = n * tripartite_potential({a, b, s}) * n.transpose();
        CHECK(d(0, 0) == doctest::Approx(1.0));
        CHECK(std::abs(d(1, 1)) < 1e-12);
        CHECK(d(2, 2) == doctest::Approx(1.0 + s));
        CHECK(std::abs(d(0, 1)) + std::abs(d(0, 2)) + std::abs(d(1, 2)) < 1e-12);
    }
    CHECK_THROWS_AS(normal_coordinates(0.0, 0.0), DegenerateCoupling);
}

TEST_CASE("entropies") {
    CHECK(entropy_x1({0.0, 0.0, 2.0}).nats() == 0.0);
    CHECK(entropy_x2({0.0, 0.0, 0.5}).nats() == 0.0);
    CHECK(entropy_x1({1.0, 1.0, 2.0}).is_divergent());
    CHECK(entropy_x2({1.0, 1.0, 2.0}).is_divergent());
    CHECK_THROWS_AS(entropy_x1({2.0, 0.0, 1.0}), InvertedOscillator);

    const double s2 = entropy_x1({1.0, 1.0, 2.0 * (1.0 + 1e-2)}).nats();
    const double s4 = entropy_x1({1.0, 1.0, 2.0 * (1.0 + 1e-4)}).nats();
    const double s8 = entropy_x1({1.0, 1.0, 2.0 * (1.0 + 1e-8)}).nats();
    CHECK(s2 < s4);
    CHECK(s4 < s8);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.5, 1.5), f(1.01, 3.0);
    for (int t = 0; t < 100; ++t) {
        const double a = u(rng), b = u(rng);
        const double k = (a * a + b * b) * f(rng) + 0.01;
        CHECK(std::abs(entropy_x1({a, b, k}).nats() - entropy_x2({b, a, k}).nats()) < 1e-10);
        // Pure state: tracing {x2, y} or only {x1} gives the same number.
        const std::array<std::size_t, 1> x1{0};
        const double single = entanglement_entropy(QuadraticHamiltonian(tripartite_potential({a, b, k})), x1).nats();
        CHECK(std::abs(entropy_x1({a, b, k}).nats() - single) < 1e-8);
    }
}
