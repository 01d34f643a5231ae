#include "zeromode/tripartite.hpp"

#include <algorithm>
#include <cmath>

#include "zeromode/errors.hpp"

namespace zeromode {

ScaledCoupling scale(const TripartiteParams& p) {
    if (!(p.m > 0.0) || !(p.M > 0.0) || !(p.omega > 0.0) || !(p.Omega_env > 0.0))
        throw DomainError("tripartite scale: masses and frequencies must be positive");
    const double unit = std::sqrt(p.M * p.m) * p.omega * p.omega;
    ScaledCoupling c;
    c.alpha_t = p.alpha / unit;
    c.beta_t = p.beta / unit;
    c.k = (p.Omega_env * p.Omega_env) / (p.omega * p.omega);
    return c;
}

Matrix tripartite_potential(const ScaledCoupling& c) {
    return Matrix{{1.0, 0.0, c.alpha_t}, {0.0, 1.0, c.beta_t}, {c.alpha_t, c.beta_t, c.k}};
}

std::array<double, 3> kappa_closed_form(const ScaledCoupling& c) {
    const double root = std::sqrt((c.k - 1.0) * (c.k - 1.0) + 4.0 * c.coupling_sq());
    return {1.0, 0.5 * (1.0 + c.k - root), 0.5 * (1.0 + c.k + root)};
}

const char* to_string(RegimeLabel r) {
    switch (r) {
        case RegimeLabel::normal: return "normal";
        case RegimeLabel::free_particle: return "free_particle";
        case RegimeLabel::inverted: return "inverted";
    }
    return "?";
}

Regime classify(const ScaledCoupling& c, double zero_tol) {
    const double s = c.coupling_sq();
    const double gap = c.k - s;
    const double thr = zero_tol * std::max({1.0, std::abs(c.k), s});
    Regime r;
    r.kappa2 = kappa_closed_form(c)[1];
    if (std::abs(gap) <= thr)
        r.label = RegimeLabel::free_particle;
    else
        r.label = gap > 0.0 ? RegimeLabel::normal : RegimeLabel::inverted;
    return r;
}

Regime classify(const TripartiteParams& p, double zero_tol) { return classify(scale(p), zero_tol); }

Matrix normal_coordinates(double alpha_t, double beta_t) {
    const double s = alpha_t * alpha_t + beta_t * beta_t;
    if (s == 0.0) throw DegenerateCoupling("normal_coordinates: alpha and beta both vanish");
    const double n1 = std::sqrt(s);
    const double n2 = std::sqrt(1.0 + s);
    const double n3 = std::sqrt(s * (1.0 + s));
    return Matrix{{-beta_t / n1, alpha_t / n1, 0.0},
                  {-alpha_t / n2, -beta_t / n2, 1.0 / n2},
                  {alpha_t / n3, beta_t / n3, s / n3}};
}

namespace {

EntropyValue entropy_keeping(const ScaledCoupling& c, std::size_t kept_oscillator, double zero_tol) {
    const auto regime = classify(c, zero_tol);
    if (regime.label == RegimeLabel::inverted)
        throw InvertedOscillator("tripartite: coupling exceeds the environment stiffness (a^2 + b^2 > k)");
    if (regime.label == RegimeLabel::free_particle) return EntropyValue::divergent(kCauseZeroMode);
    const QuadraticHamiltonian h(tripartite_potential(c), zero_tol);
    const std::array<std::size_t, 2> traced = kept_oscillator == 0 ? std::array<std::size_t, 2>{1, 2}
                                                                   : std::array<std::size_t, 2>{0, 2};
    return entanglement_entropy(h, traced);
}

}  // namespace

EntropyValue entropy_x1(const ScaledCoupling& c, double zero_tol) { return entropy_keeping(c, 0, zero_tol); }

EntropyValue entropy_x2(const ScaledCoupling& c, double zero_tol) { return entropy_keeping(c, 1, zero_tol); }

}  // namespace zeromode
