#pragma once

// Two oscillators x1, x2 that interact only through a shared environment
// oscillator y. After rescaling x_i -> x_i / sqrt(m omega), y -> y / sqrt(M omega)
// the potential matrix is
//   K = [[1, 0, a], [0, 1, b], [a, b, k]]
// with a = alpha / (sqrt(Mm) omega^2), b = beta / (sqrt(Mm) omega^2),
// k = Omega_env^2 / omega^2.

#include <array>

#include "zeromode/gaussian.hpp"

namespace zeromode {

struct TripartiteParams {
    double m = 1.0;
    double M = 1.0;
    double omega = 1.0;
    double Omega_env = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
};

struct ScaledCoupling {
    double alpha_t = 0.0;
    double beta_t = 0.0;
    double k = 1.0;

    double coupling_sq() const { return alpha_t * alpha_t + beta_t * beta_t; }
};

ScaledCoupling scale(const TripartiteParams& p);

Matrix tripartite_potential(const ScaledCoupling& c);

// kappa1 = 1, kappa2,3 = (1 + k -+ sqrt((k-1)^2 + 4(a^2 + b^2))) / 2.
std::array<double, 3> kappa_closed_form(const ScaledCoupling& c);

enum class RegimeLabel { normal, free_particle, inverted };

const char* to_string(RegimeLabel r);

struct Regime {
    RegimeLabel label = RegimeLabel::normal;
    double kappa2 = 0.0;
};

// Sign of k - (a^2 + b^2), zero within zero_tol * max(1, k, a^2 + b^2).
Regime classify(const ScaledCoupling& c, double zero_tol = kDefaultZeroTol);
Regime classify(const TripartiteParams& p, double zero_tol = kDefaultZeroTol);

// Rows are the normal coordinates at the free-particle point k = a^2 + b^2:
//   z1 = (-b, a, 0) / sqrt(s), z2 = (-a, -b, 1) / sqrt(1+s),
//   z3 = (a, b, s) / sqrt(s(1+s)),  s = a^2 + b^2.
// Throws DegenerateCoupling when a = b = 0.
Matrix normal_coordinates(double alpha_t, double beta_t);

// Entropy of x1 (tracing x2 and y) and of x2 (tracing x1 and y).
// Divergent sentinel at the free-particle point, InvertedOscillator beyond it.
EntropyValue entropy_x1(const ScaledCoupling& c, double zero_tol = kDefaultZeroTol);
EntropyValue entropy_x2(const ScaledCoupling& c, double zero_tol = kDefaultZeroTol);

}  // namespace zeromode
