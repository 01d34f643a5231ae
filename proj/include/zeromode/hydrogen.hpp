#pragma once

// Electron-proton entanglement of a hydrogen atom whose centre of mass is a
// plane wave, regularised by a weak trap of frequency omega on the centre of
// mass. The reduced electron state is translation invariant, so its spectrum
// is a continuous function of the wave vector k.

#include <array>

#include "zeromode/gaussian.hpp"
#include "zeromode/quadrature.hpp"

namespace zeromode {

struct HydrogenParams {
    double m_e = 1.0;
    double m_p = 1.0;
    double e2 = 1.0;  // charge squared
    double hbar = 1.0;
    double P = 1.0;      // centre-of-mass momentum magnitude
    double omega = 1.0;  // trap frequency

    double reduced_mass() const { return m_e * m_p / (m_e + m_p); }
    double total_mass() const { return m_e + m_p; }
};

struct SpectralScale {
    double a0 = 0.0;      // Bohr radius
    double k_e = 0.0;     // m_e P / (M hbar)
    double volume = 0.0;  // centre-of-mass normalisation volume
    double eta = 0.0;     // a0 k_e
    double zeta = 0.0;    // 64 pi a0^3 / volume
};

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double kappa_start = 16.0;
    double kappa_cap = 1048576.0;  // 2^20
};

using Vec3 = std::array<double, 3>;

double bohr_radius(double reduced_mass, double e2, double hbar = 1.0);
double bohr_radius(const HydrogenParams& p);

// (pi P / (sqrt(3) M omega))^3, from an equal split P_x = P_y = P_z = P/sqrt(3).
// +inf at omega = 0; DegenerateMomentum at P = 0.
double com_volume(double P, double M, double omega);

SpectralScale spectral_scale(const HydrogenParams& p);

// Inverse of spectral_scale in natural units (a0 = 1, m = 1, m_e = m_p).
HydrogenParams params_for_scale(double eta, double zeta);

// (1/Omega) 64 pi a0^3 / (1 + a0^2 |k - k_e|^2)^4, with k_e along z.
double rho_eigenvalue(const Vec3& k, const HydrogenParams& p);
double rho_eigenvalue_shifted(double q, double a0, double volume);

// Entropy density in kappa = |k| / k_e after exact angular integration:
//   g = -(8 eta kappa / 3 pi) [ T_-(ln zeta + ln F_- - 4/3) - T_+(ln zeta + ln F_+ - 4/3) ]
// with T_pm = (1 + eta^2 (1 pm kappa)^2)^-3 and F_pm = T_pm^(4/3).
double g_integrand(double kappa, double eta, double zeta);

// Matching density for the trace; integrates to 1 over kappa in [0, inf).
double trace_integrand(double kappa, double eta);

struct IntegratedEntropy {
    EntropyValue entropy = EntropyValue::finite(0.0);
    double abs_error = 0.0;
    double kappa_max = 0.0;
};

// int_0^inf g(kappa) dkappa without the sign check; goes negative once zeta
// is large enough that rho exceeds 1 near the peak.
SemiInfiniteResult signed_spectral_entropy(double eta, double zeta, const QuadratureConfig& quad = {});

// S = int_0^inf g(kappa) dkappa. Divergent sentinel at zeta = 0; DomainError
// when the integral is negative.
IntegratedEntropy hydrogen_entropy(double eta, double zeta, const QuadratureConfig& quad = {});

// Same entropy through the radial integral in q = |k - k_e|:
//   S = -ln zeta - (32/pi) int_0^inf u^2 F(u) ln F(u) du,  F = (1+u^2)^-4.
IntegratedEntropy hydrogen_entropy_radial(double zeta, const QuadratureConfig& quad = {});

// int d^3k Omega/(2 pi)^3 rho(k), by radial quadrature about k_e.
double spectral_trace(const HydrogenParams& p, const QuadratureConfig& quad = {});

// Same trace over kappa = |k| / k_e.
double spectral_trace_kappa(double eta, const QuadratureConfig& quad = {});

// m e^4 / (2 n^2 hbar^2).
double rydberg_binding(int n, double m, double e2, double hbar = 1.0);

enum class MappingVariant { four_dim_oscillator, isotonic };

const char* to_string(MappingVariant v);

// Exponent of the mapped ground state exp(-beta r / 2).
double mapping_beta(double binding, double m, double hbar, MappingVariant variant);

struct MappingReport {
    struct Entry {
        MappingVariant variant;
        double beta_a0 = 0.0;            // should be 2
        double max_spectral_diff = 0.0;  // |rho_mapped - rho| on sample k's
        double entropy_diff = 0.0;
    };
    std::vector<Entry> entries;
    double entropy = 0.0;  // unmapped, signed spectral integral
    bool equivalent = false;
};

MappingReport mapping_equivalence_check(const HydrogenParams& p, double tol = 1e-6,
                                        const QuadratureConfig& quad = {});

}  // namespace zeromode
