#pragma once

// Periodic 1D lattice scalar field with spacing a and mass m_f, written in
// unit-kinetic form: K_nn = m_f^2 + 2/a^2, K_{n,n+-1} = -1/a^2 (wrapping).

#include <cstddef>
#include <vector>

#include "zeromode/gaussian.hpp"

namespace zeromode {

struct LatticeParams {
    std::size_t N = 2;
    double a = 1.0;
    double m_f = 0.0;
};

QuadraticHamiltonian build_coupling_matrix(const LatticeParams& p, double zero_tol = kDefaultZeroTol);

// Chain with fixed ends (no wrap); its N = 3 instance has modes
// m_f^2 + (2 -+ sqrt 2)/a^2 and m_f^2 + 2/a^2.
QuadraticHamiltonian build_fixed_end_matrix(const LatticeParams& p, double zero_tol = kDefaultZeroTol);

// omega_k^2 = m_f^2 + (4/a^2) sin^2(pi k / N).
double dispersion(std::size_t k, const LatticeParams& p);
std::vector<double> dispersion_spectrum(const LatticeParams& p);  // ascending

// omega_j^2 = m_f^2 + (4/a^2) sin^2(pi j / (2(N+1))), j = 1..N.
std::vector<double> fixed_end_spectrum(const LatticeParams& p);  // ascending

struct TransformedSpectrum {
    double mu = 1.0;                  // 2 / (2 + a^2 m_f^2)
    std::vector<double> omega_bar;    // index i = 0..N-1
};

double lattice_mu(double a, double m_f);

TransformedSpectrum transformed_modes(const LatticeParams& p);
TransformedSpectrum transformed_modes(std::size_t N, double mu);

// Potential after phi -> phi / (2 + a^2 m_f^2)^(1/4): diagonal 1, neighbours -mu/2.
QuadraticHamiltonian transformed_coupling_matrix(std::size_t N, double mu, double zero_tol = kDefaultZeroTol);

std::size_t zero_mode_count(std::span<const double> eigenvalues, double zero_tol = kDefaultZeroTol);

// Sites 0 .. N/2 - 1.
std::vector<std::size_t> half_chain(std::size_t N);

// Entropy of the sites not in `traced`.
EntropyValue half_chain_entropy(const LatticeParams& p, std::span<const std::size_t> traced, bool use_transformed,
                                double zero_tol = kDefaultZeroTol);
EntropyValue transformed_entropy(std::size_t N, double mu, std::span<const std::size_t> traced,
                                 double zero_tol = kDefaultZeroTol);

}  // namespace zeromode
