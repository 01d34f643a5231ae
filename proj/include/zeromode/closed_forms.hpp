#pragma once

// Two coupled oscillators with a negative coupling,
//   V = (m/2) [ omega0^2 (x1^2 + x2^2) - omega1^2 (x1 - x2)^2 ],
// their zero-frequency (plane-wave) limit, and the distorted-coordinate
// single-eigenvalue entropy of the mapped hydrogen ground state.

#include "zeromode/gaussian.hpp"

namespace zeromode {

struct CoupledPair {
    double omega0 = 1.0;
    double omega1 = 0.0;
    double mass = 1.0;
    double hbar = 1.0;
};

struct ModePair {
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    double beta_plus = 0.0;  // m omega_+ / hbar
    double beta_minus = 0.0;
};

// Throws ImaginaryMode when 2 omega1^2 > omega0^2, DomainError for bad inputs.
ModePair normal_modes(const CoupledPair& pair);

// xi(R) = (1-R)^2 / (1 + R^2 + 6R + 4(1+R) sqrt(R)), R in [0, 1].
double xi_of_R(double R);

// Divergent sentinel at R = 0.
EntropyValue entropy_closed(double R);

struct ReducedKernel {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double varrho = 0.0;
    double xi = 0.0;
};

ReducedKernel reduced_kernel_params(double beta_plus, double beta_minus);
ReducedKernel reduced_kernel_params(const CoupledPair& pair);

struct GridSpec {
    double half_width = 0.0;
    std::size_t points = 0;
};

// Brute-force check: samples the two-oscillator ground state on an n x n grid,
// forms the reduced density matrix by trapezoidal integration over x2 and
// diagonalises it. Independent of the closed-form xi route.
EntropyValue grid_oracle_entropy(double beta_plus, double beta_minus, const GridSpec& grid);
EntropyValue grid_oracle_entropy(const CoupledPair& pair, const GridSpec& grid);

// 6 / sqrt(min beta).
GridSpec default_grid(double beta_plus, double beta_minus, std::size_t points);

struct GridConvergence {
    std::vector<std::size_t> points;
    std::vector<double> entropies;
    bool converged = false;
};

// Doubles the grid from `start` points until successive entropies differ by less than tol.
GridConvergence grid_oracle_convergence(double beta_plus, double beta_minus, std::size_t start,
                                        std::size_t max_points, double tol);

// Omega = pi hbar k / (m omega); +inf when omega == 0.
double plane_wave_volume(double k, double omega, double mass = 1.0, double hbar = 1.0);

// E_- = 8 hbar omega0 / (pi e^2).
double ir_energy_choice(double omega0, double hbar = 1.0);

double plane_wave_wavenumber(double energy, double mass = 1.0, double hbar = 1.0);

// S = -sqrt(2) ln( (4 omega_- / (e k_-)) sqrt(m / (pi hbar omega_+)) ); divergent at omega_- = 0.
EntropyValue free_particle_entropy(double omega_plus, double omega_minus, double energy_minus,
                                   double mass = 1.0, double hbar = 1.0);

// rho(k) = (4 / Omega) sqrt(pi / beta_+) exp(-(sqrt(2) k - k_-)^2 / beta_-).
double plane_wave_reduced_eigenvalue(double k, double k_minus, double beta_plus, double beta_minus,
                                     double volume);

struct PlaneWaveSpectralSums {
    double trace = 0.0;    // int dk (Omega / 2 pi) rho(k)
    double entropy = 0.0;  // -int dk (Omega / 2 pi) rho ln rho
};

// Quadrature over k of the plane-wave reduced spectrum.
PlaneWaveSpectralSums plane_wave_spectral_sums(double k_minus, double beta_plus, double beta_minus,
                                               double volume, double rel_tol = 1e-12);

// lambda(eps) = 1 - eps/4 - eps^2/24 - eps^3/64. DomainError outside [0, 0.5].
double distorted_coordinate_eigenvalue(double eps);

// -lambda ln lambda.
EntropyValue distorted_coordinate_entropy(double eps);

// True where the small-eps expansion is being stretched (eps > 0.2).
bool distorted_coordinate_warning(double eps);

}  // namespace zeromode
