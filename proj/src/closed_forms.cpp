#include "zeromode/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "zeromode/errors.hpp"
#include "zeromode/quadrature.hpp"

namespace zeromode {

using std::numbers::e;
using std::numbers::pi;

ModePair normal_modes(const CoupledPair& pair) {
    if (!(pair.omega0 > 0.0) || !(pair.omega1 >= 0.0) || !(pair.mass > 0.0) || !(pair.hbar > 0.0))
        throw DomainError("normal_modes: need omega0 > 0, omega1 >= 0, mass > 0, hbar > 0");
    const double disc = pair.omega0 * pair.omega0 - 2.0 * pair.omega1 * pair.omega1;
    if (disc < 0.0) throw ImaginaryMode("normal_modes: 2 omega1^2 > omega0^2, omega_- is imaginary");
    ModePair m;
    m.omega_plus = pair.omega0;
    m.omega_minus = std::sqrt(disc);
    m.beta_plus = pair.mass * m.omega_plus / pair.hbar;
    m.beta_minus = pair.mass * m.omega_minus / pair.hbar;
    return m;
}

double xi_of_R(double R) {
    if (!(R >= 0.0 && R <= 1.0)) throw DomainError("xi_of_R: R must lie in [0, 1]");
    const double num = (1.0 - R) * (1.0 - R);
    const double den = 1.0 + R * R + 6.0 * R + 4.0 * (1.0 + R) * std::sqrt(R);
    return num / den;
}

EntropyValue entropy_closed(double R) {
    const double xi = xi_of_R(R);
    if (xi >= 1.0) return EntropyValue::divergent(kCauseZeroMode);
    return EntropyValue::finite(mode_entropy(xi));
}

ReducedKernel reduced_kernel_params(double beta_plus, double beta_minus) {
    if (!(beta_plus > 0.0) || !(beta_minus >= 0.0)) throw DomainError("reduced_kernel_params: need beta_+ > 0, beta_- >= 0");
    const double sum = beta_plus + beta_minus;
    ReducedKernel k;
    k.gamma1 = (beta_plus * beta_plus + beta_minus * beta_minus + 6.0 * beta_plus * beta_minus) / (4.0 * sum);
    k.gamma2 = (beta_plus - beta_minus) * (beta_plus - beta_minus) / (4.0 * sum);
    k.varrho = std::sqrt(beta_plus * beta_minus);
    k.xi = k.gamma2 / (k.gamma1 + k.varrho);
    return k;
}

ReducedKernel reduced_kernel_params(const CoupledPair& pair) {
    const auto m = normal_modes(pair);
    return reduced_kernel_params(m.beta_plus, m.beta_minus);
}

GridSpec default_grid(double beta_plus, double beta_minus, std::size_t points) {
    return GridSpec{6.0 / std::sqrt(std::min(beta_plus, beta_minus)), points};
}

EntropyValue grid_oracle_entropy(double beta_plus, double beta_minus, const GridSpec& grid) {
    if (!(beta_plus > 0.0) || !(beta_minus > 0.0)) throw DomainError("grid_oracle_entropy: betas must be positive");
    if (!(grid.half_width > 0.0) || grid.points < 2) throw DomainError("grid_oracle_entropy: bad grid");
    const std::size_t n = grid.points;
    const double h = 2.0 * grid.half_width / static_cast<double>(n - 1);
    const double norm = std::pow(beta_plus * beta_minus, 0.25) / std::sqrt(pi);

    Matrix psi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x1 = -grid.half_width + h * static_cast<double>(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double x2 = -grid.half_width + h * static_cast<double>(j);
            const double sp = x1 + x2;
            const double sm = x1 - x2;
            psi(i, j) = norm * std::exp(-0.25 * beta_plus * sp * sp - 0.25 * beta_minus * sm * sm);
        }
    }

    // rho(x_i, x_j) = h sum_k psi(x_i, x_k) psi(x_j, x_k); the integral
    // operator's eigenvalues pick up one more factor of h.
    Matrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ri = psi.row(i);
        for (std::size_t j = i; j < n; ++j) {
            const auto rj = psi.row(j);
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += ri[k] * rj[k];
            rho(i, j) = rho(j, i) = h * h * s;
        }
    }

    double s = 0.0;
    for (double p : symmetric_eigenvalues(rho))
        if (p > 1e-14) s -= p * std::log(p);
    return EntropyValue::finite(std::max(s, 0.0));
}

EntropyValue grid_oracle_entropy(const CoupledPair& pair, const GridSpec& grid) {
    const auto m = normal_modes(pair);
    return grid_oracle_entropy(m.beta_plus, m.beta_minus, grid);
}

GridConvergence grid_oracle_convergence(double beta_plus, double beta_minus, std::size_t start,
                                        std::size_t max_points, double tol) {
    GridConvergence out;
    for (std::size_t n = start; n <= max_points; n *= 2) {
        out.points.push_back(n);
        out.entropies.push_back(grid_oracle_entropy(beta_plus, beta_minus, default_grid(beta_plus, beta_minus, n)).nats());
        const std::size_t m = out.entropies.size();
        if (m >= 2 && std::abs(out.entropies[m - 1] - out.entropies[m - 2]) < tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

double plane_wave_volume(double k, double omega, double mass, double hbar) {
    if (!(k > 0.0) || !(omega >= 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw DomainError("plane_wave_volume: need k > 0, omega >= 0, mass > 0, hbar > 0");
    if (omega == 0.0) return std::numeric_limits<double>::infinity();
    return pi * hbar * k / (mass * omega);
}

double ir_energy_choice(double omega0, double hbar) {
    if (!(omega0 > 0.0) || !(hbar > 0.0)) throw DomainError("ir_energy_choice: need omega0 > 0, hbar > 0");
    return 8.0 * hbar * omega0 / (pi * e * e);
}

double plane_wave_wavenumber(double energy, double mass, double hbar) {
    if (!(energy > 0.0)) throw DomainError("plane_wave_wavenumber: energy must be positive");
    return std::sqrt(2.0 * mass * energy) / hbar;
}

EntropyValue free_particle_entropy(double omega_plus, double omega_minus, double energy_minus, double mass,
                                   double hbar) {
    if (!(omega_plus > 0.0) || !(omega_minus >= 0.0) || !(energy_minus > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw DomainError("free_particle_entropy: frequencies, energy, mass and hbar must be positive");
    if (omega_minus == 0.0) return EntropyValue::divergent(kCauseZeroMode);
    const double k_minus = plane_wave_wavenumber(energy_minus, mass, hbar);
    const double arg = (4.0 * omega_minus / (e * k_minus)) * std::sqrt(mass / (pi * hbar * omega_plus));
    const double s = -std::sqrt(2.0) * std::log(arg);
    if (s < -1e-12)
        throw DomainError("free_particle_entropy: log argument exceeds 1, energy choice outside the valid regime");
    return EntropyValue::finite(std::max(s, 0.0));
}

double plane_wave_reduced_eigenvalue(double k, double k_minus, double beta_plus, double beta_minus, double volume) {
    if (!(beta_plus > 0.0) || !(beta_minus > 0.0) || !(volume > 0.0))
        throw DomainError("plane_wave_reduced_eigenvalue: betas and volume must be positive");
    const double x = std::sqrt(2.0) * k - k_minus;
    return (4.0 / volume) * std::sqrt(pi / beta_plus) * std::exp(-x * x / beta_minus);
}

PlaneWaveSpectralSums plane_wave_spectral_sums(double k_minus, double beta_plus, double beta_minus, double volume,
                                               double rel_tol) {
    if (!(beta_plus > 0.0) || !(beta_minus > 0.0) || !(volume > 0.0))
        throw DomainError("plane_wave_spectral_sums: betas and volume must be positive");
    const double peak = (4.0 / volume) * std::sqrt(pi / beta_plus);
    const double log_peak = std::log(peak);
    const double center = k_minus / std::sqrt(2.0);
    const double width = std::sqrt(beta_minus / 2.0);
    const double lo = center - 14.0 * width;
    const double hi = center + 14.0 * width;
    const double measure = volume / (2.0 * pi);

    // ln rho is taken analytically so the tails never evaluate log(0).
    auto exponent = [&](double k) {
        const double x = std::sqrt(2.0) * k - k_minus;
        return x * x / beta_minus;
    };
    PlaneWaveSpectralSums out;
    out.trace = measure * integrate([&](double k) { return peak * std::exp(-exponent(k)); }, lo, hi, rel_tol, 1e-300).value;
    out.entropy = -measure * integrate(
                                 [&](double k) {
                                     const double q = exponent(k);
                                     return peak * std::exp(-q) * (log_peak - q);
                                 },
                                 lo, hi, rel_tol, 1e-300)
                                 .value;
    return out;
}

double distorted_coordinate_eigenvalue(double eps) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw DomainError("distorted_coordinate_eigenvalue: eps must lie in [0, 0.5]");
    return 1.0 - eps / 4.0 - eps * eps / 24.0 - eps * eps * eps / 64.0;
}

EntropyValue distorted_coordinate_entropy(double eps) {
    const double lambda = distorted_coordinate_eigenvalue(eps);
    return EntropyValue::finite(-lambda * std::log(lambda));
}

bool distorted_coordinate_warning(double eps) { return eps > 0.2; }

}  // namespace zeromode
