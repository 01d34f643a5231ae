#include "zeromode/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeromode/errors.hpp"

namespace zeromode {

using std::numbers::pi;

namespace {

void check(const LatticeParams& p) {
    if (p.N < 2) throw DomainError("lattice: need at least two sites");
    if (!(p.a > 0.0) || !(p.m_f >= 0.0)) throw DomainError("lattice: need a > 0 and m_f >= 0");
}

// Adds w (phi_i - phi_j)^2 expanded into K.
void add_bond(Matrix& k, std::size_t i, std::size_t j, double w) {
    k(i, i) += w;
    k(j, j) += w;
    k(i, j) -= w;
    k(j, i) -= w;
}

}  // namespace

QuadraticHamiltonian build_coupling_matrix(const LatticeParams& p, double zero_tol) {
    check(p);
    const double w = 1.0 / (p.a * p.a);
    Matrix k(p.N, p.N);
    for (std::size_t n = 0; n < p.N; ++n) {
        k(n, n) += p.m_f * p.m_f;
        add_bond(k, n, (n + 1) % p.N, w);
    }
    return QuadraticHamiltonian(std::move(k), zero_tol);
}

QuadraticHamiltonian build_fixed_end_matrix(const LatticeParams& p, double zero_tol) {
    check(p);
    const double w = 1.0 / (p.a * p.a);
    Matrix k(p.N, p.N);
    for (std::size_t n = 0; n < p.N; ++n) {
        k(n, n) = p.m_f * p.m_f + 2.0 * w;
        if (n + 1 < p.N) k(n, n + 1) = k(n + 1, n) = -w;
    }
    return QuadraticHamiltonian(std::move(k), zero_tol);
}

double dispersion(std::size_t k, const LatticeParams& p) {
    check(p);
    if (k >= p.N) throw DomainError("dispersion: mode index out of range");
    const double s = std::sin(pi * static_cast<double>(k) / static_cast<double>(p.N));
    return p.m_f * p.m_f + 4.0 / (p.a * p.a) * s * s;
}

std::vector<double> dispersion_spectrum(const LatticeParams& p) {
    std::vector<double> out(p.N);
    for (std::size_t k = 0; k < p.N; ++k) out[k] = dispersion(k, p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> fixed_end_spectrum(const LatticeParams& p) {
    check(p);
    std::vector<double> out(p.N);
    for (std::size_t j = 1; j <= p.N; ++j) {
        const double s = std::sin(pi * static_cast<double>(j) / (2.0 * static_cast<double>(p.N + 1)));
        out[j - 1] = p.m_f * p.m_f + 4.0 / (p.a * p.a) * s * s;
    }
    std::sort(out.begin(), out.end());
    return out;
}

double lattice_mu(double a, double m_f) {
    if (!(a > 0.0) || !(m_f >= 0.0)) throw DomainError("lattice_mu: need a > 0 and m_f >= 0");
    return 2.0 / (2.0 + a * a * m_f * m_f);
}

TransformedSpectrum transformed_modes(std::size_t N, double mu) {
    if (N < 2) throw DomainError("transformed_modes: need at least two sites");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("transformed_modes: mu must lie in (0, 1]");
    TransformedSpectrum t;
    t.mu = mu;
    t.omega_bar.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double s = std::sin(pi * static_cast<double>(i) / static_cast<double>(N));
        t.omega_bar[i] = std::sqrt(std::max(0.0, 1.0 - mu + 2.0 * mu * s * s));
    }
    return t;
}

TransformedSpectrum transformed_modes(const LatticeParams& p) {
    check(p);
    return transformed_modes(p.N, lattice_mu(p.a, p.m_f));
}

QuadraticHamiltonian transformed_coupling_matrix(std::size_t N, double mu, double zero_tol) {
    if (N < 2) throw DomainError("transformed_coupling_matrix: need at least two sites");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("transformed_coupling_matrix: mu must lie in (0, 1]");
    Matrix k(N, N);
    for (std::size_t n = 0; n < N; ++n) {
        k(n, n) += 1.0 - mu;
        add_bond(k, n, (n + 1) % N, 0.5 * mu);
    }
    return QuadraticHamiltonian(std::move(k), zero_tol);
}

std::size_t zero_mode_count(std::span<const double> eigenvalues, double zero_tol) {
    const auto regimes = classify_modes(eigenvalues, zero_tol);
    return static_cast<std::size_t>(std::count(regimes.begin(), regimes.end(), ModeRegime::zero));
}

std::vector<std::size_t> half_chain(std::size_t N) {
    std::vector<std::size_t> out(N / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

EntropyValue transformed_entropy(std::size_t N, double mu, std::span<const std::size_t> traced, double zero_tol) {
    return entanglement_entropy(transformed_coupling_matrix(N, mu, zero_tol), traced);
}

EntropyValue half_chain_entropy(const LatticeParams& p, std::span<const std::size_t> traced, bool use_transformed,
                                double zero_tol) {
    check(p);
    if (use_transformed) return transformed_entropy(p.N, lattice_mu(p.a, p.m_f), traced, zero_tol);
    return entanglement_entropy(build_coupling_matrix(p, zero_tol), traced);
}

}  // namespace zeromode
