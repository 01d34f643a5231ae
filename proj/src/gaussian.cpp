#include "zeromode/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeromode/errors.hpp"

namespace zeromode {

EntropyValue EntropyValue::finite(double nats) {
    if (!(nats >= 0.0) || !std::isfinite(nats))
        throw DomainError("EntropyValue: finite entropy must be a nonnegative number");
    return EntropyValue(nats + 0.0, std::nullopt);  // no -0
}

EntropyValue EntropyValue::divergent(std::string cause) {
    return EntropyValue(std::numeric_limits<double>::infinity(), std::move(cause));
}

QuadraticHamiltonian::QuadraticHamiltonian(Matrix potential, double zero_tol)
    : potential_(std::move(potential)), zero_tol_(zero_tol) {
    if (!potential_.square() || potential_.rows() == 0)
        throw DomainError("QuadraticHamiltonian: potential must be a nonempty square matrix");
    if (!(zero_tol_ > 0.0)) throw DomainError("QuadraticHamiltonian: zero_tol must be positive");
    double scale = 0.0;
    for (double x : potential_.data()) scale = std::max(scale, std::abs(x));
    if (max_abs_asymmetry(potential_) > 1e-12 * std::max(scale, 1e-300))
        throw AsymmetricMatrix("QuadraticHamiltonian: potential matrix is not symmetric");
    // Store the exactly symmetric part so downstream solvers see clean input.
    for (std::size_t i = 0; i < potential_.rows(); ++i)
        for (std::size_t j = i + 1; j < potential_.cols(); ++j) {
            const double s = 0.5 * (potential_(i, j) + potential_(j, i));
            potential_(i, j) = s;
            potential_(j, i) = s;
        }
}

const char* to_string(ModeRegime r) {
    switch (r) {
        case ModeRegime::positive: return "positive";
        case ModeRegime::zero: return "zero";
        case ModeRegime::negative: return "negative";
    }
    return "?";
}

double zero_threshold(std::span<const double> eigenvalues, double zero_tol) {
    double kmax = 0.0;
    for (double k : eigenvalues) kmax = std::max(kmax, std::abs(k));
    return zero_tol * std::max(1.0, kmax);
}

std::vector<ModeRegime> classify_modes(std::span<const double> eigenvalues, double zero_tol) {
    const double thr = zero_threshold(eigenvalues, zero_tol);
    std::vector<ModeRegime> out;
    out.reserve(eigenvalues.size());
    for (double k : eigenvalues) {
        if (std::abs(k) <= thr)
            out.push_back(ModeRegime::zero);
        else if (k < 0.0)
            out.push_back(ModeRegime::negative);
        else
            out.push_back(ModeRegime::positive);
    }
    return out;
}

NormalModeSpectrum eigendecompose_symmetric(const Matrix& k, double zero_tol) {
    auto eig = symmetric_eigen(k);
    NormalModeSpectrum s;
    s.regimes = classify_modes(eig.values, zero_tol);
    s.eigenvalues = std::move(eig.values);
    s.eigenvectors = std::move(eig.vectors);
    return s;
}

NormalModeSpectrum eigendecompose_symmetric(const QuadraticHamiltonian& h) {
    return eigendecompose_symmetric(h.potential(), h.zero_tol());
}

namespace {

Matrix sqrt_from_spectrum(const NormalModeSpectrum& s) {
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
        if (s.regimes[i] == ModeRegime::negative)
            throw InvertedOscillator("negative squared frequency " + std::to_string(s.eigenvalues[i]) +
                                     ": entropy undefined for an unbounded potential");
    SymmetricEigen eig{s.eigenvalues, s.eigenvectors};
    for (std::size_t i = 0; i < eig.values.size(); ++i)
        if (s.regimes[i] == ModeRegime::zero) eig.values[i] = 0.0;
    return spectral_apply(eig, [](double x) { return std::sqrt(x); });
}

double squared_norm_rows(const Matrix& v, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    double s = 0.0;
    for (auto i : rows)
        for (auto j : cols) s += v(i, j) * v(i, j);
    return s;
}

}  // namespace

Matrix matrix_sqrt_psd(const Matrix& k, double zero_tol) {
    return sqrt_from_spectrum(eigendecompose_symmetric(k, zero_tol));
}

XiSpectrum reduce_to_xi(const QuadraticHamiltonian& h, std::span<const std::size_t> traced) {
    const std::size_t n = h.dimension();
    std::vector<bool> is_traced(n, false);
    for (auto i : traced) {
        if (i >= n) throw DomainError("reduce_to_xi: traced index out of range");
        if (is_traced[i]) throw DomainError("reduce_to_xi: duplicate traced index");
        is_traced[i] = true;
    }
    if (traced.empty() || traced.size() >= n)
        throw DomainError("reduce_to_xi: traced set must be a nonempty proper subset");

    std::vector<std::size_t> tr, kept;
    for (std::size_t i = 0; i < n; ++i) (is_traced[i] ? tr : kept).push_back(i);

    const auto spectrum = eigendecompose_symmetric(h);
    std::vector<std::size_t> zero_cols;
    for (std::size_t i = 0; i < n; ++i)
        if (spectrum.regimes[i] == ModeRegime::zero) zero_cols.push_back(i);

    const Matrix omega = sqrt_from_spectrum(spectrum);  // throws on inverted modes

    // No coupling across the cut: product state.
    const Matrix cross = h.potential().submatrix(tr, kept);
    if (std::all_of(cross.data().begin(), cross.data().end(), [](double x) { return x == 0.0; }))
        return XiSpectrum{std::vector<double>(kept.size(), 0.0), false};

    if (!zero_cols.empty()) {
        constexpr double overlap_tol = 1e-12;
        const double w_traced = squared_norm_rows(spectrum.eigenvectors, tr, zero_cols);
        if (w_traced > overlap_tol) return XiSpectrum{{}, true};
        // Zero-mode lives entirely in the kept block: the reduced state is not
        // normalizable and no finite xi spectrum exists.
        throw SingularBlock("reduce_to_xi: zero-mode confined to the kept subsystem");
    }

    const Matrix a = omega.submatrix(tr, tr);
    const Matrix b = omega.submatrix(tr, kept);
    const Matrix c = omega.submatrix(kept, kept);

    Matrix beta = b.transpose() * cholesky_solve(a, b);
    beta *= 0.5;
    const Matrix gamma = c - beta;

    const auto gamma_eig = symmetric_eigen(gamma);
    for (double g : gamma_eig.values)
        if (!(g > 0.0)) throw SingularBlock("reduce_to_xi: gamma block is not positive definite");
    const Matrix gamma_inv_sqrt = spectral_apply(gamma_eig, [](double x) { return 1.0 / std::sqrt(x); });

    Matrix whitened = gamma_inv_sqrt * beta * gamma_inv_sqrt;
    for (std::size_t i = 0; i < whitened.rows(); ++i)
        for (std::size_t j = i + 1; j < whitened.cols(); ++j) {
            const double s = 0.5 * (whitened(i, j) + whitened(j, i));
            whitened(i, j) = s;
            whitened(j, i) = s;
        }

    XiSpectrum out;
    for (double bp : symmetric_eigenvalues(whitened)) {
        bp = std::max(bp, 0.0);
        if (bp >= 1.0) {
            out.divergent = true;
            continue;
        }
        const double xi = bp / (1.0 + std::sqrt((1.0 - bp) * (1.0 + bp)));
        if (xi >= 1.0 - h.zero_tol()) {
            out.divergent = true;
            continue;
        }
        out.xis.push_back(xi);
    }
    if (out.divergent) out.xis.clear();
    return out;
}

double mode_entropy(double xi) {
    if (xi <= 0.0) return 0.0;
    if (xi >= 1.0) return std::numeric_limits<double>::infinity();
    return -std::log1p(-xi) - xi / (1.0 - xi) * std::log(xi);
}

EntropyValue entropy_from_xi(const XiSpectrum& xi) {
    if (xi.divergent) return EntropyValue::divergent(kCauseZeroMode);
    double s = 0.0;
    for (double x : xi.xis) s += mode_entropy(x);
    return EntropyValue::finite(s);
}

}  // namespace zeromode
