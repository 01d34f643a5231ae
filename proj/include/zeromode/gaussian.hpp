#pragma once

// Ground-state entanglement of N coupled oscillators with Hamiltonian
//   H = sum_i p_i^2 / 2 + (1/2) x^T K x
// in unit-mass, hbar = 1 form.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zeromode/linalg.hpp"

namespace zeromode {

inline constexpr double kDefaultZeroTol = 1e-10;

/// Entanglement entropy in nats, or +inf with a recorded cause.
class EntropyValue {
public:
    static EntropyValue finite(double nats);
    static EntropyValue divergent(std::string cause);

    double nats() const { return nats_; }
    bool is_divergent() const { return cause_.has_value(); }
    const std::optional<std::string>& divergence_cause() const { return cause_; }

private:
    EntropyValue(double nats, std::optional<std::string> cause) : nats_(nats), cause_(std::move(cause)) {}
    double nats_ = 0.0;
    std::optional<std::string> cause_;
};

inline const char* const kCauseZeroMode = "zero-mode";
inline const char* const kCauseQuadratureOverflow = "quadrature overflow";

class QuadraticHamiltonian {
public:
    // Throws AsymmetricMatrix when |K_ij - K_ji| exceeds 1e-12 relative to max|K|.
    explicit QuadraticHamiltonian(Matrix potential, double zero_tol = kDefaultZeroTol);

    std::size_t dimension() const { return potential_.rows(); }
    const Matrix& potential() const { return potential_; }
    double zero_tol() const { return zero_tol_; }

private:
    Matrix potential_;
    double zero_tol_;
};

enum class ModeRegime { positive, zero, negative };

const char* to_string(ModeRegime r);

struct NormalModeSpectrum {
    std::vector<double> eigenvalues;  // squared normal frequencies, ascending
    Matrix eigenvectors;              // orthonormal columns
    std::vector<ModeRegime> regimes;
};

NormalModeSpectrum eigendecompose_symmetric(const Matrix& k, double zero_tol = kDefaultZeroTol);
NormalModeSpectrum eigendecompose_symmetric(const QuadraticHamiltonian& h);

// zero iff |kappa| <= zero_tol * max(1, |kappa_max|).
std::vector<ModeRegime> classify_modes(std::span<const double> eigenvalues, double zero_tol);

double zero_threshold(std::span<const double> eigenvalues, double zero_tol);

// Spectral square root; eigenvalues within the zero threshold are clipped to 0.
// Throws InvertedOscillator for eigenvalues below -threshold.
Matrix matrix_sqrt_psd(const Matrix& k, double zero_tol = kDefaultZeroTol);

struct XiSpectrum {
    std::vector<double> xis;  // each in [0, 1)
    bool divergent = false;
};

// Traces out the oscillators listed in `traced` and returns the per-mode
// xi parameters of the reduced Gaussian state of the rest.
XiSpectrum reduce_to_xi(const QuadraticHamiltonian& h, std::span<const std::size_t> traced);

// -ln(1 - xi) - xi/(1 - xi) ln xi
double mode_entropy(double xi);

EntropyValue entropy_from_xi(const XiSpectrum& xi);

inline EntropyValue entanglement_entropy(const QuadraticHamiltonian& h, std::span<const std::size_t> traced) {
    return entropy_from_xi(reduce_to_xi(h, traced));
}

}  // namespace zeromode
