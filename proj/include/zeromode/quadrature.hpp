#pragma once

#include <functional>

namespace zeromode {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

/// Single 15-point Gauss-Kronrod panel; error is |K15 - G7|.
QuadratureResult gauss_kronrod15(const std::function<double(double)>& f, double a, double b);

/// Adaptive bisection with G7/K15 panels until the summed error estimate is
/// below max(abs_tol, rel_tol * |I|). Throws QuadratureError if the panel
/// budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           double abs_tol, int max_panels = 200000);

struct SemiInfiniteConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double initial_upper = 16.0;
    double upper_cap = 1048576.0;  // 2^20
};

struct SemiInfiniteResult {
    QuadratureResult integral;
    double upper = 0.0;  // last upper limit reached
};

/// Integrates over [a, inf) by covering [a, L0] and then [L, 2L] panels with
/// L doubling until a panel contributes less than abs_tol. Throws
/// QuadratureError when the doubling reaches the cap without settling.
SemiInfiniteResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                         const SemiInfiniteConfig& cfg);

}  // namespace zeromode
