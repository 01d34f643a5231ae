#include "zeromode/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "zeromode/errors.hpp"

namespace zeromode {

namespace {

// Kronrod abscissae (positive half, descending); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    QuadratureResult r;
    bool operator<(const Panel& o) const { return r.abs_error < o.r.abs_error; }
};

}  // namespace

QuadratureResult gauss_kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    QuadratureResult r;
    r.value = kronrod * half;
    r.abs_error = std::abs((kronrod - gauss) * half);
    r.evaluations = 15;
    return r;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                           double abs_tol, int max_panels) {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("integrate: tolerances must be positive");
    if (a == b) return {};

    std::priority_queue<Panel> panels;
    Panel first{a, b, gauss_kronrod15(f, a, b)};
    double total = first.r.value;
    double error = first.r.abs_error;
    int evaluations = first.r.evaluations;
    panels.push(first);

    int count = 1;
    while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (count >= max_panels)
            throw QuadratureError("integrate: panel budget exhausted on [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "]");
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel cannot be split further in floating point; accept it.
            if (panels.empty()) break;
            Panel frozen = worst;
            frozen.r.abs_error = 0.0;
            error -= worst.r.abs_error;
            panels.push(frozen);
            continue;
        }
        Panel left{worst.a, mid, gauss_kronrod15(f, worst.a, mid)};
        Panel right{mid, worst.b, gauss_kronrod15(f, mid, worst.b)};
        total += left.r.value + right.r.value - worst.r.value;
        error += left.r.abs_error + right.r.abs_error - worst.r.abs_error;
        evaluations += left.r.evaluations + right.r.evaluations;
        panels.push(left);
        panels.push(right);
        ++count;
    }

    // Re-sum to shed drift from the incremental updates.
    total = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        total += panels.top().r.value;
        error += panels.top().r.abs_error;
        panels.pop();
    }
    return {total, error, evaluations};
}

SemiInfiniteResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                         const SemiInfiniteConfig& cfg) {
    if (!(cfg.initial_upper > a)) throw DomainError("integrate_to_infinity: initial upper limit must exceed a");
    SemiInfiniteResult out;
    out.integral = integrate(f, a, cfg.initial_upper, cfg.rel_tol, cfg.abs_tol);
    double lo = cfg.initial_upper;
    while (true) {
        const double hi = 2.0 * lo;
        if (hi > cfg.upper_cap)
            throw QuadratureError("integrate_to_infinity: tail did not settle below " +
                                  std::to_string(cfg.abs_tol) + " before the upper cap " +
                                  std::to_string(cfg.upper_cap));
        const auto piece = integrate(f, lo, hi, cfg.rel_tol, cfg.abs_tol);
        out.integral.value += piece.value;
        out.integral.abs_error += piece.abs_error;
        out.integral.evaluations += piece.evaluations;
        out.upper = hi;
        if (std::abs(piece.value) < cfg.abs_tol) break;
        lo = hi;
    }
    return out;
}

}  // namespace zeromode
