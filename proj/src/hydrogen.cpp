#include "zeromode/hydrogen.hpp"

#include <cmath>
#include <numbers>

#include "zeromode/errors.hpp"

namespace zeromode {

using std::numbers::pi;

double bohr_radius(double reduced_mass, double e2, double hbar) {
    if (!(reduced_mass > 0.0) || !(e2 > 0.0) || !(hbar > 0.0))
        throw DomainError("bohr_radius: mass, charge and hbar must be positive");
    return hbar * hbar / (reduced_mass * e2);
}

double bohr_radius(const HydrogenParams& p) { return bohr_radius(p.reduced_mass(), p.e2, p.hbar); }

double com_volume(double P, double M, double omega) {
    if (P == 0.0) throw DegenerateMomentum("com_volume: atom at rest has no plane-wave normalisation volume");
    if (!(P > 0.0) || !(M > 0.0) || !(omega >= 0.0))
        throw DomainError("com_volume: need P > 0, M > 0, omega >= 0");
    if (omega == 0.0) return std::numeric_limits<double>::infinity();
    const double side = pi * P / (std::sqrt(3.0) * M * omega);
    return side * side * side;
}

SpectralScale spectral_scale(const HydrogenParams& p) {
    if (!(p.m_e > 0.0) || !(p.m_p > 0.0)) throw DomainError("spectral_scale: masses must be positive");
    SpectralScale s;
    s.a0 = bohr_radius(p);
    s.volume = com_volume(p.P, p.total_mass(), p.omega);
    s.k_e = p.m_e * p.P / (p.total_mass() * p.hbar);
    s.eta = s.a0 * s.k_e;
    s.zeta = 64.0 * pi * s.a0 * s.a0 * s.a0 / s.volume;
    return s;
}

HydrogenParams params_for_scale(double eta, double zeta) {
    if (!(eta > 0.0) || !(zeta > 0.0)) throw DomainError("params_for_scale: eta and zeta must be positive");
    HydrogenParams p;
    p.m_e = 2.0;
    p.m_p = 2.0;
    p.e2 = 1.0;
    p.hbar = 1.0;
    p.P = 2.0 * eta;
    const double side = std::cbrt(64.0 * pi / zeta);
    p.omega = pi * p.P / (std::sqrt(3.0) * p.total_mass() * side);
    return p;
}

double rho_eigenvalue_shifted(double q, double a0, double volume) {
    const double t = 1.0 + a0 * a0 * q * q;
    const double t2 = t * t;
    return (64.0 * pi * a0 * a0 * a0 / volume) / (t2 * t2);
}

double rho_eigenvalue(const Vec3& k, const HydrogenParams& p) {
    const auto s = spectral_scale(p);
    const double dx = k[0];
    const double dy = k[1];
    const double dz = k[2] - s.k_e;
    return rho_eigenvalue_shifted(std::sqrt(dx * dx + dy * dy + dz * dz), s.a0, s.volume);
}

namespace {

struct KappaTerms {
    double t_minus, t_plus;          // (1 + eta^2 (1 -+ kappa)^2)^-3
    double log_s_minus, log_s_plus;  // ln(1 + eta^2 (1 -+ kappa)^2)
};

KappaTerms kappa_terms(double kappa, double eta) {
    const double sm = 1.0 + eta * eta * (1.0 - kappa) * (1.0 - kappa);
    const double sp = 1.0 + eta * eta * (1.0 + kappa) * (1.0 + kappa);
    return {1.0 / (sm * sm * sm), 1.0 / (sp * sp * sp), std::log(sm), std::log(sp)};
}

void check_scale(double eta, double zeta) {
    if (!(eta > 0.0) || !(zeta >= 0.0)) throw DomainError("hydrogen: need eta > 0 and zeta >= 0");
}

SemiInfiniteConfig semi_infinite(const QuadratureConfig& q) {
    if (!(q.rel_tol > 0.0) || !(q.abs_tol > 0.0)) throw DomainError("QuadratureConfig: tolerances must be positive");
    return SemiInfiniteConfig{q.rel_tol, q.abs_tol, q.kappa_start, q.kappa_cap};
}

}  // namespace

double g_integrand(double kappa, double eta, double zeta) {
    check_scale(eta, zeta);
    if (!(kappa >= 0.0)) throw DomainError("g_integrand: kappa must be nonnegative");
    if (kappa == 0.0) return 0.0;
    const auto t = kappa_terms(kappa, eta);
    const double lz = std::log(zeta);
    constexpr double c = 4.0 / 3.0;
    const double bracket = t.t_minus * (lz - 4.0 * t.log_s_minus - c) - t.t_plus * (lz - 4.0 * t.log_s_plus - c);
    return -(8.0 * eta * kappa / (3.0 * pi)) * bracket;
}

double trace_integrand(double kappa, double eta) {
    check_scale(eta, 1.0);
    if (!(kappa >= 0.0)) throw DomainError("trace_integrand: kappa must be nonnegative");
    const auto t = kappa_terms(kappa, eta);
    return (8.0 * eta * kappa / (3.0 * pi)) * (t.t_minus - t.t_plus);
}

SemiInfiniteResult signed_spectral_entropy(double eta, double zeta, const QuadratureConfig& quad) {
    check_scale(eta, zeta);
    if (zeta == 0.0) throw DomainError("signed_spectral_entropy: zeta must be positive");
    return integrate_to_infinity([&](double k) { return g_integrand(k, eta, zeta); }, 0.0, semi_infinite(quad));
}

IntegratedEntropy hydrogen_entropy(double eta, double zeta, const QuadratureConfig& quad) {
    check_scale(eta, zeta);
    IntegratedEntropy out;
    if (zeta == 0.0) {
        out.entropy = EntropyValue::divergent(kCauseZeroMode);
        return out;
    }
    const auto r = signed_spectral_entropy(eta, zeta, quad);
    if (!std::isfinite(r.integral.value)) {
        out.entropy = EntropyValue::divergent(kCauseQuadratureOverflow);
        return out;
    }
    // The spectral entropy of a continuous density can dip below zero when
    // zeta is large (rho above 1); such values are outside the physical regime.
    if (r.integral.value < 0.0)
        throw DomainError("hydrogen_entropy: negative spectral entropy, zeta too large for a physical state");
    out.entropy = EntropyValue::finite(r.integral.value);
    out.abs_error = r.integral.abs_error;
    out.kappa_max = r.upper;
    return out;
}

IntegratedEntropy hydrogen_entropy_radial(double zeta, const QuadratureConfig& quad) {
    check_scale(1.0, zeta);
    IntegratedEntropy out;
    if (zeta == 0.0) {
        out.entropy = EntropyValue::divergent(kCauseZeroMode);
        return out;
    }
    auto integrand = [](double u) {
        const double t = 1.0 + u * u;
        const double t2 = t * t;
        return u * u * std::log(t) / (t2 * t2);
    };
    const auto r = integrate_to_infinity(integrand, 0.0, semi_infinite(quad));
    const double s = -std::log(zeta) + (128.0 / pi) * r.integral.value;
    if (s < 0.0) throw DomainError("hydrogen_entropy_radial: negative spectral entropy, zeta too large");
    out.entropy = EntropyValue::finite(s);
    out.abs_error = (128.0 / pi) * r.integral.abs_error;
    out.kappa_max = r.upper;
    return out;
}

double spectral_trace(const HydrogenParams& p, const QuadratureConfig& quad) {
    const auto s = spectral_scale(p);
    if (!std::isfinite(s.volume)) throw DomainError("spectral_trace: infinite volume");
    const double measure = s.volume / std::pow(2.0 * pi, 3);
    // q = u / a0
    auto integrand = [&](double u) {
        const double q = u / s.a0;
        return q * q * rho_eigenvalue_shifted(q, s.a0, s.volume) / s.a0;
    };
    const auto r = integrate_to_infinity(integrand, 0.0, semi_infinite(quad));
    return measure * 4.0 * pi * r.integral.value;
}

double spectral_trace_kappa(double eta, const QuadratureConfig& quad) {
    const auto r = integrate_to_infinity([&](double k) { return trace_integrand(k, eta); }, 0.0, semi_infinite(quad));
    return r.integral.value;
}

double rydberg_binding(int n, double m, double e2, double hbar) {
    if (n < 1) throw DomainError("rydberg_binding: n must be >= 1");
    if (!(m > 0.0) || !(e2 > 0.0) || !(hbar > 0.0)) throw DomainError("rydberg_binding: m, e2, hbar must be positive");
    const double nn = static_cast<double>(n);
    return m * e2 * e2 / (2.0 * nn * nn * hbar * hbar);
}

const char* to_string(MappingVariant v) {
    switch (v) {
        case MappingVariant::four_dim_oscillator: return "four_dim_oscillator";
        case MappingVariant::isotonic: return "isotonic";
    }
    return "?";
}

double mapping_beta(double binding, double m, double hbar, MappingVariant variant) {
    if (!(binding > 0.0) || !(m > 0.0) || !(hbar > 0.0)) throw DomainError("mapping_beta: B, m, hbar must be positive");
    switch (variant) {
        case MappingVariant::four_dim_oscillator: {
            const double omega_t = std::sqrt(2.0 * binding / m);
            return 2.0 * m * omega_t / hbar;
        }
        case MappingVariant::isotonic: {
            const double omega_t = std::sqrt(8.0 * binding / m);
            return m * omega_t / hbar;
        }
    }
    throw DomainError("mapping_beta: unknown variant");
}

MappingReport mapping_equivalence_check(const HydrogenParams& p, double tol, const QuadratureConfig& quad) {
    const auto s = spectral_scale(p);
    const double m = p.reduced_mass();
    const double binding = rydberg_binding(1, m, p.e2, p.hbar);

    MappingReport report;
    report.entropy = signed_spectral_entropy(s.eta, s.zeta, quad).integral.value;
    report.equivalent = true;

    // Sample wave vectors around the peak, in units of 1/a0.
    const std::array<Vec3, 5> samples = {Vec3{0.0, 0.0, s.k_e}, Vec3{1.0 / s.a0, 0.0, s.k_e},
                                         Vec3{0.3 / s.a0, -0.7 / s.a0, 0.0}, Vec3{2.0 / s.a0, 1.0 / s.a0, -s.k_e},
                                         Vec3{0.0, 5.0 / s.a0, 3.0 * s.k_e}};

    for (auto variant : {MappingVariant::four_dim_oscillator, MappingVariant::isotonic}) {
        MappingReport::Entry e;
        e.variant = variant;
        const double beta = mapping_beta(binding, m, p.hbar, variant);
        const double a0_mapped = 2.0 / beta;
        e.beta_a0 = beta * s.a0;
        for (const auto& k : samples) {
            const double dz = k[2] - s.k_e;
            const double q = std::sqrt(k[0] * k[0] + k[1] * k[1] + dz * dz);
            const double ref = rho_eigenvalue_shifted(q, s.a0, s.volume);
            const double mapped = rho_eigenvalue_shifted(q, a0_mapped, s.volume);
            e.max_spectral_diff = std::max(e.max_spectral_diff, std::abs(mapped - ref) / ref);
        }
        const double eta_m = a0_mapped * s.k_e;
        const double zeta_m = 64.0 * std::numbers::pi * a0_mapped * a0_mapped * a0_mapped / s.volume;
        e.entropy_diff = std::abs(signed_spectral_entropy(eta_m, zeta_m, quad).integral.value - report.entropy);
        if (std::abs(e.beta_a0 - 2.0) > 1e-12 || e.max_spectral_diff > 1e-12 || e.entropy_diff > tol)
            report.equivalent = false;
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace zeromode
