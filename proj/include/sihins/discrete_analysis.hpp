#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "sihins/continuous_analysis.hpp"
#include "sihins/errors.hpp"
#include "sihins/linalg.hpp"
#include "sihins/model.hpp"

// Local stability of the simultaneous forward Euler map
//   x_{n+1} = x_n + dt * f(x_n)
// at the two equilibria it shares with the continuous model.
namespace sihins {

/// Distance from the unit circle treated as "on" it.
inline constexpr double kUnitCircleTolerance = 1e-10;

struct SchurCohnConditions {
    double cond_plus = 0.0;   // 1 + A1 + A2 + A3
    double cond_minus = 0.0;  // 1 - A1 + A2 - A3
    double cond_inner = 0.0;  // (1 - A3^2) - |A2 - A1*A3|
};

enum class EeDiscreteVerdict {
    StableBySchurCohn,  // the sufficient conditions hold
    StableByRootCheck,  // conditions fail but every root has modulus < 1
    Unstable,
    NonHyperbolic,
};

struct DfeDiscreteClassification {
    std::array<double, 3> eigenvalues{};
    /// Largest dt keeping every eigenvalue inside the unit circle when
    /// R0 < 1; the R0 term is omitted otherwise.
    double dt_threshold = 0.0;
    Stability verdict = Stability::Stable;
};

struct EeDiscreteClassification {
    std::array<double, 3> coefficients{};  // det(rI - Jbar) = r^3 + A1 r^2 + A2 r + A3
    SchurCohnConditions schur_cohn;
    bool schur_cohn_sufficient = false;
    std::array<std::complex<double>, 3> roots{};
    double max_root_modulus = 0.0;
    EeDiscreteVerdict verdict = EeDiscreteVerdict::Unstable;
};

struct DiscreteStabilityReport {
    double dt = 0.0;
    DfeDiscreteClassification dfe;
    std::optional<EeDiscreteClassification> ee;
};

inline Mat3 discrete_jacobian(const EpidemicParams& p, double dt, double S, double I, double H) {
    const Mat3 j = jacobian(p, S, I, H);
    Mat3 out = identity<3>();
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out[r][c] += dt * j[r][c];
    return out;
}

inline Stability classify_moduli(double max_modulus, double min_distance_to_circle) {
    if (min_distance_to_circle <= kUnitCircleTolerance) return Stability::NonHyperbolic;
    return max_modulus < 1.0 ? Stability::Stable : Stability::Unstable;
}

inline DfeDiscreteClassification classify_dfe_discrete(const EpidemicParams& p, double dt) {
    const double r0 = basic_reproduction_number(p);
    const double exit = infected_exit_rate(p);
    const double i_rate = at_threshold(r0) ? 0.0 : exit * (1.0 - r0);

    DfeDiscreteClassification out;
    out.eigenvalues = {1.0 - p.mu1 * dt, 1.0 - i_rate * dt, 1.0 - (p.alpha1 + p.mu2) * dt};

    out.dt_threshold = std::min(2.0 / p.mu1, 2.0 / (p.alpha1 + p.mu2));
    if (r0 < 1.0 && !at_threshold(r0)) out.dt_threshold = std::min(out.dt_threshold, 2.0 / i_rate);

    double max_modulus = 0.0;
    double closest = std::numeric_limits<double>::infinity();
    for (double ev : out.eigenvalues) {
        max_modulus = std::max(max_modulus, std::abs(ev));
        closest = std::min(closest, std::abs(std::abs(ev) - 1.0));
    }
    out.verdict = classify_moduli(max_modulus, closest);
    return out;
}

/// Closed-form characteristic coefficients of the Euler map's Jacobian at
/// the endemic equilibrium, evaluated in extended precision because
/// 1 + A1 + A2 + A3 is O(dt^3) while each term is O(1).
inline std::array<long double, 3> endemic_discrete_coefficients(const EpidemicParams& p, double dt,
                                                                double I_E) {
    const long double h = dt;
    const long double bI = static_cast<long double>(p.beta) * I_E;
    const long double a1 = p.alpha1, g = p.gamma, m1 = p.mu1, m2 = p.mu2;
    const long double lin = bI + a1 + m1 + m2;
    const long double quad = bI * (a1 + g + 2.0L * m2) + m1 * (a1 + m2);
    const long double cub = bI * m2 * (a1 + g + m2);
    return {
        lin * h - 3.0L,
        quad * h * h - 2.0L * lin * h + 3.0L,
        cub * h * h * h - quad * h * h + lin * h - 1.0L,
    };
}

/// Absent when R0 <= 1. Throws InternalInconsistency if the closed-form
/// coefficients disagree with the characteristic polynomial of I + dt*J.
inline std::optional<EeDiscreteClassification> classify_ee_discrete(const EpidemicParams& p,
                                                                    double dt) {
    const double r0 = basic_reproduction_number(p);
    if (r0 <= 1.0 || at_threshold(r0)) return std::nullopt;

    const auto ee = *endemic_equilibrium(p);
    const auto a = endemic_discrete_coefficients(p, dt, ee.I);
    const auto from_matrix =
        characteristic_coefficients<long double>(discrete_jacobian(p, dt, ee.S, ee.I, ee.H));
    for (std::size_t k = 0; k < 3; ++k) {
        if (!relatively_close(static_cast<double>(a[k]), static_cast<double>(from_matrix[k]),
                              kCrossCheckTolerance)) {
            throw InternalInconsistency("discrete endemic coefficient A" + std::to_string(k + 1) +
                                        " disagrees with the Euler-map characteristic polynomial");
        }
    }

    EeDiscreteClassification out;
    for (std::size_t k = 0; k < 3; ++k) out.coefficients[k] = static_cast<double>(a[k]);
    out.schur_cohn.cond_plus = static_cast<double>(1.0L + a[0] + a[1] + a[2]);
    out.schur_cohn.cond_minus = static_cast<double>(1.0L - a[0] + a[1] - a[2]);
    out.schur_cohn.cond_inner =
        static_cast<double>((1.0L - a[2] * a[2]) - std::abs(a[1] - a[0] * a[2]));
    out.schur_cohn_sufficient = out.schur_cohn.cond_plus > 0.0 &&
                                out.schur_cohn.cond_minus > 0.0 && out.schur_cohn.cond_inner > 0.0;

    out.roots = cubic_roots(a[0], a[1], a[2]);
    double closest = std::numeric_limits<double>::infinity();
    for (const auto& root : out.roots) {
        const double modulus = std::abs(root);
        out.max_root_modulus = std::max(out.max_root_modulus, modulus);
        closest = std::min(closest, std::abs(modulus - 1.0));
    }

    if (out.schur_cohn_sufficient) {
        out.verdict = EeDiscreteVerdict::StableBySchurCohn;
    } else {
        switch (classify_moduli(out.max_root_modulus, closest)) {
            case Stability::Stable: out.verdict = EeDiscreteVerdict::StableByRootCheck; break;
            case Stability::Unstable: out.verdict = EeDiscreteVerdict::Unstable; break;
            case Stability::NonHyperbolic: out.verdict = EeDiscreteVerdict::NonHyperbolic; break;
        }
    }
    return out;
}

inline DiscreteStabilityReport analyze_discrete(const EpidemicParams& p, double dt) {
    return {dt, classify_dfe_discrete(p, dt), classify_ee_discrete(p, dt)};
}

inline const char* to_string(EeDiscreteVerdict v) noexcept {
    switch (v) {
        case EeDiscreteVerdict::StableBySchurCohn: return "stable (Schur-Cohn)";
        case EeDiscreteVerdict::StableByRootCheck: return "stable (root check)";
        case EeDiscreteVerdict::Unstable: return "unstable";
        case EeDiscreteVerdict::NonHyperbolic: return "non-hyperbolic";
    }
    return "?";
}

}  // namespace sihins
