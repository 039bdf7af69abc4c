#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "sihins/errors.hpp"
#include "sihins/linalg.hpp"
#include "sihins/model.hpp"

namespace sihins {

/// Half-width of the band around R0 = 1 treated as the threshold itself.
inline constexpr double kThresholdBand = 1e-12;
/// Agreement required between the closed-form and matrix-derived
/// characteristic coefficients.
inline constexpr double kCrossCheckTolerance = 1e-9;

enum class EquilibriumKind { DiseaseFree, Endemic };

enum class Stability { Stable, Unstable, NonHyperbolic };

struct EquilibriumPoint {
    double S = 0.0;
    double I = 0.0;
    double H = 0.0;
    EquilibriumKind kind = EquilibriumKind::DiseaseFree;
};

/// New-infection and transition matrices of the infected block (I, H),
/// both evaluated at the disease-free equilibrium.
struct NextGenDecomposition {
    Mat2 F{};
    Mat2 V{};
    Mat2 FVinv{};
};

struct DfeClassification {
    std::array<double, 3> eigenvalues{};  // -mu1, -(alpha1+mu2), (alpha2+gamma+mu2)(R0-1)
    Stability verdict = Stability::Stable;
};

/// Routh-Hurwitz data for det(rI - J(e_E)) = r^3 + A1 r^2 + A2 r + A3.
struct EeClassification {
    std::array<double, 3> coefficients{};
    double margin = 0.0;  // A1*A2 - A3
    Stability verdict = Stability::Stable;
};

struct ContinuousStabilityReport {
    double r0 = 0.0;
    EquilibriumPoint dfe;
    DfeClassification dfe_stability;
    std::optional<EquilibriumPoint> ee;
    std::optional<EeClassification> ee_stability;
};

/// Total removal rate out of I.
inline double infected_exit_rate(const EpidemicParams& p) noexcept {
    return p.alpha2 + p.gamma + p.mu2;
}

inline double basic_reproduction_number(const EpidemicParams& p) noexcept {
    return p.beta * p.lambda / (p.mu1 * infected_exit_rate(p));
}

inline bool at_threshold(double r0) noexcept { return std::abs(r0 - 1.0) <= kThresholdBand; }

inline NextGenDecomposition next_generation(const EpidemicParams& p) {
    NextGenDecomposition ng;
    ng.F = {{{p.beta * p.lambda / p.mu1, 0.0}, {0.0, 0.0}}};
    ng.V = {{{infected_exit_rate(p), 0.0}, {-p.gamma, p.alpha1 + p.mu2}}};
    ng.FVinv = multiply(ng.F, inverse(ng.V));
    return ng;
}

inline EquilibriumPoint disease_free_equilibrium(const EpidemicParams& p) noexcept {
    return {p.lambda / p.mu1, 0.0, 0.0, EquilibriumKind::DiseaseFree};
}

/// Present iff R0 >= 1 (within the threshold band). At R0 = 1 it
/// coincides with the disease-free equilibrium.
inline std::optional<EquilibriumPoint> endemic_equilibrium(const EpidemicParams& p) {
    const double r0 = basic_reproduction_number(p);
    if (r0 < 1.0 && !at_threshold(r0)) return std::nullopt;
    if (at_threshold(r0)) {
        return EquilibriumPoint{p.lambda / p.mu1, 0.0, 0.0, EquilibriumKind::Endemic};
    }
    const double excess = 1.0 - 1.0 / r0;
    const double denom = p.mu2 * (p.alpha1 + p.gamma + p.mu2);
    return EquilibriumPoint{
        infected_exit_rate(p) / p.beta,
        p.lambda * (p.alpha1 + p.mu2) / denom * excess,
        p.lambda * p.gamma / denom * excess,
        EquilibriumKind::Endemic,
    };
}

/// Jacobian of (dS, dI, dH) with respect to (S, I, H).
inline Mat3 jacobian(const EpidemicParams& p, double S, double I, double H) noexcept {
    (void)H;  // the field is linear in H
    return {{
        {-p.beta * I - p.mu1, -p.beta * S + p.alpha2, p.alpha1},
        {p.beta * I, p.beta * S - infected_exit_rate(p), 0.0},
        {0.0, p.gamma, -p.alpha1 - p.mu2},
    }};
}

inline Mat3 jacobian(const EpidemicParams& p, const EquilibriumPoint& e) noexcept {
    return jacobian(p, e.S, e.I, e.H);
}

inline DfeClassification classify_dfe(const EpidemicParams& p) {
    const double r0 = basic_reproduction_number(p);
    DfeClassification out;
    out.eigenvalues = {-p.mu1, -(p.alpha1 + p.mu2), infected_exit_rate(p) * (r0 - 1.0)};
    if (at_threshold(r0)) {
        out.eigenvalues[2] = 0.0;
        out.verdict = Stability::NonHyperbolic;
    } else {
        out.verdict = r0 < 1.0 ? Stability::Stable : Stability::Unstable;
    }
    return out;
}

/// Closed-form Routh-Hurwitz coefficients in terms of excess = R0 - 1.
inline std::array<double, 3> endemic_coefficients_closed_form(const EpidemicParams& p) {
    const double x = basic_reproduction_number(p) - 1.0;
    const double a1 = p.alpha1, g = p.gamma, m1 = p.mu1, m2 = p.mu2;
    const double bl = p.beta * p.lambda;
    const double denom = m2 * (a1 + g + m2) * (x + 1.0);

    const double A1 = (((a1 * a1 + (g + m1) * a1 + bl + m1 * g) * x + (a1 + m1) * (a1 + g)) * m2 +
                       (x + 1.0) * m2 * m2 * (m2 + g + 2.0 * a1 + m1) + a1 * bl * x) /
                      denom;
    const double A2 = (a1 + m2) *
                      ((x + 1.0) * m1 * m2 * m2 +
                       (((a1 + g) * m1 + 2.0 * bl) * x + (a1 + g) * m1) * m2 + x * bl * (a1 + g)) /
                      denom;
    const double A3 = bl * (a1 + m2) * x / (x + 1.0);
    return {A1, A2, A3};
}

/// Routh-Hurwitz classification of the endemic equilibrium; absent when
/// R0 <= 1. Throws InternalInconsistency if the closed-form coefficients
/// disagree with those of the Jacobian's characteristic polynomial.
inline std::optional<EeClassification> classify_ee(const EpidemicParams& p) {
    const double r0 = basic_reproduction_number(p);
    if (r0 <= 1.0 || at_threshold(r0)) return std::nullopt;

    const auto ee = endemic_equilibrium(p);
    const auto closed = endemic_coefficients_closed_form(p);
    const auto from_matrix = characteristic_coefficients(jacobian(p, *ee));
    for (std::size_t k = 0; k < 3; ++k) {
        if (!relatively_close(closed[k], from_matrix[k], kCrossCheckTolerance)) {
            throw InternalInconsistency("endemic coefficient A" + std::to_string(k + 1) +
                                        " disagrees with the Jacobian characteristic polynomial");
        }
    }

    EeClassification out;
    out.coefficients = closed;
    out.margin = closed[0] * closed[1] - closed[2];
    if (closed[0] > 0.0 && closed[2] > 0.0 && out.margin > 0.0) {
        out.verdict = Stability::Stable;
    } else if (closed[2] == 0.0 || out.margin == 0.0) {
        out.verdict = Stability::NonHyperbolic;
    } else {
        out.verdict = Stability::Unstable;
    }
    return out;
}

inline ContinuousStabilityReport analyze_continuous(const EpidemicParams& p) {
    ContinuousStabilityReport r;
    r.r0 = basic_reproduction_number(p);
    r.dfe = disease_free_equilibrium(p);
    r.dfe_stability = classify_dfe(p);
    r.ee = endemic_equilibrium(p);
    r.ee_stability = classify_ee(p);
    return r;
}

inline const char* to_string(Stability s) noexcept {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        case Stability::NonHyperbolic: return "non-hyperbolic";
    }
    return "?";
}

}  // namespace sihins
