#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sihins/errors.hpp"

/// SIH epidemic model with a health-insurance layer.
///
/// Time is measured in months. S, I and H are the susceptible, infected
/// (non-hospitalised) and hospitalised head counts; D and Dstar are the
/// cumulative natural deaths and deaths by disease, which drive the
/// one-time death benefits.
namespace sihins {

/// The seven epidemiological rates. All must be strictly positive.
struct EpidemicParams {
    double lambda = 0.0;  ///< births, individuals/month
    double alpha1 = 0.0;  ///< treatment of hospitalised, 1/month
    double alpha2 = 0.0;  ///< treatment of non-hospitalised infected, 1/month
    double beta = 0.0;    ///< incidence, 1/(individual*month)
    double gamma = 0.0;   ///< hospitalisation, 1/month
    double mu1 = 0.0;     ///< natural death, 1/month
    double mu2 = 0.0;     ///< death by disease, 1/month

    bool operator==(const EpidemicParams&) const = default;
};

/// Insurance horizon, step size and financial constants.
struct PolicyParams {
    int horizon_T = 0;          ///< months
    double dt = 0.0;            ///< months; 1/dt must be a whole number
    double interest_i = 0.0;    ///< monthly
    double omega = 0.0;         ///< operational-cost surcharge
    double phi = 0.0;           ///< profit surcharge
    double benefit_H = 0.0;     ///< $ per hospitalised individual per month
    double benefit_D = 0.0;     ///< $ per natural death
    double benefit_Dstar = 0.0; ///< $ per death by disease

    double discount() const noexcept { return 1.0 / (1.0 + interest_i); }

    bool operator==(const PolicyParams&) const = default;
};

struct SihState {
    double S = 0.0;
    double I = 0.0;
    double H = 0.0;
    double D = 0.0;
    double Dstar = 0.0;

    bool operator==(const SihState&) const = default;
};

/// Time derivative of every SihState field.
struct Derivative {
    double dS = 0.0;
    double dI = 0.0;
    double dH = 0.0;
    double dD = 0.0;
    double dDstar = 0.0;
};

/// How one step of the discrete recursion is evaluated.
///
/// Simultaneous is the textbook forward Euler map: every component is
/// advanced from the start-of-step state. Sequential advances S first,
/// then I from the updated S, then H from the updated I; D and Dstar use
/// start-of-step values. Both are first order and share the same fixed
/// points. The shipped scenarios use Sequential; it is the variant the
/// reference pricing figures were computed with.
enum class StepScheme { Simultaneous, Sequential };

/// Parameters plus initial state plus the stepping scheme.
struct Scenario {
    EpidemicParams epidemic;
    PolicyParams policy;
    SihState initial;
    StepScheme scheme = StepScheme::Sequential;

    bool operator==(const Scenario&) const = default;
};

inline constexpr double kGridTolerance = 1e-9;

/// Number of Euler steps per month, i.e. 1/dt. Throws ValidationError
/// unless 1/dt is a positive integer (to 1e-9).
inline std::size_t steps_per_month(double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ValidationError("dt must be positive");
    }
    const double inv = 1.0 / dt;
    const double rounded = std::round(inv);
    if (rounded < 1.0 || std::abs(inv - rounded) > kGridTolerance * rounded) {
        throw ValidationError("1/dt must be a positive integer (dt = " + std::to_string(dt) + ")");
    }
    return static_cast<std::size_t>(rounded);
}

/// States on the uniform grid t_n = n * dt. Index n covers months
/// n / steps_per_month exactly because 1/dt is an integer.
struct Trajectory {
    double dt = 0.0;
    std::vector<SihState> states;

    std::size_t steps_per_month() const { return sihins::steps_per_month(dt); }

    /// Number of whole months covered.
    std::size_t months() const {
        const std::size_t k = steps_per_month();
        return states.empty() ? 0 : (states.size() - 1) / k;
    }

    /// State at the end of integer month t.
    const SihState& at_month(std::size_t t) const { return states.at(t * steps_per_month()); }
};

inline void validate(const EpidemicParams& p) {
    const std::pair<const char*, double> fields[] = {
        {"lambda", p.lambda}, {"alpha1", p.alpha1}, {"alpha2", p.alpha2}, {"beta", p.beta},
        {"gamma", p.gamma},   {"mu1", p.mu1},       {"mu2", p.mu2},
    };
    for (const auto& [name, value] : fields) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw ValidationError(std::string(name) + " must be strictly positive");
        }
    }
}

inline void validate(const PolicyParams& pol) {
    if (pol.horizon_T < 1) throw ValidationError("T must be at least 1");
    steps_per_month(pol.dt);
    if (!(pol.interest_i > -1.0) || !std::isfinite(pol.interest_i)) {
        throw ValidationError("interest_i must exceed -1");
    }
    const std::pair<const char*, double> nonneg[] = {
        {"omega", pol.omega},         {"phi", pol.phi},
        {"benefit_H", pol.benefit_H}, {"benefit_D", pol.benefit_D},
        {"benefit_Dstar", pol.benefit_Dstar},
    };
    for (const auto& [name, value] : nonneg) {
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw ValidationError(std::string(name) + " must be nonnegative");
        }
    }
}

inline void validate(const SihState& s) {
    const std::pair<const char*, double> fields[] = {
        {"S0", s.S}, {"I0", s.I}, {"H0", s.H}, {"D0", s.D}, {"Dstar0", s.Dstar},
    };
    for (const auto& [name, value] : fields) {
        if (!(value >= 0.0) || !std::isfinite(value)) {
            throw ValidationError(std::string(name) + " must be nonnegative");
        }
    }
}

inline void validate(const Scenario& sc) {
    validate(sc.epidemic);
    validate(sc.policy);
    validate(sc.initial);
}

/// Right-hand side of the five-equation system.
inline Derivative vector_field(const EpidemicParams& p, const SihState& s) noexcept {
    const double incidence = p.beta * s.S * s.I;
    return {
        .dS = p.lambda - incidence + p.alpha1 * s.H + p.alpha2 * s.I - p.mu1 * s.S,
        .dI = incidence - (p.alpha2 + p.gamma + p.mu2) * s.I,
        .dH = p.gamma * s.I - (p.alpha1 + p.mu2) * s.H,
        .dD = p.mu1 * s.S,
        .dDstar = p.mu2 * s.I + p.mu2 * s.H,
    };
}

inline constexpr double kBetaDiseaseFree = 0.00100;
inline constexpr double kBetaEndemic = 0.00300;

/// Shared parameter set; beta is left at the disease-free value.
inline Scenario baseline_scenario() {
    return Scenario{
        .epidemic = {.lambda = 4.21492, .alpha1 = 0.05, .alpha2 = 0.05, .beta = kBetaDiseaseFree,
                     .gamma = 0.66, .mu1 = 0.00745, .mu2 = 0.01829},
        .policy = {.horizon_T = 500, .dt = 0.05, .interest_i = 0.00233, .omega = 0.1,
                   .phi = 0.05, .benefit_H = 2000.0, .benefit_D = 40000.0,
                   .benefit_Dstar = 50000.0},
        .initial = {.S = 2999.0, .I = 1.0, .H = 0.0, .D = 0.0, .Dstar = 0.0},
        .scheme = StepScheme::Sequential,
    };
}

struct ScenarioPair {
    Scenario disease_free;
    Scenario endemic;
};

/// The two shipped scenarios. They differ only in beta.
inline ScenarioPair default_scenarios() {
    ScenarioPair out{baseline_scenario(), baseline_scenario()};
    out.endemic.epidemic.beta = kBetaEndemic;
    return out;
}

inline const char* to_string(StepScheme scheme) noexcept {
    return scheme == StepScheme::Simultaneous ? "simultaneous" : "sequential";
}

}  // namespace sihins
