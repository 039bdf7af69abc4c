#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sihins/actuarial.hpp"
#include "sihins/continuous_analysis.hpp"
#include "sihins/errors.hpp"
#include "sihins/model.hpp"

namespace sihins {

/// The thirteen parameters a sensitivity index can be taken against.
enum class Parameter {
    Lambda,
    Alpha1,
    Alpha2,
    Beta,
    Gamma,
    Mu1,
    Mu2,
    Interest,
    Omega,
    Phi,
    BenefitH,
    BenefitD,
    BenefitDstar,
};

inline constexpr std::size_t kParameterCount = 13;

inline constexpr std::array<Parameter, kParameterCount> kAllParameters = {
    Parameter::Lambda, Parameter::Alpha1,   Parameter::Alpha2, Parameter::Beta,
    Parameter::Gamma,  Parameter::Mu1,      Parameter::Mu2,    Parameter::Interest,
    Parameter::Omega,  Parameter::Phi,      Parameter::BenefitH, Parameter::BenefitD,
    Parameter::BenefitDstar,
};

enum class Quantity { R0, GrossPremium, Capital, EndProfit };

inline constexpr std::size_t kQuantityCount = 4;

inline constexpr std::array<Quantity, kQuantityCount> kAllQuantities = {
    Quantity::R0, Quantity::GrossPremium, Quantity::Capital, Quantity::EndProfit};

/// Config key of each parameter.
inline constexpr std::string_view name(Parameter p) noexcept {
    constexpr std::array<std::string_view, kParameterCount> names = {
        "lambda", "alpha1",     "alpha2",    "beta",      "gamma",     "mu1",          "mu2",
        "interest_i", "omega",  "phi",       "benefit_H", "benefit_D", "benefit_Dstar",
    };
    return names[static_cast<std::size_t>(p)];
}

inline constexpr std::string_view name(Quantity q) noexcept {
    constexpr std::array<std::string_view, kQuantityCount> names = {"R0", "P_gross", "Gamma",
                                                                    "Pi_end"};
    return names[static_cast<std::size_t>(q)];
}

inline std::optional<Parameter> parameter_from_name(std::string_view key) noexcept {
    for (Parameter p : kAllParameters)
        if (name(p) == key) return p;
    return std::nullopt;
}

/// Signed relative perturbations. Zero entries are accepted but carry
/// no information, so they are skipped by the estimator.
struct PerturbationSet {
    std::vector<double> psis{-0.10, -0.05, 0.0, 0.05, 0.10};

    std::vector<double> nonzero() const {
        std::vector<double> out;
        for (double psi : psis)
            if (psi != 0.0) out.push_back(psi);
        if (out.empty()) throw ValidationError("perturbation set has no nonzero entry");
        return out;
    }
};

/// Reference to the field of `sc` that parameter p names.
template <typename ScenarioRef>
auto& field(ScenarioRef& sc, Parameter p) {
    switch (p) {
        case Parameter::Lambda: return sc.epidemic.lambda;
        case Parameter::Alpha1: return sc.epidemic.alpha1;
        case Parameter::Alpha2: return sc.epidemic.alpha2;
        case Parameter::Beta: return sc.epidemic.beta;
        case Parameter::Gamma: return sc.epidemic.gamma;
        case Parameter::Mu1: return sc.epidemic.mu1;
        case Parameter::Mu2: return sc.epidemic.mu2;
        case Parameter::Interest: return sc.policy.interest_i;
        case Parameter::Omega: return sc.policy.omega;
        case Parameter::Phi: return sc.policy.phi;
        case Parameter::BenefitH: return sc.policy.benefit_H;
        case Parameter::BenefitD: return sc.policy.benefit_D;
        case Parameter::BenefitDstar: return sc.policy.benefit_Dstar;
    }
    throw ValidationError("unknown parameter");
}

/// Copy of `sc` with parameter p scaled by (1 + psi).
inline Scenario perturb(const Scenario& sc, Parameter p, double psi) {
    Scenario out = sc;
    field(out, p) *= 1.0 + psi;
    try {
        validate(out);
    } catch (const ValidationError& e) {
        throw InvalidPerturbation(std::string(name(p)) + " scaled by " + std::to_string(1.0 + psi) +
                                  ": " + e.what());
    }
    return out;
}

/// All four quantities from one simulate + price run.
struct QuantityValues {
    std::array<double, kQuantityCount> values{};
    std::size_t t_min = 0;

    double operator[](Quantity q) const { return values[static_cast<std::size_t>(q)]; }
};

inline QuantityValues evaluate_all(const Scenario& sc) {
    const PricingReport pr = price(sc);
    return {{basic_reproduction_number(sc.epidemic), pr.p_gross, pr.gamma_capital, pr.pi_end},
            pr.t_min};
}

inline double evaluate_quantity(const Scenario& sc, Quantity q) {
    if (q == Quantity::R0) return basic_reproduction_number(sc.epidemic);
    return evaluate_all(sc)[q];
}

/// Mean of rho(psi)/psi over the nonzero psi, where rho is the relative
/// change of q when p is scaled by 1 + psi.
inline double sensitivity_index(const Scenario& sc, Quantity q, Parameter p,
                                const PerturbationSet& psis = {}) {
    const double base = evaluate_quantity(sc, q);
    if (base == 0.0) {
        throw ZeroBaseline(std::string(name(q)) + " is zero at baseline; index undefined");
    }
    const auto used = psis.nonzero();
    double sum = 0.0;
    for (double psi : used) {
        const double moved = evaluate_quantity(perturb(sc, p, psi), q);
        sum += (moved - base) / base / psi;
    }
    return sum / static_cast<double>(used.size());
}

/// Exact elasticities of R0 = beta*lambda / (mu1*(alpha2+gamma+mu2)).
inline std::array<double, kParameterCount> analytic_r0_sensitivities(const EpidemicParams& p) {
    std::array<double, kParameterCount> out{};
    const double exit = infected_exit_rate(p);
    auto at = [&](Parameter k) -> double& { return out[static_cast<std::size_t>(k)]; };
    at(Parameter::Lambda) = 1.0;
    at(Parameter::Beta) = 1.0;
    at(Parameter::Mu1) = -1.0;
    at(Parameter::Alpha2) = -p.alpha2 / exit;
    at(Parameter::Gamma) = -p.gamma / exit;
    at(Parameter::Mu2) = -p.mu2 / exit;
    return out;
}

struct SensitivityTable {
    std::string scenario;
    std::array<std::array<double, kQuantityCount>, kParameterCount> entries{};
    /// Set where some perturbation moved the month of minimum profit, so
    /// the capital index straddles a jump.
    std::array<bool, kParameterCount> t_min_shifted{};

    double at(Quantity q, Parameter p) const {
        return entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }
};

/// Fills all 4 x 13 cells. Each parameter row is computed on its own
/// thread; every run is an independent simulate + price.
inline SensitivityTable sensitivity_table(const Scenario& sc, const PerturbationSet& psis = {},
                                          std::string tag = {}) {
    const QuantityValues base = evaluate_all(sc);
    for (Quantity q : kAllQuantities) {
        if (base[q] == 0.0) {
            throw ZeroBaseline(std::string(name(q)) + " is zero at baseline; index undefined");
        }
    }
    const auto used = psis.nonzero();

    struct Row {
        std::array<double, kQuantityCount> values{};
        bool shifted = false;
    };
    auto fill_row = [&](Parameter p) {
        Row row;
        for (double psi : used) {
            const QuantityValues moved = evaluate_all(perturb(sc, p, psi));
            for (std::size_t k = 0; k < kQuantityCount; ++k) {
                row.values[k] += (moved.values[k] - base.values[k]) / base.values[k] / psi;
            }
            row.shifted = row.shifted || moved.t_min != base.t_min;
        }
        for (double& v : row.values) v /= static_cast<double>(used.size());
        return row;
    };

    std::vector<std::future<Row>> rows;
    rows.reserve(kParameterCount);
    for (Parameter p : kAllParameters) rows.push_back(std::async(std::launch::async, fill_row, p));

    SensitivityTable table;
    table.scenario = std::move(tag);
    for (std::size_t k = 0; k < kParameterCount; ++k) {
        const Row row = rows[k].get();
        table.entries[k] = row.values;
        table.t_min_shifted[k] = row.shifted;
    }
    return table;
}

}  // namespace sihins
