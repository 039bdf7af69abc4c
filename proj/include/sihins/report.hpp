#pragma once

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "sihins/actuarial.hpp"
#include "sihins/config.hpp"
#include "sihins/continuous_analysis.hpp"
#include "sihins/discrete_analysis.hpp"
#include "sihins/model.hpp"
#include "sihins/sensitivity.hpp"

// CSV emission and fixed-layout text tables. CSV values use 17
// significant digits; text tables round for display only.
namespace sihins {

inline constexpr std::string_view kTrajectoryHeader = "t,S,I,H,D,Dstar";
inline constexpr std::string_view kFinancialHeader = "month,profit_pv,asset_pv";
inline constexpr std::string_view kSensitivityHeader = "parameter,R0,P_gross,Gamma,Pi_end";

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << kTrajectoryHeader << '\n';
    for (std::size_t n = 0; n < traj.states.size(); ++n) {
        const SihState& s = traj.states[n];
        os << format_double(static_cast<double>(n) * traj.dt) << ',' << format_double(s.S) << ','
           << format_double(s.I) << ',' << format_double(s.H) << ',' << format_double(s.D) << ','
           << format_double(s.Dstar) << '\n';
    }
}

inline void write_financial_csv(std::ostream& os, const PricingReport& r) {
    os << kFinancialHeader << '\n';
    for (std::size_t t = 0; t < r.profit_series.size(); ++t) {
        os << t << ',' << format_double(r.profit_series[t]) << ','
           << format_double(r.asset_series[t]) << '\n';
    }
}

inline void write_sensitivity_csv(std::ostream& os, const SensitivityTable& table) {
    os << kSensitivityHeader << '\n';
    for (Parameter p : kAllParameters) {
        os << name(p);
        for (Quantity q : kAllQuantities) os << ',' << format_double(table.at(q, p));
        os << '\n';
    }
}

/// Whole-dollar rendering with thousands separators, e.g. -132,583,472.
inline std::string format_money(double x) {
    const double r = std::round(x);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0f", std::abs(r));
    std::string digits = buf;
    std::string out;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (k > 0 && (digits.size() - k) % 3 == 0) out += ',';
        out += digits[k];
    }
    return (r < 0 ? "-" : "") + out;
}

/// Ten significant digits, for human-readable text.
inline std::string format_short(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

/// Fixed decimals; values that round to zero print without a sign.
inline std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    std::string out = buf;
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

inline std::string format_analysis(const ContinuousStabilityReport& c,
                                   const DiscreteStabilityReport& d) {
    std::ostringstream os;
    os << "R0 = " << format_fixed(c.r0, 5) << ", DFE " << to_string(c.dfe_stability.verdict);
    if (c.ee_stability) {
        os << ", EE "
           << (c.ee_stability->verdict == Stability::Stable ? "locally asymptotically stable"
                                                            : to_string(c.ee_stability->verdict));
    } else {
        os << ", no endemic equilibrium";
    }
    os << "\n\n";

    os << "continuous model\n";
    os << "  disease-free equilibrium  (" << format_fixed(c.dfe.S, 5) << ", 0, 0)\n";
    os << "  DFE eigenvalues           " << format_fixed(c.dfe_stability.eigenvalues[0], 6) << ", "
       << format_fixed(c.dfe_stability.eigenvalues[1], 6) << ", "
       << format_fixed(c.dfe_stability.eigenvalues[2], 6) << "  -> "
       << to_string(c.dfe_stability.verdict) << '\n';
    if (c.ee) {
        os << "  endemic equilibrium       (" << format_fixed(c.ee->S, 5) << ", "
           << format_fixed(c.ee->I, 5) << ", " << format_fixed(c.ee->H, 5) << ")\n";
    }
    if (c.ee_stability) {
        const auto& a = c.ee_stability->coefficients;
        os << "  Routh-Hurwitz A1, A2, A3  " << format_short(a[0]) << ", " << format_short(a[1])
           << ", " << format_short(a[2]) << '\n';
        os << "  A1*A2 - A3                " << format_short(c.ee_stability->margin) << "  -> "
           << to_string(c.ee_stability->verdict) << '\n';
    }

    os << "\nforward Euler map, dt = " << format_short(d.dt) << '\n';
    os << "  DFE eigenvalues           " << format_short(d.dfe.eigenvalues[0]) << ", "
       << format_short(d.dfe.eigenvalues[1]) << ", " << format_short(d.dfe.eigenvalues[2])
       << "  -> " << to_string(d.dfe.verdict) << '\n';
    os << "  dt threshold              " << format_short(d.dfe.dt_threshold)
       << "  (bound for r3 uses alpha1 + mu2)\n";
    if (d.ee) {
        const auto& a = d.ee->coefficients;
        os << "  A1, A2, A3                " << format_short(a[0]) << ", " << format_short(a[1])
           << ", " << format_short(a[2]) << '\n';
        os << "  1 + A1 + A2 + A3          " << format_short(d.ee->schur_cohn.cond_plus) << '\n';
        os << "  1 - A1 + A2 - A3          " << format_short(d.ee->schur_cohn.cond_minus) << '\n';
        os << "  (1 - A3^2) - |A2 - A1 A3| " << format_short(d.ee->schur_cohn.cond_inner) << '\n';
        os << "  max |root|                " << format_short(d.ee->max_root_modulus) << "  -> "
           << to_string(d.ee->verdict) << '\n';
    }
    return os.str();
}

inline std::string format_pricing(const PricingReport& r) {
    std::ostringstream os;
    os << "monthly net premium       " << format_fixed(r.p_net, 2) << '\n';
    os << "monthly gross premium     " << format_fixed(r.p_gross, 2) << '\n';
    os << "premium base (PV heads)   " << format_fixed(r.premium_base, 2) << '\n';
    os << "PV of total benefits      " << format_money(r.total_benefit_pv) << '\n';
    os << "minimum PV of profit      " << format_money(r.pi_min) << "  at month " << r.t_min << '\n';
    if (r.capital_needed) {
        os << "start-up capital          " << format_money(r.gamma_capital) << '\n';
    } else {
        os << "start-up capital          0 (profit never negative)\n";
    }
    os << "PV of end-of-period profit " << format_money(r.pi_end) << '\n';
    os << "profit percentage         "
       << (r.profit_pct ? format_fixed(*r.profit_pct, 5) + "%" : std::string("n/a")) << '\n';
    return os.str();
}

struct ScenarioSummary {
    std::string label;
    Scenario scenario;
    ContinuousStabilityReport analysis;
    SihState final_state;
    PricingReport pricing;
};

/// Two scenarios side by side, one quantity per row.
inline std::string format_summary_table(const ScenarioSummary& left, const ScenarioSummary& right) {
    std::ostringstream os;
    auto row = [&](std::string_view label, const std::string& a, const std::string& b,
                   std::string_view unit) {
        os << std::left << std::setw(28) << label << std::right << std::setw(16) << a
           << std::setw(16) << b << "  " << unit << '\n';
    };
    auto pct = [](const PricingReport& r) {
        return r.profit_pct ? format_fixed(*r.profit_pct, 5) + "%" : std::string("n/a");
    };
    auto limit = [](const ScenarioSummary& s, int which) {
        const auto& eq = s.analysis.ee ? *s.analysis.ee : s.analysis.dfe;
        const double v = which == 0 ? eq.S : which == 1 ? eq.I : eq.H;
        return format_fixed(v, 0);
    };
    row("quantity", left.label, right.label, "unit");
    row("incidence coefficient", format_fixed(left.scenario.epidemic.beta, 5),
        format_fixed(right.scenario.epidemic.beta, 5), "1/(individual*month)");
    row("R0", format_fixed(left.analysis.r0, 5), format_fixed(right.analysis.r0, 5), "-");
    row("S_inf", limit(left, 0), limit(right, 0), "individual");
    row("I_inf", limit(left, 1), limit(right, 1), "individual");
    row("H_inf", limit(left, 2), limit(right, 2), "individual");
    row("S at month T", format_fixed(left.final_state.S, 2), format_fixed(right.final_state.S, 2),
        "individual");
    row("monthly gross premium", format_money(left.pricing.p_gross),
        format_money(right.pricing.p_gross), "$/individual");
    row("min PV of total profit", format_money(left.pricing.pi_min),
        format_money(right.pricing.pi_min), "$");
    row("month of minimum", std::to_string(left.pricing.t_min),
        std::to_string(right.pricing.t_min), "month");
    row("start-up capital", format_money(left.pricing.gamma_capital),
        format_money(right.pricing.gamma_capital), "$");
    row("PV of end-of-period profit", format_money(left.pricing.pi_end),
        format_money(right.pricing.pi_end), "$");
    row("total profit percentage", pct(left.pricing), pct(right.pricing), "-");
    return os.str();
}

inline std::string format_sensitivity_table(const SensitivityTable& table) {
    std::ostringstream os;
    if (!table.scenario.empty()) os << table.scenario << '\n';
    os << std::left << std::setw(15) << "parameter" << std::right;
    for (Quantity q : kAllQuantities) os << std::setw(12) << name(q);
    os << '\n';
    bool any_shift = false;
    for (Parameter p : kAllParameters) {
        os << std::left << std::setw(15) << name(p) << std::right;
        for (Quantity q : kAllQuantities) os << std::setw(12) << format_fixed(table.at(q, p), 5);
        if (table.t_min_shifted[static_cast<std::size_t>(p)]) {
            os << "  *";
            any_shift = true;
        }
        os << '\n';
    }
    if (any_shift) os << "* month of minimum profit moved under perturbation (Gamma non-smooth)\n";
    return os.str();
}

}  // namespace sihins
