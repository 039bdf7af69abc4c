#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sihins/errors.hpp"
#include "sihins/model.hpp"
#include "sihins/simulator.hpp"

// Discrete actuarial quantities of the epidemic-driven health insurance.
//
// Every susceptible or infected individual alive at the start of month t
// (t = 1..T) pays the premium; at the end of month t the insurer pays
// benefit_H per hospitalised individual plus the one-time death benefits
// for deaths during the month. Present values discount month t by v^t,
// v = 1/(1+i). All series are indexed by integer month 0..T and read the
// trajectory at grid index t/dt.
namespace sihins {

struct CapitalSummary {
    double pi_min = 0.0;
    std::size_t t_min = 0;
    bool capital_needed = false;  // false means the profit never dips below 0
    double gamma_capital = 0.0;
    std::vector<double> asset_series;
    double pi_end = 0.0;
    std::optional<double> profit_pct;  // percent; absent when gamma_capital = 0
};

struct PricingReport {
    double p_net = 0.0;
    double p_gross = 0.0;
    double premium_base = 0.0;
    double total_benefit_pv = 0.0;
    std::vector<double> profit_series;
    double pi_min = 0.0;
    std::size_t t_min = 0;
    bool capital_needed = false;
    double gamma_capital = 0.0;
    std::vector<double> asset_series;
    double pi_end = 0.0;
    std::optional<double> profit_pct;
};

inline void check_grid(const Trajectory& traj, const PolicyParams& pol) {
    if (traj.dt != pol.dt) {
        throw GridMismatch("trajectory dt " + std::to_string(traj.dt) + " != policy dt " +
                           std::to_string(pol.dt));
    }
    const std::size_t expected = static_cast<std::size_t>(pol.horizon_T) * steps_per_month(pol.dt) + 1;
    if (traj.states.size() != expected) {
        throw GridMismatch("trajectory has " + std::to_string(traj.states.size()) +
                           " states, policy needs " + std::to_string(expected));
    }
}

/// Cumulative discounted head count of payers: entry t is
/// sum_{tau=0}^{t-1} v^tau (S + I)(tau), so entry 0 is 0 and entry T is
/// the full annuity base.
inline std::vector<double> premium_base_series(const Trajectory& traj, const PolicyParams& pol) {
    check_grid(traj, pol);
    const auto T = static_cast<std::size_t>(pol.horizon_T);
    const double v = pol.discount();
    std::vector<double> out(T + 1, 0.0);
    double vt = 1.0;
    for (std::size_t t = 0; t < T; ++t) {
        const SihState& s = traj.at_month(t);
        out[t + 1] = out[t] + vt * (s.S + s.I);
        vt *= v;
    }
    return out;
}

/// Cumulative present value of benefits paid through the end of month t.
inline std::vector<double> benefit_pv_series(const Trajectory& traj, const PolicyParams& pol) {
    check_grid(traj, pol);
    const auto T = static_cast<std::size_t>(pol.horizon_T);
    const double v = pol.discount();
    std::vector<double> out(T + 1, 0.0);
    double vt = v;
    for (std::size_t t = 1; t <= T; ++t) {
        const SihState& prev = traj.at_month(t - 1);
        const SihState& cur = traj.at_month(t);
        const double paid = pol.benefit_H * cur.H + pol.benefit_D * (cur.D - prev.D) +
                            pol.benefit_Dstar * (cur.Dstar - prev.Dstar);
        out[t] = out[t - 1] + vt * paid;
        vt *= v;
    }
    return out;
}

inline double premium_base(const Trajectory& traj, const PolicyParams& pol) {
    return premium_base_series(traj, pol).back();
}

inline double total_benefit_pv(const Trajectory& traj, const PolicyParams& pol,
                               std::size_t through_month) {
    if (through_month > static_cast<std::size_t>(pol.horizon_T)) {
        throw GridMismatch("month " + std::to_string(through_month) + " beyond horizon");
    }
    return benefit_pv_series(traj, pol)[through_month];
}

/// Equivalence principle: PV of net premiums equals PV of benefits.
inline double net_premium(const Trajectory& traj, const PolicyParams& pol) {
    const double base = premium_base(traj, pol);
    if (!(base > 0.0)) throw DegenerateBase("premium base is zero; no one pays premiums");
    return total_benefit_pv(traj, pol, static_cast<std::size_t>(pol.horizon_T)) / base;
}

inline double gross_premium(double p_net, const PolicyParams& pol) noexcept {
    return (1.0 + pol.omega + pol.phi) * p_net;
}

/// PV of total profit at the end of each month: gross premiums received
/// minus operational costs minus benefits paid. Entry 0 is 0.
inline std::vector<double> profit_series(const Trajectory& traj, const PolicyParams& pol,
                                         double p_net) {
    const auto base = premium_base_series(traj, pol);
    const auto benefits = benefit_pv_series(traj, pol);
    const double gross = gross_premium(p_net, pol);
    const double cost = pol.omega * p_net;
    std::vector<double> out(base.size(), 0.0);
    for (std::size_t t = 1; t < out.size(); ++t) {
        out[t] = gross * base[t] - cost * base[t] - benefits[t];
    }
    return out;
}

/// Minimum profit, its month (earliest on ties), the start-up capital
/// that keeps the discounted asset nonnegative, and the end-of-horizon
/// profit relative to that capital.
inline CapitalSummary capital_and_percentage(const std::vector<double>& profits,
                                             const PolicyParams& pol) {
    if (profits.size() != static_cast<std::size_t>(pol.horizon_T) + 1) {
        throw GridMismatch("profit series must have T+1 entries");
    }
    CapitalSummary out;
    out.t_min = 0;
    out.pi_min = profits[0];
    for (std::size_t t = 1; t < profits.size(); ++t) {
        if (profits[t] < out.pi_min) {
            out.pi_min = profits[t];
            out.t_min = t;
        }
    }
    out.capital_needed = out.pi_min < 0.0;
    out.gamma_capital =
        out.capital_needed ? -out.pi_min * std::pow(pol.discount(), static_cast<double>(out.t_min))
                           : 0.0;
    out.asset_series.reserve(profits.size());
    for (double pi : profits) out.asset_series.push_back(out.gamma_capital + pi);
    out.pi_end = profits.back();
    if (out.gamma_capital > 0.0) out.profit_pct = out.pi_end / out.gamma_capital * 100.0;
    return out;
}

inline PricingReport price(const Trajectory& traj, const PolicyParams& pol) {
    PricingReport r;
    r.premium_base = premium_base(traj, pol);
    r.total_benefit_pv = total_benefit_pv(traj, pol, static_cast<std::size_t>(pol.horizon_T));
    r.p_net = net_premium(traj, pol);
    r.p_gross = gross_premium(r.p_net, pol);
    r.profit_series = profit_series(traj, pol, r.p_net);

    auto cap = capital_and_percentage(r.profit_series, pol);
    r.pi_min = cap.pi_min;
    r.t_min = cap.t_min;
    r.capital_needed = cap.capital_needed;
    r.gamma_capital = cap.gamma_capital;
    r.asset_series = std::move(cap.asset_series);
    r.pi_end = cap.pi_end;
    r.profit_pct = cap.profit_pct;
    return r;
}

/// Simulates the scenario and prices the policy on the result.
inline PricingReport price(const Scenario& sc) { return price(simulate(sc), sc.policy); }

}  // namespace sihins
