#pragma once

#include <cstddef>
#include <vector>

#include "sihins/errors.hpp"
#include "sihins/model.hpp"

namespace sihins {

namespace detail {

inline SihState advance(const SihState& s, const Derivative& d, double h) noexcept {
    return {s.S + h * d.dS, s.I + h * d.dI, s.H + h * d.dH, s.D + h * d.dD, s.Dstar + h * d.dDstar};
}

inline void require_nonnegative(const SihState& s, std::size_t step) {
    if (s.S < 0.0 || s.I < 0.0 || s.H < 0.0) {
        throw NegativeStateProduced(step, "negative compartment (S=" + std::to_string(s.S) +
                                              ", I=" + std::to_string(s.I) +
                                              ", H=" + std::to_string(s.H) + "); dt too large");
    }
}

}  // namespace detail

/// One forward Euler step: s + dt * f(s). `step` only labels the error.
inline SihState euler_step(const EpidemicParams& p, const SihState& s, double dt,
                           std::size_t step = 0) {
    SihState next = detail::advance(s, vector_field(p, s), dt);
    detail::require_nonnegative(next, step);
    return next;
}

/// One step of the component-wise sequential update (see StepScheme).
inline SihState sequential_euler_step(const EpidemicParams& p, const SihState& s, double dt,
                                      std::size_t step = 0) {
    SihState next;
    next.S = s.S + dt * (p.lambda - p.beta * s.S * s.I + p.alpha1 * s.H + p.alpha2 * s.I -
                         p.mu1 * s.S);
    next.I = s.I + dt * (p.beta * next.S * s.I - (p.alpha2 + p.gamma + p.mu2) * s.I);
    next.H = s.H + dt * (p.gamma * next.I - (p.alpha1 + p.mu2) * s.H);
    next.D = s.D + dt * p.mu1 * s.S;
    next.Dstar = s.Dstar + dt * (p.mu2 * s.I + p.mu2 * s.H);
    detail::require_nonnegative(next, step);
    return next;
}

inline SihState step(StepScheme scheme, const EpidemicParams& p, const SihState& s, double dt,
                     std::size_t index = 0) {
    return scheme == StepScheme::Simultaneous ? euler_step(p, s, dt, index)
                                              : sequential_euler_step(p, s, dt, index);
}

/// Number of grid intervals covering the policy horizon.
inline std::size_t grid_steps(const PolicyParams& pol) {
    return static_cast<std::size_t>(pol.horizon_T) * steps_per_month(pol.dt);
}

/// Iterates the discrete model over [0, T]. The result has T/dt + 1
/// states with states[0] = sc.initial.
inline Trajectory simulate(const Scenario& sc) {
    validate(sc);
    const std::size_t n = grid_steps(sc.policy);
    Trajectory traj{sc.policy.dt, {}};
    traj.states.reserve(n + 1);
    traj.states.push_back(sc.initial);
    for (std::size_t k = 0; k < n; ++k) {
        traj.states.push_back(step(sc.scheme, sc.epidemic, traj.states.back(), sc.policy.dt, k + 1));
    }
    return traj;
}

/// Classical fourth-order Runge-Kutta on the same grid. Test oracle only;
/// the pricing pipeline never uses it.
inline Trajectory reference_simulate(const Scenario& sc) {
    validate(sc);
    const std::size_t n = grid_steps(sc.policy);
    const double h = sc.policy.dt;
    const auto& p = sc.epidemic;

    Trajectory traj{h, {}};
    traj.states.reserve(n + 1);
    traj.states.push_back(sc.initial);
    for (std::size_t k = 0; k < n; ++k) {
        const SihState& s = traj.states.back();
        const Derivative k1 = vector_field(p, s);
        const Derivative k2 = vector_field(p, detail::advance(s, k1, h / 2));
        const Derivative k3 = vector_field(p, detail::advance(s, k2, h / 2));
        const Derivative k4 = vector_field(p, detail::advance(s, k3, h));
        const Derivative avg{
            (k1.dS + 2 * k2.dS + 2 * k3.dS + k4.dS) / 6,
            (k1.dI + 2 * k2.dI + 2 * k3.dI + k4.dI) / 6,
            (k1.dH + 2 * k2.dH + 2 * k3.dH + k4.dH) / 6,
            (k1.dD + 2 * k2.dD + 2 * k3.dD + k4.dD) / 6,
            (k1.dDstar + 2 * k2.dDstar + 2 * k3.dDstar + k4.dDstar) / 6,
        };
        SihState next = detail::advance(s, avg, h);
        detail::require_nonnegative(next, k + 1);
        traj.states.push_back(next);
    }
    return traj;
}

}  // namespace sihins
