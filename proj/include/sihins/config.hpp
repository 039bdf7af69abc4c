#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

#include "sihins/errors.hpp"
#include "sihins/model.hpp"

// Flat scenario files:
//
//   # comment
//   beta = 0.003
//   T    = 500
//
// One `key = value` per line. Missing keys keep the shipped defaults;
// unknown or repeated keys are errors.
namespace sihins {

/// Shortest text that parses back to exactly `x`.
inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view key, std::string_view text) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("'" + std::string(text) + "' is not a number for " +
                                    std::string(key));
    }
    return out;
}

}  // namespace detail

/// Keys understood by parse_config, in emission order.
inline constexpr std::string_view kConfigKeys[] = {
    "lambda", "alpha1",   "alpha2",     "beta",  "gamma",     "mu1",       "mu2",
    "S0",     "I0",       "H0",         "D0",    "Dstar0",    "T",         "dt",
    "interest_i", "omega", "phi",       "benefit_H", "benefit_D", "benefit_Dstar", "scheme",
};

inline bool is_config_key(std::string_view key) {
    for (auto k : kConfigKeys)
        if (k == key) return true;
    return false;
}

/// Sets one field from its text value. Throws std::invalid_argument on an
/// unknown key or unparsable value; does not validate invariants.
inline void assign(Scenario& sc, std::string_view key, std::string_view text) {
    if (key == "scheme") {
        if (text == "simultaneous") sc.scheme = StepScheme::Simultaneous;
        else if (text == "sequential") sc.scheme = StepScheme::Sequential;
        else throw std::invalid_argument("scheme must be 'simultaneous' or 'sequential'");
        return;
    }
    if (key == "T") {
        const double v = detail::parse_number(key, text);
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw std::invalid_argument("T must be a whole number of months");
        }
        sc.policy.horizon_T = static_cast<int>(v);
        return;
    }
    double* target = nullptr;
    auto& e = sc.epidemic;
    auto& pol = sc.policy;
    auto& s0 = sc.initial;
    if (key == "lambda") target = &e.lambda;
    else if (key == "alpha1") target = &e.alpha1;
    else if (key == "alpha2") target = &e.alpha2;
    else if (key == "beta") target = &e.beta;
    else if (key == "gamma") target = &e.gamma;
    else if (key == "mu1") target = &e.mu1;
    else if (key == "mu2") target = &e.mu2;
    else if (key == "S0") target = &s0.S;
    else if (key == "I0") target = &s0.I;
    else if (key == "H0") target = &s0.H;
    else if (key == "D0") target = &s0.D;
    else if (key == "Dstar0") target = &s0.Dstar;
    else if (key == "dt") target = &pol.dt;
    else if (key == "interest_i") target = &pol.interest_i;
    else if (key == "omega") target = &pol.omega;
    else if (key == "phi") target = &pol.phi;
    else if (key == "benefit_H") target = &pol.benefit_H;
    else if (key == "benefit_D") target = &pol.benefit_D;
    else if (key == "benefit_Dstar") target = &pol.benefit_Dstar;
    if (target == nullptr) throw std::invalid_argument("unknown key '" + std::string(key) + "'");
    *target = detail::parse_number(key, text);
}

/// Parses config text on top of `defaults` and validates the result.
inline Scenario parse_config(std::string_view text, Scenario defaults = baseline_scenario()) {
    Scenario sc = std::move(defaults);
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const auto key = detail::trim(line.substr(0, eq));
        const auto val = detail::trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) throw ParseError(line_no, "expected 'key = value'");
        if (!seen.emplace(key).second) {
            throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
        }
        try {
            assign(sc, key, val);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    validate(sc);
    return sc;
}

/// Config text that parse_config turns back into `sc` exactly.
inline std::string emit_config(const Scenario& sc) {
    std::ostringstream os;
    const auto& e = sc.epidemic;
    const auto& pol = sc.policy;
    const auto& s0 = sc.initial;
    const std::pair<std::string_view, double> rows[] = {
        {"lambda", e.lambda},         {"alpha1", e.alpha1},
        {"alpha2", e.alpha2},         {"beta", e.beta},
        {"gamma", e.gamma},           {"mu1", e.mu1},
        {"mu2", e.mu2},               {"S0", s0.S},
        {"I0", s0.I},                 {"H0", s0.H},
        {"D0", s0.D},                 {"Dstar0", s0.Dstar},
        {"T", static_cast<double>(pol.horizon_T)}, {"dt", pol.dt},
        {"interest_i", pol.interest_i}, {"omega", pol.omega},
        {"phi", pol.phi},             {"benefit_H", pol.benefit_H},
        {"benefit_D", pol.benefit_D}, {"benefit_Dstar", pol.benefit_Dstar},
    };
    for (const auto& [key, v] : rows) os << key << " = " << format_double(v) << '\n';
    os << "scheme = " << to_string(sc.scheme) << '\n';
    return os.str();
}

}  // namespace sihins
