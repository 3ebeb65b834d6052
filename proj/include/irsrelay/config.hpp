// SPDX-License-Identifier: Apache-2.0
//
// irsrelay - link-level simulator for IRS-aided multi-antenna relay networks
// Copyright (C) 2026 The irsrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSRELAY_CONFIG_HPP
#define IRSRELAY_CONFIG_HPP

// Flat key=value settings. Every key can come from the built-in defaults, the
// IRS_SIM_SEED environment variable (seed only), a file, or a command line
// override, applied in that order so later sources win.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "harness.hpp"
#include "table.hpp"

namespace irsrelay {

struct Settings {
    double source_x = 0.0, source_y = 0.0;
    double relay_x = 50.0, relay_y = 0.0;
    double irs_x = 50.0, irs_y = 10.0;
    double destination_x = 100.0, destination_y = 0.0;
    double alpha = 2.4;
    double gain_s_dbi = 5.0, gain_rs_dbi = 5.0, gain_d_dbi = 2.0, gain_irs_dbi = 0.0;
    double p_s_dbw = 10.0, p_r_dbw = 10.0;
    int antennas = 16;
    int elements = 160;
    double snr_db = 30.0;
    int trials = 500;
    std::uint64_t seed = 1;
    double epsilon = 1e-4;
    int max_iter = 50;
    NspMode nsp_mode = NspMode::effective;
    InterferenceMode irses_mode = InterferenceMode::idealized;
    MrcRateRule mrc_rate = MrcRateRule::branch_sum;
    std::vector<Method> methods{Method::ais, Method::nsp, Method::irses, Method::baseline_single_antenna};
    std::vector<double> values;  // sweep axis values (or N values for flops); empty means the command default
    int flops_iterations = 3;

    ScenarioConfig scenario() const
    {
        ScenarioConfig c;
        c.geometry = {{source_x, source_y}, {relay_x, relay_y}, {irs_x, irs_y}, {destination_x, destination_y}};
        c.budget.alpha = alpha;
        c.budget.gain_s_dbi = gain_s_dbi;
        c.budget.gain_rs_dbi = gain_rs_dbi;
        c.budget.gain_d_dbi = gain_d_dbi;
        c.budget.gain_irs_dbi = gain_irs_dbi;
        c.budget.p_s_watt = std::pow(10.0, p_s_dbw / 10.0);
        c.budget.p_r_watt = std::pow(10.0, p_r_dbw / 10.0);
        c.budget.noise_variance_watt = noise_variance_for_snr(snr_db, c.budget.p_s_watt, c.budget.p_r_watt);
        c.antennas = antennas;
        c.elements = elements;
        c.method = methods.empty() ? Method::ais : methods.front();
        c.snr_db = snr_db;
        c.trials = trials;
        c.base_seed = seed;
        c.epsilon = epsilon;
        c.max_iter = max_iter;
        c.nsp_mode = nsp_mode;
        c.irses_mode = irses_mode;
        c.mrc_rate = mrc_rate;
        return c;
    }
};

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text)
{
    T v{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
        throw ConfigError("key '" + std::string(key) + "': expected " + (std::is_integral_v<T> ? "an integer" : "a number")
                          + ", got '" + std::string(text) + "'");
    if constexpr (std::is_floating_point_v<T>)
        if (!std::isfinite(v))
            throw ConfigError("key '" + std::string(key) + "': value must be finite");
    return v;
}

inline std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(trim(text.substr(start, end - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline void require_key(bool ok, std::string_view key, const std::string& what)
{
    if (!ok)
        throw ConfigError("key '" + std::string(key) + "': " + what);
}

template <typename Enum, std::size_t K>
Enum parse_choice(std::string_view key, std::string_view text, const std::array<std::pair<Enum, std::string_view>, K>& choices)
{
    std::string allowed;
    for (const auto& [value, name] : choices) {
        if (name == text)
            return value;
        allowed += (allowed.empty() ? "" : ", ") + std::string(name);
    }
    throw ConfigError("key '" + std::string(key) + "': unknown value '" + std::string(text) + "' (allowed: " + allowed + ")");
}

struct KeySpec {
    std::string_view name;
    std::function<void(Settings&, std::string_view key, std::string_view value)> set;
    std::function<std::string(const Settings&)> get;
};

inline KeySpec real_key(std::string_view name, double Settings::*field, std::function<bool(double)> ok = {},
                        std::string rule = {})
{
    return {name,
            [=](Settings& s, std::string_view key, std::string_view v) {
                const double x = parse_number<double>(key, v);
                if (ok)
                    require_key(ok(x), key, rule);
                s.*field = x;
            },
            [=](const Settings& s) { return format_number(s.*field); }};
}

inline KeySpec int_key(std::string_view name, int Settings::*field, int min_value)
{
    return {name,
            [=](Settings& s, std::string_view key, std::string_view v) {
                const int x = parse_number<int>(key, v);
                require_key(x >= min_value, key, "must be >= " + std::to_string(min_value));
                s.*field = x;
            },
            [=](const Settings& s) { return std::to_string(s.*field); }};
}

inline const std::vector<KeySpec>& key_specs()
{
    static const std::vector<KeySpec> specs = [] {
        const auto positive = [](double x) { return x > 0.0; };
        const std::array nsp_modes{std::pair{NspMode::literal, to_string(NspMode::literal)},
                                   std::pair{NspMode::effective, to_string(NspMode::effective)}};
        const std::array irses_modes{std::pair{InterferenceMode::idealized, to_string(InterferenceMode::idealized)},
                                     std::pair{InterferenceMode::full, to_string(InterferenceMode::full)}};
        const std::array mrc_rules{std::pair{MrcRateRule::branch_sum, to_string(MrcRateRule::branch_sum)},
                                   std::pair{MrcRateRule::power_ratio, to_string(MrcRateRule::power_ratio)}};
        std::vector<KeySpec> v{
            real_key("source_x", &Settings::source_x),
            real_key("source_y", &Settings::source_y),
            real_key("relay_x", &Settings::relay_x),
            real_key("relay_y", &Settings::relay_y),
            real_key("irs_x", &Settings::irs_x),
            real_key("irs_y", &Settings::irs_y),
            real_key("destination_x", &Settings::destination_x),
            real_key("destination_y", &Settings::destination_y),
            real_key("alpha", &Settings::alpha, positive, "must be > 0"),
            real_key("gain_s_dbi", &Settings::gain_s_dbi),
            real_key("gain_rs_dbi", &Settings::gain_rs_dbi),
            real_key("gain_d_dbi", &Settings::gain_d_dbi),
            real_key("gain_irs_dbi", &Settings::gain_irs_dbi),
            real_key("p_s_dbw", &Settings::p_s_dbw),
            real_key("p_r_dbw", &Settings::p_r_dbw),
            int_key("M", &Settings::antennas, 1),
            int_key("N", &Settings::elements, 1),
            real_key("snr_db", &Settings::snr_db),
            int_key("trials", &Settings::trials, 1),
            {"seed",
             [](Settings& s, std::string_view key, std::string_view val) {
                 s.seed = parse_number<std::uint64_t>(key, val);
             },
             [](const Settings& s) { return std::to_string(s.seed); }},
            real_key("epsilon", &Settings::epsilon, positive, "must be > 0"),
            int_key("max_iter", &Settings::max_iter, 1),
            {"nsp_mode",
             [=](Settings& s, std::string_view key, std::string_view val) { s.nsp_mode = parse_choice(key, val, nsp_modes); },
             [](const Settings& s) { return std::string(to_string(s.nsp_mode)); }},
            {"irses_mode",
             [=](Settings& s, std::string_view key, std::string_view val) {
                 s.irses_mode = parse_choice(key, val, irses_modes);
             },
             [](const Settings& s) { return std::string(to_string(s.irses_mode)); }},
            {"mrc_rate",
             [=](Settings& s, std::string_view key, std::string_view val) { s.mrc_rate = parse_choice(key, val, mrc_rules); },
             [](const Settings& s) { return std::string(to_string(s.mrc_rate)); }},
            {"methods",
             [](Settings& s, std::string_view key, std::string_view val) {
                 std::vector<Method> out;
                 for (const auto& name : split_list(val)) {
                     const auto m = parse_method(name);
                     require_key(m.has_value(), key, "unknown method '" + name + "'");
                     for (Method prev : out)
                         require_key(prev != *m, key, "method '" + name + "' listed twice");
                     out.push_back(*m);
                 }
                 s.methods = std::move(out);
             },
             [](const Settings& s) {
                 std::string out;
                 for (Method m : s.methods)
                     out += (out.empty() ? "" : ",") + std::string(to_string(m));
                 return out;
             }},
            {"values",
             [](Settings& s, std::string_view key, std::string_view val) {
                 std::vector<double> out;
                 if (!trim(val).empty())
                     for (const auto& item : split_list(val))
                         out.push_back(parse_number<double>(key, item));
                 for (std::size_t i = 1; i < out.size(); ++i)
                     require_key(out[i] > out[i - 1], key, "values must be strictly increasing");
                 s.values = std::move(out);
             },
             [](const Settings& s) {
                 std::string out;
                 for (double x : s.values)
                     out += (out.empty() ? "" : ",") + format_number(x);
                 return out;
             }},
            int_key("flops_iterations", &Settings::flops_iterations, 1),
        };
        return v;
    }();
    return specs;
}

} // namespace detail

/// Applies one key=value pair; the diagnostic names the key on any failure.
inline void apply_setting(Settings& s, std::string_view key, std::string_view value)
{
    const std::string k = detail::trim(key);
    for (const auto& spec : detail::key_specs()) {
        if (spec.name == k) {
            spec.set(s, k, detail::trim(value));
            return;
        }
    }
    throw ConfigError("unknown key '" + k + "'");
}

/// Applies "key=value".
inline void apply_assignment(Settings& s, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("expected KEY=VALUE, got '" + std::string(assignment) + "'");
    apply_setting(s, assignment.substr(0, eq), assignment.substr(eq + 1));
}

/// Applies every line of a key=value document. Blank lines and '#' comments are skipped.
inline void apply_config_text(Settings& s, std::istream& in, const std::string& origin)
{
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        const std::string t = detail::trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        try {
            apply_assignment(s, t);
        } catch (const ConfigError& e) {
            throw ConfigError(origin + ":" + std::to_string(number) + ": " + e.what());
        }
    }
}

inline void apply_config_file(Settings& s, const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot read config file '" + path + "'");
    apply_config_text(s, f, path);
}

/// Seed from the environment value of IRS_SIM_SEED, if set.
inline void apply_seed_env(Settings& s, const char* value)
{
    if (value == nullptr)
        return;
    try {
        s.seed = detail::parse_number<std::uint64_t>("seed", detail::trim(value));
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("IRS_SIM_SEED: ") + e.what());
    }
}

/// Every key with its canonical text; feeding these back through apply_setting reproduces `s` exactly.
inline std::vector<std::pair<std::string, std::string>> settings_pairs(const Settings& s)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& spec : detail::key_specs())
        out.emplace_back(std::string(spec.name), spec.get(s));
    return out;
}

} // namespace irsrelay

#endif
