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

#ifndef IRSRELAY_HARNESS_HPP
#define IRSRELAY_HARNESS_HPP

// Monte Carlo engine. Trial t of any experiment uses channel seed
// derive_seed(base_seed, t) regardless of the swept parameter or the method,
// so every comparison is made on common random numbers, and results are merged
// by index so the output does not depend on the number of worker threads.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "beamforming.hpp"
#include "channel.hpp"
#include "error.hpp"
#include "metrics.hpp"
#include "random.hpp"

namespace irsrelay {

enum class Method {
    ais,
    nsp,
    irses,
    ais_fixed_phase,
    nsp_fixed_phase,
    irses_fixed_phase,
    baseline_single_antenna,
    baseline_irs_only,
    baseline_relay_only,
};

inline constexpr std::array<std::pair<Method, std::string_view>, 9> method_names{{
    {Method::ais, "ais"},
    {Method::nsp, "nsp"},
    {Method::irses, "irses"},
    {Method::ais_fixed_phase, "ais-fixed-phase"},
    {Method::nsp_fixed_phase, "nsp-fixed-phase"},
    {Method::irses_fixed_phase, "irses-fixed-phase"},
    {Method::baseline_single_antenna, "baseline-single-antenna"},
    {Method::baseline_irs_only, "baseline-irs-only"},
    {Method::baseline_relay_only, "baseline-relay-only"},
}};

inline constexpr std::string_view to_string(Method m)
{
    for (const auto& [method, name] : method_names)
        if (method == m)
            return name;
    return "?";
}

inline std::optional<Method> parse_method(std::string_view name)
{
    for (const auto& [method, n] : method_names)
        if (n == name)
            return method;
    return std::nullopt;
}

struct ScenarioConfig {
    Geometry geometry;
    LinkBudget budget;           // noise_variance_watt is derived from snr_db
    int antennas = 16;           // M
    int elements = 160;          // N
    Method method = Method::ais;
    double snr_db = 30.0;
    int trials = 500;
    std::uint64_t base_seed = 1;
    double epsilon = 1e-4;
    int max_iter = 50;
    NspMode nsp_mode = NspMode::effective;
    InterferenceMode irses_mode = InterferenceMode::idealized;
    MrcRateRule mrc_rate = MrcRateRule::branch_sum;

    double noise_variance() const { return noise_variance_for_snr(snr_db, budget.p_s_watt, budget.p_r_watt); }
    IterationControl control() const { return {epsilon, max_iter}; }

    /// Checks everything except method-specific constraints.
    void validate_common() const
    {
        geometry.validate();
        LinkBudget b = budget;
        b.noise_variance_watt = 1.0;
        b.validate();
        detail::require_config(std::isfinite(snr_db), "snr_db must be finite");
        detail::require_config(antennas >= 1, "M must be >= 1");
        detail::require_config(elements >= 1, "N must be >= 1");
        detail::require_config(trials >= 1, "trials must be >= 1");
        control().validate();
    }

    void validate_method(Method m) const
    {
        const std::string name(to_string(m));
        switch (m) {
        case Method::irses:
        case Method::irses_fixed_phase:
            detail::require_config(elements % antennas == 0,
                                   name + " requires M to divide N (M=" + std::to_string(antennas)
                                       + ", N=" + std::to_string(elements) + ")");
            break;
        case Method::nsp:
        case Method::nsp_fixed_phase:
            if (antennas < 2)
                throw UnsupportedConfiguration(name + " requires M >= 2");
            detail::require_config(nsp_mode != NspMode::literal || antennas > elements,
                                   name + " in literal mode requires M > N");
            break;
        default:
            break;
        }
    }

    void validate() const
    {
        validate_common();
        validate_method(method);
    }
};

struct TrialRecord {
    int trial_index = 0;
    std::uint64_t seed = 0;
    RateResult result;
};

inline constexpr std::uint64_t partition_stream = 0x9A27;

inline std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index)
{
    return random::derive_seed(base_seed, static_cast<std::uint64_t>(trial_index));
}

/// First `m` RS antennas of a realization (identical to sampling with M = m under the same seed).
inline ChannelSet first_antennas(const ChannelSet& ch, Eigen::Index m)
{
    return {ch.h_sr.head(m), ch.H_ir.topRows(m), ch.h_si, ch.h_rd.head(m), ch.h_id, ch.H_ri.topRows(m)};
}

namespace detail {

inline RateResult two_hop(Method m, const FirstSlotSolution& first, const SecondSlotSolution& second)
{
    return make_two_hop_result(std::string(to_string(m)), first.rate_r, second.rate_d, first.iterations(),
                               second.iterations());
}

} // namespace detail

/// Runs one method on an already-sampled realization. `seed` is the trial seed
/// (used for the IRSES partition).
inline RateResult evaluate_method(const ScenarioConfig& cfg, Method m, const ChannelSet& ch, std::uint64_t seed)
{
    const double noise = cfg.noise_variance();
    const double p_s = cfg.budget.p_s_watt;
    const double p_r = cfg.budget.p_r_watt;
    const IterationControl control = cfg.control();
    const auto partition = [&] {
        return irses_partition(static_cast<std::size_t>(ch.elements()), static_cast<std::size_t>(ch.antennas()),
                               random::derive_seed(seed, partition_stream));
    };

    switch (m) {
    case Method::ais:
        return detail::two_hop(m, ais_max_rp(ch, p_s, noise, control), second_slot_optimize(ch, p_r, noise, control));
    case Method::nsp:
        return detail::two_hop(m, nsp_max_rp_mrc(ch, p_s, noise, control, cfg.nsp_mode, cfg.mrc_rate),
                               second_slot_optimize(ch, p_r, noise, control));
    case Method::irses:
        return detail::two_hop(m, irses_max_rp_mrc(ch, p_s, noise, partition(), cfg.irses_mode, cfg.mrc_rate),
                               second_slot_optimize(ch, p_r, noise, control));
    case Method::ais_fixed_phase:
        return detail::two_hop(m, ais_fixed_phase(ch, p_s, noise), second_slot_fixed_phase(ch, p_r, noise));
    case Method::nsp_fixed_phase:
        return detail::two_hop(m, nsp_fixed_phase(ch, p_s, noise, cfg.nsp_mode, cfg.mrc_rate),
                               second_slot_fixed_phase(ch, p_r, noise));
    case Method::irses_fixed_phase:
        return detail::two_hop(m, irses_fixed_phase(ch, p_s, noise, partition(), cfg.irses_mode, cfg.mrc_rate),
                               second_slot_fixed_phase(ch, p_r, noise));
    case Method::baseline_single_antenna: {
        const ChannelSet single = first_antennas(ch, 1);
        return detail::two_hop(m, ais_max_rp(single, p_s, noise, control),
                               second_slot_optimize(single, p_r, noise, control));
    }
    case Method::baseline_irs_only: {
        // S -> IRS -> D in one hop; each element rotates its path onto the real axis.
        const CVector path = ch.h_id.conjugate().cwiseProduct(ch.h_si);
        RVector theta(path.size());
        for (Eigen::Index i = 0; i < path.size(); ++i)
            theta(i) = -std::arg(path(i));
        const cplx amplitude = path.cwiseProduct(unit_phasors(theta)).sum();
        const double rate = rate_from_power(p_s * std::norm(amplitude), noise);
        return {std::string(to_string(m)), rate, rate, rate, 1.0, 1, 0};
    }
    case Method::baseline_relay_only: {
        const double rate_r = rate_from_power(p_s * ch.h_sr.squaredNorm(), noise);
        const double rate_d = rate_from_power(p_r * ch.h_rd.squaredNorm(), noise);
        return make_two_hop_result(std::string(to_string(m)), rate_r, rate_d, 1, 1);
    }
    }
    throw ConfigError("unknown method");
}

inline ChannelSet sample_trial_channels(const ScenarioConfig& cfg, std::uint64_t seed)
{
    return sample_channels(cfg.geometry, cfg.budget, cfg.antennas, cfg.elements, seed);
}

inline TrialRecord run_trial(const ScenarioConfig& cfg, int trial_index)
{
    cfg.validate();
    detail::require_config(trial_index >= 0, "trial index must be >= 0");
    const std::uint64_t seed = trial_seed(cfg.base_seed, trial_index);
    return {trial_index, seed, evaluate_method(cfg, cfg.method, sample_trial_channels(cfg, seed), seed)};
}

/// Same realization evaluated with several methods.
inline std::vector<RateResult> run_trial_methods(const ScenarioConfig& cfg, const std::vector<Method>& methods,
                                                 int trial_index)
{
    cfg.validate_common();
    for (Method m : methods)
        cfg.validate_method(m);
    const std::uint64_t seed = trial_seed(cfg.base_seed, trial_index);
    const ChannelSet ch = sample_trial_channels(cfg, seed);
    std::vector<RateResult> out;
    out.reserve(methods.size());
    for (Method m : methods)
        out.push_back(evaluate_method(cfg, m, ch, seed));
    return out;
}

inline TrialRecord run_baseline_single_antenna(ScenarioConfig cfg, int trial_index)
{
    cfg.method = Method::baseline_single_antenna;
    return run_trial(cfg, trial_index);
}

inline TrialRecord run_baseline_irs_only(ScenarioConfig cfg, int trial_index)
{
    cfg.method = Method::baseline_irs_only;
    return run_trial(cfg, trial_index);
}

inline TrialRecord run_baseline_relay_only(ScenarioConfig cfg, int trial_index)
{
    cfg.method = Method::baseline_relay_only;
    return run_trial(cfg, trial_index);
}

/// Runs `count` independent tasks on `workers` threads. Exceptions are rethrown
/// after all workers stop; the one from the lowest task index wins.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = count;

    const auto body = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
}

/// All trials of one configuration for several methods; result[t][k] is method k on trial t.
inline std::vector<std::vector<RateResult>> run_trials(const ScenarioConfig& cfg, const std::vector<Method>& methods,
                                                       unsigned workers = 0)
{
    cfg.validate_common();
    for (Method m : methods)
        cfg.validate_method(m);
    std::vector<std::vector<RateResult>> out(static_cast<std::size_t>(cfg.trials));
    parallel_for(out.size(), workers,
                 [&](std::size_t t) { out[t] = run_trial_methods(cfg, methods, static_cast<int>(t)); });
    return out;
}

// ---- sweeps -----------------------------------------------------------------

enum class SweepAxis { snr_db, elements, antennas, distance };

inline constexpr std::string_view to_string(SweepAxis a)
{
    switch (a) {
    case SweepAxis::snr_db: return "snr_db";
    case SweepAxis::elements: return "N";
    case SweepAxis::antennas: return "M";
    case SweepAxis::distance: return "distance_d";
    }
    return "?";
}

struct SweepSpec {
    ScenarioConfig base;
    SweepAxis axis = SweepAxis::snr_db;
    std::vector<double> values;
    std::vector<Method> methods{Method::ais, Method::nsp, Method::irses, Method::baseline_single_antenna};
};

struct MethodStats {
    double mean = 0.0;
    double standard_error = 0.0;
    int trials = 0;
};

struct SweepRow {
    double value = 0.0;
    std::vector<MethodStats> stats; // same order as SweepTable::methods
};

struct SweepTable {
    SweepAxis axis = SweepAxis::snr_db;
    std::vector<Method> methods;
    std::vector<SweepRow> rows;
};

inline MethodStats summarize(const std::vector<double>& samples)
{
    MethodStats s;
    s.trials = static_cast<int>(samples.size());
    if (samples.empty())
        return s;
    double sum = 0.0;
    for (double v : samples)
        sum += v;
    s.mean = sum / static_cast<double>(samples.size());
    if (samples.size() > 1) {
        double ss = 0.0;
        for (double v : samples)
            ss += (v - s.mean) * (v - s.mean);
        const double n = static_cast<double>(samples.size());
        s.standard_error = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return s;
}

/// Scenario for one point on the sweep axis.
inline ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value)
{
    ScenarioConfig cfg = base;
    const auto integral = [&](const char* what) {
        detail::require_config(value >= 1.0 && value == std::floor(value) && value <= 1e6,
                               std::string("sweep value for ") + what + " must be a positive integer");
        return static_cast<int>(value);
    };
    switch (axis) {
    case SweepAxis::snr_db:
        cfg.snr_db = value;
        break;
    case SweepAxis::elements:
        cfg.elements = integral("N");
        break;
    case SweepAxis::antennas:
        cfg.antennas = integral("M");
        break;
    case SweepAxis::distance: {
        // RS and IRS slide together parallel to S-D; offsets between them are preserved.
        const Point s = base.geometry.source;
        const Point d = base.geometry.destination;
        detail::require_config(value > s.x && value < d.x,
                               "distance sweep value must lie strictly between S and D (got " + std::to_string(value) + ")");
        const double shift = value - base.geometry.relay.x;
        cfg.geometry.relay.x += shift;
        cfg.geometry.irs.x += shift;
        break;
    }
    }
    return cfg;
}

inline void validate_sweep(const SweepSpec& spec)
{
    detail::require_config(!spec.values.empty(), "sweep values must not be empty");
    detail::require_config(!spec.methods.empty(), "sweep needs at least one method");
    for (std::size_t i = 1; i < spec.values.size(); ++i)
        detail::require_config(spec.values[i] > spec.values[i - 1], "sweep values must be strictly increasing");
    for (double v : spec.values) {
        const ScenarioConfig cfg = apply_axis(spec.base, spec.axis, v);
        cfg.validate_common();
        for (Method m : spec.methods)
            cfg.validate_method(m);
    }
}

/// Mean and standard error of the end-to-end rate for every (axis value, method).
inline SweepTable sweep(const SweepSpec& spec, unsigned workers = 0)
{
    validate_sweep(spec);
    const std::size_t n_values = spec.values.size();
    const std::size_t n_trials = static_cast<std::size_t>(spec.base.trials);
    const std::size_t n_methods = spec.methods.size();

    std::vector<ScenarioConfig> configs;
    for (double v : spec.values)
        configs.push_back(apply_axis(spec.base, spec.axis, v));

    // rates[(value * trials + trial) * methods + method]
    std::vector<double> rates(n_values * n_trials * n_methods);
    parallel_for(n_values * n_trials, workers, [&](std::size_t task) {
        const std::size_t vi = task / n_trials;
        const auto trial = static_cast<int>(task % n_trials);
        const auto results = run_trial_methods(configs[vi], spec.methods, trial);
        for (std::size_t k = 0; k < n_methods; ++k)
            rates[task * n_methods + k] = results[k].rate_s;
    });

    SweepTable table{spec.axis, spec.methods, {}};
    for (std::size_t vi = 0; vi < n_values; ++vi) {
        SweepRow row{spec.values[vi], {}};
        for (std::size_t k = 0; k < n_methods; ++k) {
            std::vector<double> samples(n_trials);
            for (std::size_t t = 0; t < n_trials; ++t)
                samples[t] = rates[(vi * n_trials + t) * n_methods + k];
            row.stats.push_back(summarize(samples));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace irsrelay

#endif
