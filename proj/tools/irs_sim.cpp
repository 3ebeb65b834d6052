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

// irs_sim: command line front end for the simulator.
//
//   irs_sim sweep-snr --set M=16 --set N=160 --format csv --out snr.csv
//   irs_sim flops
//   irs_sim selftest
//
// Exit status: 0 success, 1 configuration error, 2 runtime or numerical error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <irsrelay.hpp>

namespace {

using namespace irsrelay;

constexpr const char* tool_version = "1.0.0";

struct Options {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string format = "csv";
    std::string out;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::string methods;
    unsigned workers = 0;
};

std::vector<double> arithmetic(double first, double step, double last)
{
    std::vector<double> v;
    for (double x = first; x <= last + 1e-9; x += step)
        v.push_back(x);
    return v;
}

// Per-command defaults sit between the built-in defaults and every user source.
void apply_command_defaults(const std::string& command, Settings& s)
{
    if (command == "sweep-snr") {
        s.values = arithmetic(0, 5, 30);
    } else if (command == "sweep-n") {
        s.antennas = 16;
        s.values = arithmetic(32, 32, 320);
    } else if (command == "sweep-m") {
        s.elements = 200;
        s.values = {2, 4, 5, 8, 10, 20, 25, 40, 50};
    } else if (command == "sweep-distance") {
        s.antennas = 50;
        s.elements = 200;
        s.values = arithmetic(10, 10, 90);
    } else if (command == "flops") {
        s.antennas = 50;
        s.values = arithmetic(100, 100, 1000);
    }
}

Settings resolve_settings(const std::string& command, const Options& opt)
{
    Settings s;
    apply_command_defaults(command, s);
    apply_seed_env(s, std::getenv("IRS_SIM_SEED"));
    if (!opt.config_path.empty())
        apply_config_file(s, opt.config_path);
    for (const auto& o : opt.overrides)
        apply_assignment(s, o);
    if (opt.trials)
        apply_setting(s, "trials", std::to_string(*opt.trials));
    if (opt.seed)
        apply_setting(s, "seed", std::to_string(*opt.seed));
    if (!opt.methods.empty())
        apply_setting(s, "methods", opt.methods);
    return s;
}

std::vector<std::pair<std::string, std::string>> metadata(const std::string& command, const Settings& s)
{
    std::vector<std::pair<std::string, std::string>> m{{"tool", "irs_sim"}, {"version", tool_version}, {"command", command}};
    for (auto& kv : settings_pairs(s))
        m.push_back(std::move(kv));
    return m;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

SweepAxis axis_of(const std::string& command)
{
    if (command == "sweep-snr")
        return SweepAxis::snr_db;
    if (command == "sweep-n")
        return SweepAxis::elements;
    if (command == "sweep-m")
        return SweepAxis::antennas;
    return SweepAxis::distance;
}

int dispatch(const std::string& command, const Options& opt)
{
    const Settings s = resolve_settings(command, opt);
    TableFormat format = TableFormat::csv;
    if (opt.format == "jsonl")
        format = TableFormat::jsonl;
    else if (opt.format != "csv")
        throw ConfigError("--format must be csv or jsonl");

    if (command == "selftest") {
        SelftestOptions so;
        so.seed = s.seed;
        std::ostringstream report;
        bool ok = true;
        for (const auto& c : run_selftest(so)) {
            ok = ok && c.passed;
            report << (c.passed ? "PASS " : "FAIL ") << c.name << " (worst " << c.worst << ", tolerance " << c.tolerance
                   << ")\n";
        }
        write_output(report.str(), opt.out);
        return ok ? 0 : 2;
    }

    OutputTable table;
    if (command == "run") {
        const ScenarioConfig cfg = s.scenario();
        table = trials_to_table(run_trials(cfg, s.methods, opt.workers), s.methods, metadata(command, s));
    } else if (command == "flops") {
        table = flops_to_table(s.antennas, s.values, s.flops_iterations, metadata(command, s));
    } else {
        SweepSpec spec{s.scenario(), axis_of(command), s.values, s.methods};
        table = sweep_to_table(sweep(spec, opt.workers), metadata(command, s));
    }
    write_output(emit_table_string(table, format), opt.out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Link-level simulator for IRS-aided multi-antenna relay networks", "irs_sim"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"run", "evaluate one configuration over all trials (one row per trial)"},
        {"sweep-snr", "mean rate versus transmit SNR"},
        {"sweep-n", "mean rate versus number of IRS elements N"},
        {"sweep-m", "mean rate versus number of relay antennas M"},
        {"sweep-distance", "mean rate versus relay/IRS position along S-D"},
        {"flops", "complexity of the three methods versus N"},
        {"selftest", "run the invariant suite and report pass/fail"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config_path, "flat key=value config file");
        sub->add_option("--set", opt.overrides, "override one key (KEY=VALUE), repeatable");
        sub->add_option("--format", opt.format, "output format: csv or jsonl");
        sub->add_option("--out", opt.out, "output file (default: standard output)");
        sub->add_option("--trials", opt.trials, "Monte Carlo trials per point");
        sub->add_option("--seed", opt.seed, "base seed");
        sub->add_option("--methods", opt.methods, "comma separated method list");
        sub->add_option("--workers", opt.workers, "worker threads (0: one per core); does not affect results");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "irs_sim: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt);
    } catch (const ConfigError& e) {
        std::cerr << "irs_sim: configuration error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "irs_sim: error: " << e.what() << '\n';
        return 2;
    }
}
