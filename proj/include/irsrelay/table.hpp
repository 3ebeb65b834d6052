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

#ifndef IRSRELAY_TABLE_HPP
#define IRSRELAY_TABLE_HPP

// Rectangular numeric result tables and their CSV / JSON-lines encodings.

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "harness.hpp"
#include "metrics.hpp"

namespace irsrelay {

enum class TableFormat { csv, jsonl };

struct OutputTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata; // emitted in this order

    bool rectangular() const
    {
        for (const auto& r : rows)
            if (r.size() != header.size())
                return false;
        return !header.empty();
    }
};

/// Shortest decimal string that reads back to exactly `v`.
inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0; // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Rates are reported with six decimals.
inline double round_rate(double v)
{
    return std::round(v * 1e6) / 1e6;
}

inline void emit_table(const OutputTable& table, TableFormat format, std::ostream& out)
{
    detail::require_config(table.rectangular(), "emit_table: table is not rectangular");
    if (format == TableFormat::csv) {
        for (const auto& [key, value] : table.metadata)
            out << "# " << key << '=' << value << '\n';
        for (std::size_t c = 0; c < table.header.size(); ++c)
            out << (c ? "," : "") << table.header[c];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << format_number(row[c]);
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata)
        meta[key] = value;
    out << nlohmann::ordered_json{{"metadata", meta}}.dump() << '\n';
    // Values use the same shortest form as CSV; JSON has no nan/inf, so those become null.
    for (const auto& row : table.rows) {
        out << '{';
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << nlohmann::ordered_json(table.header[c]).dump() << ':'
                << (std::isfinite(row[c]) ? format_number(row[c]) : std::string("null"));
        }
        out << "}\n";
    }
}

inline std::string emit_table_string(const OutputTable& table, TableFormat format)
{
    std::ostringstream os;
    emit_table(table, format, os);
    return os.str();
}

/// Writes the whole table in one go; the file is only created once the text is complete.
inline void emit_table(const OutputTable& table, TableFormat format, const std::string& path)
{
    const std::string text = emit_table_string(table, format);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

/// CSV text read back into a table.
inline OutputTable parse_csv(std::istream& in)
{
    OutputTable t;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (!have_header && line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            detail::require_config(eq != std::string::npos, "parse_csv: malformed metadata line");
            t.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
            cells.push_back(cell);
        if (!have_header) {
            t.header = std::move(cells);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) {
            double v = 0.0;
            const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
            detail::require_config(res.ec == std::errc() && res.ptr == c.data() + c.size(),
                                   "parse_csv: not a number: '" + c + "'");
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---- builders -----------------------------------------------------------------

inline OutputTable sweep_to_table(const SweepTable& sweep, std::vector<std::pair<std::string, std::string>> metadata = {})
{
    OutputTable t;
    t.metadata = std::move(metadata);
    t.header.emplace_back(to_string(sweep.axis));
    t.header.emplace_back("trials");
    for (Method m : sweep.methods) {
        t.header.push_back(std::string(to_string(m)) + "_rate");
        t.header.push_back(std::string(to_string(m)) + "_stderr");
    }
    for (const auto& r : sweep.rows) {
        std::vector<double> row{r.value, r.stats.empty() ? 0.0 : static_cast<double>(r.stats.front().trials)};
        for (const auto& s : r.stats) {
            row.push_back(round_rate(s.mean));
            row.push_back(round_rate(s.standard_error));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// One row per trial: rate_s, rate_r, rate_d and iteration counts of every method.
inline OutputTable trials_to_table(const std::vector<std::vector<RateResult>>& trials, const std::vector<Method>& methods,
                                   std::vector<std::pair<std::string, std::string>> metadata = {})
{
    OutputTable t;
    t.metadata = std::move(metadata);
    t.header.emplace_back("trial");
    for (Method m : methods)
        for (const char* col : {"_rate_s", "_rate_r", "_rate_d", "_iter_r", "_iter_d"})
            t.header.push_back(std::string(to_string(m)) + col);
    for (std::size_t i = 0; i < trials.size(); ++i) {
        std::vector<double> row{static_cast<double>(i)};
        for (const auto& r : trials[i]) {
            row.push_back(round_rate(r.rate_s));
            row.push_back(round_rate(r.rate_r));
            row.push_back(round_rate(r.rate_d));
            row.push_back(static_cast<double>(r.iterations_r));
            row.push_back(static_cast<double>(r.iterations_d));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Complexity of the three methods for fixed M over a range of N, every iteration count set to `iterations`.
inline OutputTable flops_to_table(int antennas, const std::vector<double>& elements, double iterations,
                                  std::vector<std::pair<std::string, std::string>> metadata = {})
{
    OutputTable t;
    t.metadata = std::move(metadata);
    t.header = {"N", "ais", "nsp", "irses"};
    const double m = antennas;
    for (double n : elements) {
        detail::require_config(n >= 1.0 && n == std::floor(n), "flops: N values must be positive integers");
        detail::require_config(std::fmod(n, m) == 0.0, "flops: M must divide every N (M=" + format_number(m)
                                                           + ", N=" + format_number(n) + ")");
        t.rows.push_back({n, flops_ais(m, n, iterations, iterations).flops, flops_nsp(m, n, iterations, iterations).flops,
                          flops_irses(m, n / m, n, iterations).flops});
    }
    return t;
}

} // namespace irsrelay

#endif
