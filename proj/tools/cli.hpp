// Copyright 2026 The crnoma Authors
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

#pragma once

#include "crnoma/analytic.hpp"
#include "crnoma/montecarlo.hpp"
#include "crnoma/scenario.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crnoma::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr std::uint64_t kLowTrialWarning = 1000;

/// Bad flags, malformed config or CSV input. Maps to exit code 2.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable files. Maps to exit code 3.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// `start:stop:step` (inclusive) or a comma-separated list, in dBm.
std::vector<double> parse_power_grid(std::string_view text);

/// `all` or a comma-separated list of scheme names.
std::vector<Scheme> parse_scheme_list(std::string_view text);

/// --seed wins, then CRNOMA_SEED, then kDefaultSeed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char *env_value);

inline constexpr std::string_view kSimulateHeader =
    "scheme,power_dbm,rho,p_outage,ci95,mean_gamma_s_db,mean_b,trials";
inline constexpr std::string_view kAnalyticHeader =
    "power_dbm,rho,p_outage_asymptotic,p_outage_highsnr,regime_flag,diversity";

/// Shortest round-trip text; "-inf" for zero in dB columns.
std::string format_db(double linear);

std::string simulate_csv(const std::vector<OutageEstimate> &estimates);
std::string analytic_csv(const SystemConfig &config, double noise_dbm, const std::vector<double> &grid_dbm);

/// Table of mean b, rows Random, Max-min, ES, SJ-AS, one column per power.
struct Table1
{
    std::vector<double> power_dbm;
    std::vector<Scheme> rows;
    std::vector<std::vector<double>> mean_b; // [row][column]
};

inline constexpr double kTable1Powers[] = {0.0, 5.0, 10.0, 15.0, 20.0};

Table1 table1_from(const std::vector<OutageEstimate> &estimates);
std::string table1_text(const Table1 &table);
std::string table1_csv(const Table1 &table);

/// A parsed CSV: header names and rows of raw fields.
struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws InputError naming the missing column.
    std::size_t column(std::string_view name) const;
    bool has_column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text, const std::string &origin);

/// Series of one plot: (power_dbm, value) pairs in input order.
struct Series
{
    std::string name;
    std::vector<double> power_dbm;
    std::vector<double> value;
};

struct PlotData
{
    std::vector<Series> outage; // per scheme plus analytic
    std::vector<Series> snr_db; // per scheme
};

/// Collects series from simulate and analytic CSVs (detected by their header).
PlotData collect_plot_data(const std::vector<CsvTable> &tables);

/// Least-squares log-log slope over the last decade of transmit SNR, skipping zeros.
/// Empty when fewer than two usable points remain.
std::optional<double> top_decade_slope(const Series &outage);

std::string outage_dat(const PlotData &data);
std::string snr_dat(const PlotData &data);
std::string gnuplot_script(const PlotData &data);

/// Run manifest: tool version, timestamp, resolved scenario, flags, seed and
/// averaging conventions. `scenario` is null for commands that read no config.
nlohmann::json make_manifest(const std::string &command, const Scenario *scenario, const nlohmann::json &flags,
                             std::optional<std::uint64_t> seed);

/// `<out>.manifest.json` for files, `<out>/manifest.json` for directories.
std::filesystem::path manifest_path(const std::filesystem::path &out);

/// Runs one command line; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace crnoma::cli
