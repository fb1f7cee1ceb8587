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

// Scenario files: `key = value` lines, `#` starts a comment.
//
//   n_bs, m_pu, k_su             antenna counts (required)
//   d_p_m, d_s_m, epsilon        distance model, omega = d^epsilon
//   noise_dbm                    noise power (required)
//   gamma_p_th, gamma_s_th       linear thresholds, or
//   gamma_p_th_db, gamma_s_th_db the same in dB
//   omega_h, omega_g             optional; override the distance model per link

#include "crnoma/config.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace crnoma
{

/// Malformed scenario input; `line()` is 1-based, 0 when the problem is a missing key.
class ScenarioError : public ConfigError
{
public:
    ScenarioError(std::size_t line, const std::string &message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct Scenario
{
    AntennaCounts antennas;
    std::optional<double> d_p_m;
    std::optional<double> d_s_m;
    std::optional<double> epsilon;
    double noise_dbm = 0.0;
    Thresholds thresholds;
    std::optional<double> omega_h;
    std::optional<double> omega_g;

    /// Resolved system configuration (overrides take precedence over distances).
    SystemConfig system_config() const;
    /// Transmit SNR at the given transmit power.
    double rho_at(double tx_power_dbm) const;
    /// Canonical key/value echo of the resolved scenario; parses back to the same config.
    std::map<std::string, std::string> resolved_entries() const;
};

Scenario parse_scenario(std::istream &in);
Scenario parse_scenario_string(const std::string &text);
/// Throws ScenarioError(0, ...) if the file cannot be read.
Scenario load_scenario(const std::filesystem::path &path);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

} // namespace crnoma
