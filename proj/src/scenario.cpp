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

#include "crnoma/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

namespace crnoma
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text, std::size_t line, std::string_view key)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw ScenarioError(line, "value of '" + std::string(key) + "' is not a finite number: '" +
                                      std::string(text) + "'");
    return value;
}

int parse_count(std::string_view text, std::size_t line, std::string_view key)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
        throw ScenarioError(line, "value of '" + std::string(key) + "' must be a positive integer");
    return value;
}

const std::set<std::string_view> kKnownKeys{
    "n_bs",       "m_pu",       "k_su",          "d_p_m",         "d_s_m",   "epsilon", "noise_dbm",
    "gamma_p_th", "gamma_s_th", "gamma_p_th_db", "gamma_s_th_db", "omega_h", "omega_g",
};

} // namespace

ScenarioError::ScenarioError(std::size_t line, const std::string &message)
    : ConfigError(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line)
{
}

std::string format_double(double x)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

Scenario parse_scenario(std::istream &in)
{
    std::map<std::string, std::pair<std::string, std::size_t>> entries;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ScenarioError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!kKnownKeys.contains(key))
            throw ScenarioError(line_no, "unknown key '" + std::string(key) + "'");
        if (value.empty())
            throw ScenarioError(line_no, "missing value for '" + std::string(key) + "'");
        if (!entries.emplace(std::string(key), std::pair{std::string(value), line_no}).second)
            throw ScenarioError(line_no, "duplicate key '" + std::string(key) + "'");
    }

    const auto has = [&](const char *key) { return entries.contains(key); };
    const auto real = [&](const char *key) {
        const auto &[text, line] = entries.at(key);
        return parse_real(text, line, key);
    };
    const auto count = [&](const char *key) {
        if (!has(key))
            throw ScenarioError(0, std::string("missing required key '") + key + "'");
        const auto &[text, line] = entries.at(key);
        return parse_count(text, line, key);
    };
    const auto threshold = [&](const char *linear_key, const char *db_key) {
        if (has(linear_key) && has(db_key))
            throw ScenarioError(entries.at(db_key).second,
                                std::string("'") + linear_key + "' and '" + db_key + "' are mutually exclusive");
        if (has(linear_key))
            return real(linear_key);
        if (has(db_key))
            return db_to_linear(real(db_key));
        throw ScenarioError(0, std::string("missing required key '") + linear_key + "'");
    };

    Scenario s;
    s.antennas = {count("n_bs"), count("m_pu"), count("k_su")};
    if (!has("noise_dbm"))
        throw ScenarioError(0, "missing required key 'noise_dbm'");
    s.noise_dbm = real("noise_dbm");
    s.thresholds = {threshold("gamma_p_th", "gamma_p_th_db"), threshold("gamma_s_th", "gamma_s_th_db")};
    for (const auto &[key, slot] : {std::pair{"d_p_m", &s.d_p_m}, std::pair{"d_s_m", &s.d_s_m},
                                    std::pair{"epsilon", &s.epsilon}, std::pair{"omega_h", &s.omega_h},
                                    std::pair{"omega_g", &s.omega_g}})
        if (has(key))
            *slot = real(key);

    if (!s.omega_h && !(s.d_p_m && s.epsilon))
        throw ScenarioError(0, "PU link needs 'omega_h' or both 'd_p_m' and 'epsilon'");
    if (!s.omega_g && !(s.d_s_m && s.epsilon))
        throw ScenarioError(0, "SU link needs 'omega_g' or both 'd_s_m' and 'epsilon'");

    try
    {
        s.system_config().validate();
    }
    catch (const ConfigError &e)
    {
        throw ScenarioError(0, e.what());
    }
    return s;
}

Scenario parse_scenario_string(const std::string &text)
{
    std::istringstream in(text);
    return parse_scenario(in);
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ScenarioError(0, "cannot read scenario file '" + path.string() + "'");
    return parse_scenario(in);
}

SystemConfig Scenario::system_config() const
{
    SystemConfig c;
    c.n_bs = antennas.n_bs;
    c.m_pu = antennas.m_pu;
    c.k_su = antennas.k_su;
    c.omega_h = omega_h ? *omega_h : std::pow(*d_p_m, *epsilon);
    c.omega_g = omega_g ? *omega_g : std::pow(*d_s_m, *epsilon);
    c.gamma_p_th = thresholds.gamma_p_th;
    c.gamma_s_th = thresholds.gamma_s_th;
    c.validate();
    return c;
}

double Scenario::rho_at(double tx_power_dbm) const
{
    return transmit_snr(tx_power_dbm, noise_dbm);
}

std::map<std::string, std::string> Scenario::resolved_entries() const
{
    const SystemConfig c = system_config();
    std::map<std::string, std::string> out{
        {"n_bs", std::to_string(c.n_bs)},
        {"m_pu", std::to_string(c.m_pu)},
        {"k_su", std::to_string(c.k_su)},
        {"omega_h", format_double(c.omega_h)},
        {"omega_g", format_double(c.omega_g)},
        {"noise_dbm", format_double(noise_dbm)},
        {"gamma_p_th", format_double(c.gamma_p_th)},
        {"gamma_s_th", format_double(c.gamma_s_th)},
    };
    if (d_p_m)
        out["d_p_m"] = format_double(*d_p_m);
    if (d_s_m)
        out["d_s_m"] = format_double(*d_s_m);
    if (epsilon)
        out["epsilon"] = format_double(*epsilon);
    return out;
}

} // namespace crnoma
