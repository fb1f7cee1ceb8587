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

#include <stdexcept>
#include <string>

namespace crnoma
{

/// Raised when a configuration is incomplete, out of range, or derives non-finite values.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Immutable parameter set of one experiment.
///
/// Gains are modelled as exponential variates: `omega_h` and `omega_g` are the
/// reciprocal mean gains of the BS-PU and BS-SU links. Thresholds are linear.
struct SystemConfig
{
    int n_bs = 1; ///< BS antennas
    int m_pu = 1; ///< PU antennas
    int k_su = 1; ///< SU antennas
    double omega_h = 1.0;
    double omega_g = 1.0;
    double gamma_p_th = 1.0;
    double gamma_s_th = 1.0;

    /// Throws ConfigError if any field violates its range.
    void validate() const;
};

/// Distance-based path-loss model and link powers.
struct LinkBudget
{
    double d_p = 1.0;     // meters, BS-PU
    double d_s = 1.0;     // meters, BS-SU
    double epsilon = 3.0; // path-loss exponent
    double noise_power_dbm = -70.0;
    double tx_power_dbm = 0.0;
};

struct AntennaCounts
{
    int n_bs = 1;
    int m_pu = 1;
    int k_su = 1;
};

struct Thresholds
{
    double gamma_p_th = 1.0;
    double gamma_s_th = 1.0;
};

struct DerivedConfig
{
    SystemConfig config;
    double rho = 1.0; // transmit SNR P / sigma^2, linear
};

/// omega = d^epsilon for both links, rho = 10^((P - sigma^2)/10) with both powers in dBm.
DerivedConfig derive_config(const LinkBudget &budget, AntennaCounts antennas, Thresholds thresholds);

/// Transmit SNR from transmit and noise power, both in dBm.
double transmit_snr(double tx_power_dbm, double noise_power_dbm);

double db_to_linear(double db);
double linear_to_db(double linear);

/// x dBm = 10^(x/10) mW.
double dbm_to_watts(double dbm);

} // namespace crnoma
