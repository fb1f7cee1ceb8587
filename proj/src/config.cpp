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

#include "crnoma/config.hpp"

#include <cmath>

namespace crnoma
{

namespace
{
bool positive_finite(double x)
{
    return std::isfinite(x) && x > 0.0;
}
} // namespace

void SystemConfig::validate() const
{
    if (n_bs < 1 || m_pu < 1 || k_su < 1)
        throw ConfigError("antenna counts must be >= 1");
    if (!positive_finite(omega_h) || !positive_finite(omega_g))
        throw ConfigError("omega_h and omega_g must be positive and finite");
    if (!positive_finite(gamma_p_th) || !positive_finite(gamma_s_th))
        throw ConfigError("gamma_p_th and gamma_s_th must be positive and finite");
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double dbm_to_watts(double dbm)
{
    return db_to_linear(dbm) * 1e-3;
}

double transmit_snr(double tx_power_dbm, double noise_power_dbm)
{
    const double rho = db_to_linear(tx_power_dbm - noise_power_dbm);
    if (!positive_finite(rho))
        throw ConfigError("transmit SNR is not positive and finite");
    return rho;
}

DerivedConfig derive_config(const LinkBudget &budget, AntennaCounts antennas, Thresholds thresholds)
{
    if (!positive_finite(budget.d_p) || !positive_finite(budget.d_s))
        throw ConfigError("distances must be positive and finite");
    if (!positive_finite(budget.epsilon))
        throw ConfigError("path-loss exponent must be positive and finite");

    DerivedConfig out;
    out.config.n_bs = antennas.n_bs;
    out.config.m_pu = antennas.m_pu;
    out.config.k_su = antennas.k_su;
    out.config.omega_h = std::pow(budget.d_p, budget.epsilon);
    out.config.omega_g = std::pow(budget.d_s, budget.epsilon);
    out.config.gamma_p_th = thresholds.gamma_p_th;
    out.config.gamma_s_th = thresholds.gamma_s_th;
    out.config.validate();
    out.rho = transmit_snr(budget.tx_power_dbm, budget.noise_power_dbm);
    return out;
}

} // namespace crnoma
