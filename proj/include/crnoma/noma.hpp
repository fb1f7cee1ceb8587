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

namespace crnoma
{

/// Superposition power split. Only the SU share b is stored; a = 1 - b.
class PowerSplit
{
public:
    constexpr PowerSplit() = default;
    /// Throws std::invalid_argument unless 0 <= b < 1.
    explicit PowerSplit(double b);

    constexpr double b() const noexcept { return b_; }
    constexpr double a() const noexcept { return 1.0 - b_; }

private:
    double b_ = 0.0;
};

/// Gains of the selected antenna pair and the transmit SNR.
struct LinkState
{
    double h = 0.0; // BS to PU
    double g = 0.0; // BS to SU
    double rho = 1.0;
};

/// Largest SU share that keeps both SIC stages decodable for the PU signal:
/// b = max((beta rho - gp) / ((gp + 1) beta rho), 0) with beta = min(h, g).
/// Returns b = 0 when beta = 0 or beta rho <= gp (SU not served).
PowerSplit optimal_b(const LinkState &link, double gamma_p_th);

/// SINR of the PU signal at the PU, SU signal treated as noise: a h / (b h + 1/rho).
double sinr_pu(const LinkState &link, const PowerSplit &split);

/// SINR of the PU signal at the SU (first SIC stage): a g / (b g + 1/rho).
double sinr_su_decode_pu(const LinkState &link, const PowerSplit &split);

/// SNR of the SU signal after the PU signal is removed: b g rho.
double snr_su(const LinkState &link, const PowerSplit &split);

/// SU SNR under the optimal split, in closed form; 0 when the PU target cannot be met.
double achievable_gamma_s(const LinkState &link, double gamma_p_th);

/// Same value as achievable_gamma_s from the raw gains, without building a LinkState.
/// Hot path of the selection schemes.
inline double achievable_gamma_s(double h, double g, double rho, double gamma_p_th) noexcept
{
    const double beta = h < g ? h : g;
    if (!(beta * rho > gamma_p_th))
        return 0.0;
    return (beta * rho - gamma_p_th) / ((gamma_p_th + 1.0) * beta) * g;
}

/// Optimal SU share from the raw gains; 0 when infeasible.
inline double optimal_b_value(double h, double g, double rho, double gamma_p_th) noexcept
{
    const double beta = h < g ? h : g;
    if (!(beta * rho > gamma_p_th))
        return 0.0;
    return (beta * rho - gamma_p_th) / ((gamma_p_th + 1.0) * beta * rho);
}

} // namespace crnoma
