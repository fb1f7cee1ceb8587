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

// Closed-form outage analysis of SJ-AS under i.i.d. Rayleigh fading.
//
// Notation used throughout this header, for one BS antenna n:
//   h^(n) = max_m h_nm,  g^(n) = max_k g_nk,  beta^(n) = min(h^(n), g^(n))
//   c1 = gp / rho,  c2 = gs (gp + 1) / rho
//   c_mk = (-1)^(m+k) C(M,m) C(K,k),  phi_mk = m Oh + k Og,  psi_mk = m Oh c1 + k Og c2
// with gp, gs the PU/SU thresholds and Oh, Og the reciprocal mean gains.
//
// The alternating double sums are accurate for M, K <= 10 at the gain
// magnitudes of typical link budgets; beyond that, cancellation dominates.

#include "crnoma/config.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace crnoma
{

enum class Summation
{
    compensated,
    naive,
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum
{
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Exact C(n, k) for 0 <= k <= n <= 62; throws std::domain_error otherwise.
std::uint64_t binomial(int n, int k);

/// Per-SNR constants shared by the outage expressions.
class AnalyticTerms
{
public:
    AnalyticTerms(const SystemConfig &config, double rho);

    double c1() const noexcept { return c1_; }
    double c2() const noexcept { return c2_; }
    /// m in [1, M], k in [1, K] (m = 0 or k = 0 terms vanish in every sum).
    double c_mk(int m, int k) const;
    double phi_mk(int m, int k) const noexcept;
    double psi_mk(int m, int k) const noexcept;

    const SystemConfig &config() const noexcept { return config_; }
    double rho() const noexcept { return rho_; }

private:
    SystemConfig config_;
    double rho_;
    double c1_;
    double c2_;
};

/// CDF of h^(n): (1 - e^{-Oh x})^M. Throws std::domain_error for x < 0.
double cdf_row_max_h(double x, const SystemConfig &config);
/// CDF of g^(n): (1 - e^{-Og x})^K. Throws std::domain_error for x < 0.
double cdf_row_max_g(double x, const SystemConfig &config);

/// PDF of h^(n) in binomial-expanded form: -sum_{m=1}^M (-1)^m C(M,m) m Oh e^{-m Oh x}.
double pdf_row_max_h(double x, const SystemConfig &config);
/// PDF of g^(n) in binomial-expanded form.
double pdf_row_max_g(double x, const SystemConfig &config);

/// CDF of beta^(n): 1 - (1 - F_h(x)) (1 - F_g(x)). Throws std::domain_error for x < 0.
double cdf_beta(double x, const SystemConfig &config);

/// Probability that no BS antenna can carry the PU: F_beta(c1)^N.
double p_outage_o1(const SystemConfig &config, double rho);

/// Pr(c1 < g^(n) < c1 + c2, h^(n) >= g^(n)); exact.
double q1_term(const SystemConfig &config, double rho, Summation mode = Summation::compensated);

/// High-SNR approximation Pr(c1 < h^(n) < g^(n) < c2) of the second SU-outage region; 0 when c2 <= c1.
double q2_term(const SystemConfig &config, double rho, Summation mode = Summation::compensated);

/// Pr(|S_2| = ell) = C(N, ell) F_beta(c1)^(N-ell) (1 - F_beta(c1))^ell.
/// Throws std::domain_error unless 0 <= ell <= N.
double p_subset_size(const SystemConfig &config, double rho, int ell);

/// Conditional CDF of the SU SNR of one feasible candidate at gs: (Q1 + Q2) / (1 - F_beta(c1)).
double f_alpha(const SystemConfig &config, double rho);

/// Asymptotic system outage of SJ-AS (raw, may leave [0, 1] at low SNR):
///   sum_{l=0}^N C(N,l) S^l F_beta(c1)^(N-l),
///   S = sum_mk c_mk (e^{-phi c1} - e^{-psi} + k Og e^{-phi c2} (1 - e^{-phi c1}) / phi).
/// The l = 0 term is p_outage_o1.
double p_outage_asymptotic(const SystemConfig &config, double rho, Summation mode = Summation::compensated);

/// Leading-order high-SNR outage zeta^N / rho^(N min(M,K)).
double p_outage_high_snr(const SystemConfig &config, double rho);

/// N min(M, K).
int diversity_order(const SystemConfig &config);

/// True when the asymptotic expression should not be trusted at this SNR:
/// raw value above 1, or rho min(1/Oh, 1/Og) < 10 gp.
bool asymptotic_regime_violated(const SystemConfig &config, double rho, double raw);

struct AnalyticCurve
{
    std::vector<double> rho_grid;
    std::vector<double> p_outage;     // clamped to [0, 1]
    std::vector<double> p_outage_raw; // as evaluated
    std::vector<double> p_highsnr;
    std::vector<bool> regime_flag;
    int diversity = 0;
};

AnalyticCurve analytic_curve(const SystemConfig &config, std::span<const double> rho_grid);

/// Least-squares slope of log10(y) against log10(x). Needs at least two
/// points with positive coordinates; throws std::domain_error otherwise.
double loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace crnoma
