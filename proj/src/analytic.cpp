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

#include "crnoma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace crnoma
{

namespace
{

void require_nonnegative(double x)
{
    if (!(x >= 0.0))
        throw std::domain_error("CDF argument must be nonnegative");
}

// 1 - e^{-rate x}, accurate for small arguments.
double one_minus_exp(double rate, double x)
{
    return -std::expm1(-rate * x);
}

double alternating_sign(int power)
{
    return (power % 2 == 0) ? 1.0 : -1.0;
}

class Accumulator
{
public:
    explicit Accumulator(Summation mode) : mode_(mode) {}

    void add(double x) noexcept
    {
        if (mode_ == Summation::compensated)
            compensated_.add(x);
        else
            naive_ += x;
    }

    double value() const noexcept
    {
        return mode_ == Summation::compensated ? compensated_.value() : naive_;
    }

private:
    Summation mode_;
    CompensatedSum compensated_;
    double naive_ = 0.0;
};

// sum_{m=1}^M sum_{k=1}^K c_mk * term(m, k)
template <typename Term>
double double_sum(const AnalyticTerms &t, Summation mode, Term term)
{
    Accumulator acc(mode);
    for (int m = 1; m <= t.config().m_pu; ++m)
        for (int k = 1; k <= t.config().k_su; ++k)
            acc.add(t.c_mk(m, k) * term(m, k));
    return acc.value();
}

// Sum of the SU-outage contributions Q1 + Q2 folded into one term per (m, k).
double q1_sum(const AnalyticTerms &t, Summation mode)
{
    const double og = t.config().omega_g;
    return double_sum(t, mode, [&](int m, int k) {
        const double phi = t.phi_mk(m, k);
        return k * og * std::exp(-phi * t.c1()) * one_minus_exp(phi, t.c2()) / phi;
    });
}

double feasible_outage_mass(const AnalyticTerms &t, Summation mode)
{
    // c1 < h < g < c2 is empty.
    if (t.c2() <= t.c1())
        return q1_sum(t, mode);
    const double og = t.config().omega_g;
    return double_sum(t, mode, [&](int m, int k) {
        const double phi = t.phi_mk(m, k);
        return std::exp(-phi * t.c1()) - std::exp(-t.psi_mk(m, k)) +
               k * og * std::exp(-phi * t.c2()) * one_minus_exp(phi, t.c1()) / phi;
    });
}

double expanded_max_pdf(double x, int count, double rate)
{
    CompensatedSum acc;
    for (int j = 1; j <= count; ++j)
        acc.add(-alternating_sign(j) * static_cast<double>(binomial(count, j)) * j * rate * std::exp(-j * rate * x));
    return acc.value();
}

} // namespace

void CompensatedSum::add(double x) noexcept
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        compensation_ += (sum_ - t) + x;
    else
        compensation_ += (x - t) + sum_;
    sum_ = t;
}

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n || n > 62)
        throw std::domain_error("binomial: need 0 <= k <= n <= 62");
    k = std::min(k, n - k);
    // r * (n - i) / (i + 1) is an integer; dividing out the gcd first keeps
    // every intermediate below the final value times n.
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
    {
        const auto num = static_cast<std::uint64_t>(n - i);
        const auto den = static_cast<std::uint64_t>(i + 1);
        const std::uint64_t g = std::gcd(r, den);
        r = (r / g) * (num / (den / g));
    }
    return r;
}

AnalyticTerms::AnalyticTerms(const SystemConfig &config, double rho)
    : config_(config), rho_(rho), c1_(config.gamma_p_th / rho),
      c2_(config.gamma_s_th * (config.gamma_p_th + 1.0) / rho)
{
    config_.validate();
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::domain_error("rho must be positive and finite");
}

double AnalyticTerms::c_mk(int m, int k) const
{
    return alternating_sign(m + k) * static_cast<double>(binomial(config_.m_pu, m)) *
           static_cast<double>(binomial(config_.k_su, k));
}

double AnalyticTerms::phi_mk(int m, int k) const noexcept
{
    return m * config_.omega_h + k * config_.omega_g;
}

double AnalyticTerms::psi_mk(int m, int k) const noexcept
{
    return m * config_.omega_h * c1_ + k * config_.omega_g * c2_;
}

double cdf_row_max_h(double x, const SystemConfig &config)
{
    require_nonnegative(x);
    return std::pow(one_minus_exp(config.omega_h, x), config.m_pu);
}

double cdf_row_max_g(double x, const SystemConfig &config)
{
    require_nonnegative(x);
    return std::pow(one_minus_exp(config.omega_g, x), config.k_su);
}

double pdf_row_max_h(double x, const SystemConfig &config)
{
    require_nonnegative(x);
    return expanded_max_pdf(x, config.m_pu, config.omega_h);
}

double pdf_row_max_g(double x, const SystemConfig &config)
{
    require_nonnegative(x);
    return expanded_max_pdf(x, config.k_su, config.omega_g);
}

double cdf_beta(double x, const SystemConfig &config)
{
    // 1 - (1 - a)(1 - b) expanded to avoid cancellation when both CDFs are tiny.
    const double a = cdf_row_max_h(x, config);
    const double b = cdf_row_max_g(x, config);
    return a + b - a * b;
}

double p_outage_o1(const SystemConfig &config, double rho)
{
    const AnalyticTerms t(config, rho);
    return std::pow(cdf_beta(t.c1(), config), config.n_bs);
}

double q1_term(const SystemConfig &config, double rho, Summation mode)
{
    return q1_sum(AnalyticTerms(config, rho), mode);
}

double q2_term(const SystemConfig &config, double rho, Summation mode)
{
    const AnalyticTerms t(config, rho);
    if (t.c2() <= t.c1())
        return 0.0;
    const double oh = config.omega_h;
    const double og = config.omega_g;
    return double_sum(t, mode, [&](int m, int k) {
        const double phi = t.phi_mk(m, k);
        return (m * oh * std::exp(-phi * t.c1()) + k * og * std::exp(-phi * t.c2())) / phi -
               std::exp(-t.psi_mk(m, k));
    });
}

double p_subset_size(const SystemConfig &config, double rho, int ell)
{
    if (ell < 0 || ell > config.n_bs)
        throw std::domain_error("p_subset_size: ell must lie in [0, N]");
    const AnalyticTerms t(config, rho);
    const double fb = cdf_beta(t.c1(), config);
    return static_cast<double>(binomial(config.n_bs, ell)) * std::pow(fb, config.n_bs - ell) *
           std::pow(1.0 - fb, ell);
}

double f_alpha(const SystemConfig &config, double rho)
{
    const AnalyticTerms t(config, rho);
    return (q1_term(config, rho) + q2_term(config, rho)) / (1.0 - cdf_beta(t.c1(), config));
}

double p_outage_asymptotic(const SystemConfig &config, double rho, Summation mode)
{
    const AnalyticTerms t(config, rho);
    const double s = feasible_outage_mass(t, mode);
    const double fb = cdf_beta(t.c1(), config);
    const int n = config.n_bs;

    Accumulator acc(mode);
    acc.add(std::pow(fb, n));
    for (int ell = 1; ell <= n; ++ell)
        acc.add(static_cast<double>(binomial(n, ell)) * std::pow(s, ell) * std::pow(fb, n - ell));
    return acc.value();
}

double p_outage_high_snr(const SystemConfig &config, double rho)
{
    config.validate();
    // zeta / rho^min(M,K) regrouped as x^M + y^K - x^M y^K to stay in range.
    const double x = config.omega_h * config.gamma_p_th / rho;
    const double y = config.omega_g * config.gamma_p_th / rho;
    const double xm = std::pow(x, config.m_pu);
    const double yk = std::pow(y, config.k_su);
    return std::pow(xm + yk - xm * yk, config.n_bs);
}

int diversity_order(const SystemConfig &config)
{
    return config.n_bs * std::min(config.m_pu, config.k_su);
}

bool asymptotic_regime_violated(const SystemConfig &config, double rho, double raw)
{
    const double mean_gain = std::min(1.0 / config.omega_h, 1.0 / config.omega_g);
    return raw > 1.0 || rho * mean_gain < 10.0 * config.gamma_p_th;
}

AnalyticCurve analytic_curve(const SystemConfig &config, std::span<const double> rho_grid)
{
    AnalyticCurve curve;
    curve.diversity = diversity_order(config);
    curve.rho_grid.assign(rho_grid.begin(), rho_grid.end());
    for (double rho : rho_grid)
    {
        const double raw = p_outage_asymptotic(config, rho);
        curve.p_outage_raw.push_back(raw);
        curve.p_outage.push_back(std::clamp(raw, 0.0, 1.0));
        curve.p_highsnr.push_back(p_outage_high_snr(config, rho));
        curve.regime_flag.push_back(asymptotic_regime_violated(config, rho, raw));
    }
    return curve;
}

double loglog_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("loglog_slope: need two or more paired points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::domain_error("loglog_slope: coordinates must be positive");
        const double lx = std::log10(x[i]);
        const double ly = std::log10(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(x.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw std::domain_error("loglog_slope: abscissae must differ");
    return (n * sxy - sx * sy) / denom;
}

} // namespace crnoma
