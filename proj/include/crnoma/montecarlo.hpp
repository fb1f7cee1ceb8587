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

#include "crnoma/config.hpp"
#include "crnoma/rng.hpp"
#include "crnoma/selection.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crnoma
{

/// A Monte Carlo experiment: schemes x transmit powers, `trials` channel draws per point.
///
/// In paired mode (default) every scheme sees the same channel draw for a given
/// (point, trial); otherwise each scheme draws from its own stream.
struct ExperimentPlan
{
    SystemConfig config;
    LinkBudget budget; // only noise_power_dbm is read; omegas come from `config`
    std::vector<double> power_grid_dbm;
    std::vector<Scheme> schemes;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    bool paired = true;

    /// Throws std::domain_error on zero trials, an empty or unsorted grid, or no schemes.
    void validate() const;
    double rho_at(std::size_t point) const;
};

/// Outage and averages for one (scheme, power) point.
///
/// mean_gamma_s and mean_b average over all trials; infeasible trials
/// contribute zero to both.
struct OutageEstimate
{
    Scheme scheme = Scheme::sjas;
    std::size_t point = 0;
    double power_dbm = 0.0;
    double rho = 0.0;
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outages = 0;
    double ci95_halfwidth = 0.0; // normal approximation
    double mean_gamma_s = 0.0;   // linear
    double mean_b = 0.0;
};

struct RunOptions
{
    unsigned workers = 0; // 0: one per hardware thread
};

/// Trials per work unit. Fixed, so the reduction tree does not depend on the worker count.
inline constexpr std::uint64_t kTrialsPerChunk = 4096;

StreamId channel_stream_id(const ExperimentPlan &plan, Scheme scheme, std::size_t point, std::uint64_t trial);
StreamId pick_stream_id(const ExperimentPlan &plan, Scheme scheme, std::size_t point, std::uint64_t trial);

/// Runs `plan.trials` draws of one scheme at grid point `point`.
/// Bit-identical for any worker count.
OutageEstimate run_point(const ExperimentPlan &plan, Scheme scheme, std::size_t point, const RunOptions &options = {});

/// Every scheme at every grid point, ordered by scheme (as listed) then ascending power.
std::vector<OutageEstimate> run_plan(const ExperimentPlan &plan, const RunOptions &options = {});

/// 1.96 sqrt(p (1 - p) / n).
double ci95_halfwidth(double p_hat, std::uint64_t trials);

} // namespace crnoma
