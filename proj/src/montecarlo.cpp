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

#include "crnoma/montecarlo.hpp"

#include "crnoma/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace crnoma
{

namespace
{

struct Partial
{
    std::uint64_t outages = 0;
    double sum_gamma_s = 0.0;
    double sum_b = 0.0;
};

Partial combine(const Partial &a, const Partial &b)
{
    return {a.outages + b.outages, a.sum_gamma_s + b.sum_gamma_s, a.sum_b + b.sum_b};
}

// Fixed-shape pairwise reduction over [lo, hi).
Partial reduce(const std::vector<Partial> &parts, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1)
        return parts[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return combine(reduce(parts, lo, mid), reduce(parts, mid, hi));
}

Partial run_chunk(const ExperimentPlan &plan, Scheme scheme, std::size_t point, double rho, std::uint64_t first,
                  std::uint64_t last)
{
    Partial part;
    ChannelRealization ch;
    for (std::uint64_t t = first; t < last; ++t)
    {
        CounterStream channel(channel_stream_id(plan, scheme, point, t));
        sample_channels(plan.config, channel, ch);
        CounterStream pick(pick_stream_id(plan, scheme, point, t));
        const SelectionOutcome out = run_scheme(scheme, ch, plan.config, rho, pick);
        part.outages += out.outage ? 1u : 0u;
        part.sum_gamma_s += out.gamma_s;
        part.sum_b += out.b;
    }
    return part;
}

unsigned resolve_workers(unsigned requested, std::size_t chunks)
{
    unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(w, chunks));
}

} // namespace

void ExperimentPlan::validate() const
{
    config.validate();
    if (trials == 0)
        throw std::domain_error("experiment needs at least one trial");
    if (power_grid_dbm.empty())
        throw std::domain_error("power grid is empty");
    if (power_grid_dbm.size() >= (1u << 24))
        throw std::domain_error("power grid too large");
    for (std::size_t i = 1; i < power_grid_dbm.size(); ++i)
        if (!(power_grid_dbm[i] > power_grid_dbm[i - 1]))
            throw std::domain_error("power grid must be strictly increasing");
    if (schemes.empty())
        throw std::domain_error("no schemes selected");
}

double ExperimentPlan::rho_at(std::size_t point) const
{
    return transmit_snr(power_grid_dbm.at(point), budget.noise_power_dbm);
}

StreamId channel_stream_id(const ExperimentPlan &plan, Scheme scheme, std::size_t point, std::uint64_t trial)
{
    const std::uint8_t tag = plan.paired ? stream_tag::channel : stream_tag::channel_for(scheme_id(scheme));
    return {plan.master_seed, static_cast<std::uint32_t>(point), trial, tag};
}

StreamId pick_stream_id(const ExperimentPlan &plan, Scheme /*scheme*/, std::size_t point, std::uint64_t trial)
{
    return {plan.master_seed, static_cast<std::uint32_t>(point), trial, stream_tag::random_pick};
}

double ci95_halfwidth(double p_hat, std::uint64_t trials)
{
    return 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

OutageEstimate run_point(const ExperimentPlan &plan, Scheme scheme, std::size_t point, const RunOptions &options)
{
    plan.validate();
    if (point >= plan.power_grid_dbm.size())
        throw std::out_of_range("run_point: grid index out of range");
    const double rho = plan.rho_at(point);

    const std::uint64_t chunks = (plan.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
    std::vector<Partial> parts(chunks);
    std::atomic<std::uint64_t> next{0};
    const auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++)
        {
            const std::uint64_t first = c * kTrialsPerChunk;
            const std::uint64_t last = std::min(plan.trials, first + kTrialsPerChunk);
            parts[c] = run_chunk(plan, scheme, point, rho, first, last);
        }
    };

    const unsigned workers = resolve_workers(options.workers, chunks);
    if (workers <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(worker);
    }

    const Partial total = reduce(parts, 0, parts.size());
    const auto n = static_cast<double>(plan.trials);

    OutageEstimate est;
    est.scheme = scheme;
    est.point = point;
    est.power_dbm = plan.power_grid_dbm[point];
    est.rho = rho;
    est.trials = plan.trials;
    est.outages = total.outages;
    est.p_hat = static_cast<double>(total.outages) / n;
    est.ci95_halfwidth = ci95_halfwidth(est.p_hat, plan.trials);
    est.mean_gamma_s = total.sum_gamma_s / n;
    est.mean_b = total.sum_b / n;
    return est;
}

std::vector<OutageEstimate> run_plan(const ExperimentPlan &plan, const RunOptions &options)
{
    plan.validate();
    std::vector<OutageEstimate> out;
    out.reserve(plan.schemes.size() * plan.power_grid_dbm.size());
    for (Scheme s : plan.schemes)
        for (std::size_t p = 0; p < plan.power_grid_dbm.size(); ++p)
            out.push_back(run_point(plan, s, p, options));
    return out;
}

} // namespace crnoma
