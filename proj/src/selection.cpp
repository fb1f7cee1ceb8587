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

#include "crnoma/selection.hpp"

#include "crnoma/noma.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

namespace crnoma
{

namespace
{

void count(OpCounter *counter, std::uint64_t steps)
{
    if (counter != nullptr)
        counter->steps += steps;
}

SelectionOutcome outcome_for(const AntennaTriple &triple, double h, double g, double rho,
                             const SystemConfig &config)
{
    SelectionOutcome out;
    const double b = optimal_b_value(h, g, rho, config.gamma_p_th);
    if (!(b > 0.0))
        return out;
    out.feasible = true;
    out.triple = triple;
    out.b = b;
    out.gamma_s = achievable_gamma_s(h, g, rho, config.gamma_p_th);
    out.outage = out.gamma_s < config.gamma_s_th;
    return out;
}

} // namespace

std::string_view scheme_name(Scheme scheme) noexcept
{
    switch (scheme)
    {
    case Scheme::sjas:
        return "sjas";
    case Scheme::es:
        return "es";
    case Scheme::maxmin:
        return "maxmin";
    case Scheme::random:
        return "random";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name)
{
    for (Scheme s : kAllSchemes)
        if (scheme_name(s) == name)
            return s;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

int scheme_id(Scheme scheme) noexcept
{
    return static_cast<int>(scheme);
}

std::vector<CandidatePair> build_candidates(const ChannelRealization &ch, OpCounter *counter)
{
    const std::size_t n_rows = ch.h.rows();
    std::vector<CandidatePair> pairs(n_rows);
    for (std::size_t n = 0; n < n_rows; ++n)
    {
        CandidatePair &p = pairs[n];
        p.n = static_cast<int>(n);

        const auto h_row = ch.h.row(n);
        p.h_max = h_row[0];
        for (std::size_t m = 1; m < h_row.size(); ++m)
            if (h_row[m] > p.h_max)
            {
                p.h_max = h_row[m];
                p.m_idx = static_cast<int>(m);
            }

        const auto g_row = ch.g.row(n);
        p.g_max = g_row[0];
        for (std::size_t k = 1; k < g_row.size(); ++k)
            if (g_row[k] > p.g_max)
            {
                p.g_max = g_row[k];
                p.k_idx = static_cast<int>(k);
            }

        p.beta = p.h_max < p.g_max ? p.h_max : p.g_max;
        count(counter, h_row.size() + g_row.size());
    }
    return pairs;
}

SelectionOutcome sj_as(const ChannelRealization &ch, const SystemConfig &config, double rho, OpCounter *counter)
{
    const std::vector<CandidatePair> s1 = build_candidates(ch, counter);

    // Stages 2 and 3 fused: a candidate enters S_2 iff beta > gp / rho, and
    // only members of S_2 are compared on the SU SNR.
    const double beta_min = config.gamma_p_th / rho;
    const CandidatePair *best = nullptr;
    double best_gamma = 0.0;
    for (const CandidatePair &p : s1)
    {
        count(counter, 1);
        if (!(p.beta > beta_min))
            continue;
        count(counter, 1);
        const double gamma = achievable_gamma_s(p.h_max, p.g_max, rho, config.gamma_p_th);
        if (best == nullptr || gamma > best_gamma)
        {
            best = &p;
            best_gamma = gamma;
        }
    }

    if (best == nullptr)
        return {};
    return outcome_for({best->n, best->m_idx, best->k_idx}, best->h_max, best->g_max, rho, config);
}

SelectionOutcome es_as(const ChannelRealization &ch, const SystemConfig &config, double rho, OpCounter *counter)
{
    std::optional<AntennaTriple> best;
    double best_gamma = 0.0;
    for (std::size_t n = 0; n < ch.h.rows(); ++n)
        for (std::size_t m = 0; m < ch.h.cols(); ++m)
            for (std::size_t k = 0; k < ch.g.cols(); ++k)
            {
                count(counter, 1);
                const double h = ch.h(n, m);
                const double g = ch.g(n, k);
                if (optimal_b_value(h, g, rho, config.gamma_p_th) <= 0.0)
                    continue;
                const double gamma = achievable_gamma_s(h, g, rho, config.gamma_p_th);
                if (!best || gamma > best_gamma)
                {
                    best = AntennaTriple{static_cast<int>(n), static_cast<int>(m), static_cast<int>(k)};
                    best_gamma = gamma;
                }
            }

    if (!best)
        return {};
    return evaluate_triple(ch, config, rho, *best);
}

SelectionOutcome maxmin_as(const ChannelRealization &ch, const SystemConfig &config, double rho,
                           MaxMinSearch search)
{
    // Lexicographic key: (min(h, g), g, h); strictly greater wins.
    using Key = std::tuple<double, double, double>;
    AntennaTriple best{};
    Key best_key{-1.0, -1.0, -1.0};

    if (search == MaxMinSearch::row_maxima)
    {
        for (const CandidatePair &p : build_candidates(ch))
        {
            const Key key{p.beta, p.g_max, p.h_max};
            if (key > best_key)
            {
                best_key = key;
                best = {p.n, p.m_idx, p.k_idx};
            }
        }
    }
    else
    {
        for (std::size_t n = 0; n < ch.h.rows(); ++n)
            for (std::size_t m = 0; m < ch.h.cols(); ++m)
                for (std::size_t k = 0; k < ch.g.cols(); ++k)
                {
                    const double h = ch.h(n, m);
                    const double g = ch.g(n, k);
                    const Key key{h < g ? h : g, g, h};
                    if (key > best_key)
                    {
                        best_key = key;
                        best = {static_cast<int>(n), static_cast<int>(m), static_cast<int>(k)};
                    }
                }
    }
    return evaluate_triple(ch, config, rho, best);
}

AntennaTriple random_triple(const SystemConfig &config, CounterStream &pick)
{
    AntennaTriple t;
    t.n = static_cast<int>(pick.below(static_cast<std::uint32_t>(config.n_bs)));
    t.m = static_cast<int>(pick.below(static_cast<std::uint32_t>(config.m_pu)));
    t.k = static_cast<int>(pick.below(static_cast<std::uint32_t>(config.k_su)));
    return t;
}

SelectionOutcome random_as(const ChannelRealization &ch, const SystemConfig &config, double rho,
                           CounterStream &pick)
{
    return evaluate_triple(ch, config, rho, random_triple(config, pick));
}

SelectionOutcome evaluate_triple(const ChannelRealization &ch, const SystemConfig &config, double rho,
                                 const AntennaTriple &triple)
{
    const auto n = static_cast<std::size_t>(triple.n);
    return outcome_for(triple, ch.h(n, static_cast<std::size_t>(triple.m)), ch.g(n, static_cast<std::size_t>(triple.k)),
                       rho, config);
}

SelectionOutcome run_scheme(Scheme scheme, const ChannelRealization &ch, const SystemConfig &config, double rho,
                            CounterStream &pick)
{
    switch (scheme)
    {
    case Scheme::sjas:
        return sj_as(ch, config, rho);
    case Scheme::es:
        return es_as(ch, config, rho);
    case Scheme::maxmin:
        return maxmin_as(ch, config, rho);
    case Scheme::random:
        return random_as(ch, config, rho, pick);
    }
    throw std::invalid_argument("run_scheme: unknown scheme");
}

} // namespace crnoma
