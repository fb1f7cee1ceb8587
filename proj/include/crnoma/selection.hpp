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

#include "crnoma/channel.hpp"
#include "crnoma/config.hpp"
#include "crnoma/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace crnoma
{

/// Zero-based (BS, PU, SU) antenna indices.
struct AntennaTriple
{
    int n = 0;
    int m = 0;
    int k = 0;

    bool operator==(const AntennaTriple &) const = default;
};

/// Result of one joint antenna selection.
///
/// Invariants: an infeasible outcome has no triple, b = 0, gamma_s = 0 and is
/// an outage. A feasible outcome has b > 0 and is an outage iff gamma_s is
/// below the SU threshold.
struct SelectionOutcome
{
    bool feasible = false;
    std::optional<AntennaTriple> triple;
    double b = 0.0;
    double gamma_s = 0.0;
    bool outage = true;
};

/// Row-maximum gains of one BS antenna and the columns attaining them.
struct CandidatePair
{
    int n = 0;
    double h_max = 0.0;
    int m_idx = 0;
    double g_max = 0.0;
    int k_idx = 0;
    double beta = 0.0; // min(h_max, g_max)
};

/// Elementary-step counter for complexity measurements.
/// One step is one gain inspected or one candidate tested/evaluated.
struct OpCounter
{
    std::uint64_t steps = 0;
};

enum class Scheme
{
    sjas,
    es,
    maxmin,
    random,
};

inline constexpr std::array<Scheme, 4> kAllSchemes{Scheme::sjas, Scheme::es, Scheme::maxmin, Scheme::random};

std::string_view scheme_name(Scheme scheme) noexcept;
/// Accepts the names produced by scheme_name; throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view name);
int scheme_id(Scheme scheme) noexcept;

/// Stage 1 of SJ-AS: one candidate per BS antenna. Ties resolve to the lowest column.
std::vector<CandidatePair> build_candidates(const ChannelRealization &ch, OpCounter *counter = nullptr);

/// Subset-based joint antenna selection.
///
/// Stage 1 reduces every BS antenna to its row-maximum pair, stage 2 keeps the
/// antennas whose pair can carry the PU at its target
/// (beta > gamma_p_th / rho), stage 3 returns the kept antenna with the largest
/// SU SNR under the optimal power split. Ties go to the lowest BS index.
/// At most N (M + K + 2) steps.
SelectionOutcome sj_as(const ChannelRealization &ch, const SystemConfig &config, double rho,
                       OpCounter *counter = nullptr);

/// Exhaustive search over all N M K triples for the largest SU SNR.
/// Ties go to the lexicographically smallest (n, m, k).
SelectionOutcome es_as(const ChannelRealization &ch, const SystemConfig &config, double rho,
                       OpCounter *counter = nullptr);

enum class MaxMinSearch
{
    row_maxima, // N (M + K) candidates via the row-maximum pairs
    full,       // every triple; reference path for testing
};

/// Max-min selection: the triple maximizing min(h_nm, g_nk).
///
/// Ties in the max-min value are broken by the larger g_nk, then the larger
/// h_nm, then the lowest index. Under this order the row-maximum pair wins
/// every row, so both search modes return the same gains.
SelectionOutcome maxmin_as(const ChannelRealization &ch, const SystemConfig &config, double rho,
                           MaxMinSearch search = MaxMinSearch::row_maxima);

/// Draws a uniformly random triple from `pick`.
AntennaTriple random_triple(const SystemConfig &config, CounterStream &pick);

/// Random antenna selection. Feasibility refers to the drawn triple.
SelectionOutcome random_as(const ChannelRealization &ch, const SystemConfig &config, double rho,
                           CounterStream &pick);

/// Dispatch by scheme id; `pick` is consumed only by Scheme::random.
SelectionOutcome run_scheme(Scheme scheme, const ChannelRealization &ch, const SystemConfig &config, double rho,
                            CounterStream &pick);

/// Outcome for a fixed triple under the optimal power split.
SelectionOutcome evaluate_triple(const ChannelRealization &ch, const SystemConfig &config, double rho,
                                 const AntennaTriple &triple);

} // namespace crnoma
