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

#include "crnoma/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace crnoma
{

GainMatrix::GainMatrix(std::initializer_list<std::initializer_list<double>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows)
    {
        if (r.size() != cols_)
            throw std::invalid_argument("GainMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

void ChannelRealization::check(const SystemConfig &config) const
{
    const auto n = static_cast<std::size_t>(config.n_bs);
    if (h.rows() != n || h.cols() != static_cast<std::size_t>(config.m_pu))
        throw std::invalid_argument("channel: h must be n_bs x m_pu");
    if (g.rows() != n || g.cols() != static_cast<std::size_t>(config.k_su))
        throw std::invalid_argument("channel: g must be n_bs x k_su");
    const auto negative = [](double x) { return !(x >= 0.0); };
    if (std::ranges::any_of(h.values(), negative) || std::ranges::any_of(g.values(), negative))
        throw std::invalid_argument("channel: gains must be nonnegative");
}

void sample_channels(const SystemConfig &config, CounterStream &stream, ChannelRealization &out)
{
    const auto n = static_cast<std::size_t>(config.n_bs);
    if (out.h.rows() != n || out.h.cols() != static_cast<std::size_t>(config.m_pu))
        out.h.resize(n, static_cast<std::size_t>(config.m_pu));
    if (out.g.rows() != n || out.g.cols() != static_cast<std::size_t>(config.k_su))
        out.g.resize(n, static_cast<std::size_t>(config.k_su));

    for (double &x : out.h.values())
        x = exponential_variate(stream, config.omega_h);
    for (double &x : out.g.values())
        x = exponential_variate(stream, config.omega_g);
}

ChannelRealization sample_channels(const SystemConfig &config, CounterStream &stream)
{
    ChannelRealization out;
    sample_channels(config, stream, out);
    return out;
}

} // namespace crnoma
