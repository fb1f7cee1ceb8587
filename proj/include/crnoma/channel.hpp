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

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace crnoma
{

/// Row-major matrix of squared-magnitude channel gains.
class GainMatrix
{
public:
    GainMatrix() = default;
    GainMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    GainMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    double &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> values() const noexcept { return data_; }
    std::span<double> values() noexcept { return data_; }

    void resize(std::size_t rows, std::size_t cols)
    {
        rows_ = rows;
        cols_ = cols;
        data_.assign(rows * cols, 0.0);
    }

    bool operator==(const GainMatrix &) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// One fading draw: h is N x M (BS to PU), g is N x K (BS to SU).
struct ChannelRealization
{
    GainMatrix h;
    GainMatrix g;

    bool operator==(const ChannelRealization &) const = default;

    /// Throws std::invalid_argument if dimensions disagree with the config or any gain is negative.
    void check(const SystemConfig &config) const;
};

/// Exponential variate with the given rate by inversion: -ln(U) / rate.
inline double exponential_variate(CounterStream &stream, double rate) noexcept
{
    return -std::log(stream.uniform_open()) / rate;
}

/// Draws i.i.d. exponential gains, h with rate omega_h and g with rate omega_g.
/// All h entries are drawn first (row-major), then all g entries.
ChannelRealization sample_channels(const SystemConfig &config, CounterStream &stream);

/// In-place variant that reuses the storage of `out`.
void sample_channels(const SystemConfig &config, CounterStream &stream, ChannelRealization &out);

} // namespace crnoma
