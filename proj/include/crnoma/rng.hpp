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

#include <array>
#include <cstdint>
#include <limits>

namespace crnoma
{

/// Philox4x32-10 block function (Salmon et al., SC'11).
///
/// Maps a 128-bit counter and a 64-bit key to 128 pseudo-random bits. The
/// mapping is stateless, so any block of any stream can be generated directly.
class Philox4x32
{
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Identifies one independent random stream: (seed, point, trial, tag).
///
/// Tags separate the purposes a trial draws randomness for (channel gains,
/// random antenna picks), so adding draws to one purpose never shifts another.
struct StreamId
{
    std::uint64_t seed = 0;
    std::uint32_t point = 0; // < 2^24
    std::uint64_t trial = 0;
    std::uint8_t tag = 0;
};

namespace stream_tag
{
inline constexpr std::uint8_t channel = 0;
inline constexpr std::uint8_t random_pick = 8;
/// Channel stream for an unpaired scheme: one per scheme id.
constexpr std::uint8_t channel_for(int scheme_id)
{
    return static_cast<std::uint8_t>(1 + scheme_id);
}
} // namespace stream_tag

/// Counter-based random stream; satisfies UniformRandomBitGenerator.
///
/// Word i of the stream is word (i mod 4) of Philox block i/4 with counter
/// {i/4, trial_lo, trial_hi, point << 8 | tag}.
class CounterStream
{
public:
    using result_type = std::uint32_t;

    explicit CounterStream(const StreamId &id) noexcept
        : key_{static_cast<std::uint32_t>(id.seed), static_cast<std::uint32_t>(id.seed >> 32)},
          base_{0u, static_cast<std::uint32_t>(id.trial), static_cast<std::uint32_t>(id.trial >> 32),
                (id.point << 8) | id.tag}
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        if (used_ == 4)
        {
            Philox4x32::Counter ctr = base_;
            ctr[0] = block_++;
            buffer_ = Philox4x32::block(ctr, key_);
            used_ = 0;
        }
        return buffer_[used_++];
    }

    /// Uniform double on the open interval (0, 1) with 53 random bits.
    double uniform_open() noexcept
    {
        const std::uint64_t hi = (*this)();
        const std::uint64_t lo = (*this)();
        const std::uint64_t bits = ((hi << 32) | lo) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), n >= 1. Lemire's multiply-shift with rejection.
    std::uint32_t below(std::uint32_t n) noexcept
    {
        std::uint64_t product = std::uint64_t{(*this)()} * n;
        auto low = static_cast<std::uint32_t>(product);
        if (low < n)
        {
            const std::uint32_t threshold = (0u - n) % n;
            while (low < threshold)
            {
                product = std::uint64_t{(*this)()} * n;
                low = static_cast<std::uint32_t>(product);
            }
        }
        return static_cast<std::uint32_t>(product >> 32);
    }

private:
    Philox4x32::Key key_;
    Philox4x32::Counter base_;
    Philox4x32::Counter buffer_{};
    std::uint32_t block_ = 0;
    int used_ = 4;
};

} // namespace crnoma
