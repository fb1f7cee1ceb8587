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

#include "crnoma/noma.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace crnoma;

namespace
{
// Log-uniform gains over [1e-3, 1e3] x scale, rho over [1, 1e4].
LinkState random_link(CounterStream &s)
{
    const auto log_uniform = [&](double lo_exp, double hi_exp) {
        return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * s.uniform_open());
    };
    return {log_uniform(-3, 3), log_uniform(-3, 3), log_uniform(0, 4)};
}
} // namespace

TEST_CASE("optimal_b worked examples")
{
    CHECK(optimal_b({1.0, 0.5, 10.0}, 1.0).b() == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(optimal_b({0.05, 0.05, 10.0}, 1.0).b() == 0.0);
    CHECK(optimal_b({1e9, 1e9, 10.0}, 1.0).b() == doctest::Approx(0.5).epsilon(1e-7));
    // Boundary beta rho == gp is infeasible.
    CHECK(optimal_b({0.1, 0.2, 10.0}, 1.0).b() == 0.0);
    CHECK(optimal_b({0.0, 1.0, 10.0}, 1.0).b() == 0.0);
    CHECK(optimal_b({1.0, 0.5, 10.0}, 1.0).a() == doctest::Approx(0.6));
}

TEST_CASE("PowerSplit enforces 0 <= b < 1")
{
    CHECK_THROWS_AS(PowerSplit(1.0), std::invalid_argument);
    CHECK_THROWS_AS(PowerSplit(-0.1), std::invalid_argument);
    CHECK(PowerSplit(0.0).a() == 1.0);
}

TEST_CASE("SINR and SNR expressions")
{
    const LinkState link{1.0, 0.5, 10.0};
    const PowerSplit split(0.4);
    CHECK(sinr_pu(link, split) == doctest::Approx(1.2));
    CHECK(sinr_su_decode_pu(link, split) == doctest::Approx(1.0));
    CHECK(snr_su(link, split) == doctest::Approx(2.0));

    CHECK(sinr_pu(link, PowerSplit(0.0)) == doctest::Approx(10.0));
    CHECK(sinr_su_decode_pu(link, PowerSplit(0.0)) == doctest::Approx(5.0));
    CHECK(snr_su(link, PowerSplit(0.0)) == 0.0);

    const LinkState dead{0.0, 0.0, 10.0};
    CHECK(sinr_pu(dead, split) == 0.0);
    CHECK(sinr_su_decode_pu(dead, split) == 0.0);
    CHECK(snr_su(dead, split) == 0.0);
}

TEST_CASE("achievable_gamma_s worked examples")
{
    CHECK(achievable_gamma_s({1.0, 0.5, 10.0}, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(achievable_gamma_s({0.05, 1.0, 10.0}, 1.0) == 0.0);
}

TEST_CASE("closed form equals the two-step composition on 10^5 random links")
{
    CounterStream s({3, 0, 0, 0});
    for (int i = 0; i < 100000; ++i)
    {
        const LinkState link = random_link(s);
        const double gp = 0.1 + 3.0 * s.uniform_open();
        const double direct = achievable_gamma_s(link, gp);
        const double composed = snr_su(link, optimal_b(link, gp));
        REQUIRE(std::abs(direct - composed) <= 1e-12 * std::max(1.0, std::abs(composed)));
        REQUIRE(std::abs(direct - oracle::two_step_gamma_s(link.h, link.g, link.rho, gp)) <=
                1e-12 * std::max(1.0, direct));
    }
}

TEST_CASE("PU constraint binds at the optimum and the clamp matches feasibility")
{
    CounterStream s({4, 0, 0, 0});
    int binding = 0;
    for (int i = 0; i < 100000; ++i)
    {
        const LinkState link = random_link(s);
        const double gp = 0.1 + 3.0 * s.uniform_open();
        const PowerSplit split = optimal_b(link, gp);
        REQUIRE((split.b() > 0.0) == (std::min(link.h, link.g) > gp / link.rho));
        if (split.b() > 0.0)
        {
            const double qos = std::min(sinr_pu(link, split), sinr_su_decode_pu(link, split));
            REQUIRE(std::abs(qos - gp) <= 1e-9 * gp);
            ++binding;
        }
    }
    CHECK(binding > 1000);
}

TEST_CASE("achievable_gamma_s is nondecreasing in h, g and rho")
{
    CounterStream s({5, 0, 0, 0});
    for (int i = 0; i < 100000; ++i)
    {
        const LinkState lo = random_link(s);
        const double gp = 0.1 + 3.0 * s.uniform_open();
        const double bump = 1.0 + s.uniform_open();
        const double base = achievable_gamma_s(lo, gp);
        REQUIRE(achievable_gamma_s({lo.h * bump, lo.g, lo.rho}, gp) >= base * (1 - 1e-14));
        REQUIRE(achievable_gamma_s({lo.h, lo.g * bump, lo.rho}, gp) >= base * (1 - 1e-14));
        REQUIRE(achievable_gamma_s({lo.h, lo.g, lo.rho * bump}, gp) >= base * (1 - 1e-14));
    }
}
