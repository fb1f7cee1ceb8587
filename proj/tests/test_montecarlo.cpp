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
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>

using namespace crnoma;

namespace
{
ExperimentPlan small_plan(std::uint64_t trials)
{
    ExperimentPlan plan;
    plan.config = oracle::baseline_config();
    plan.budget.noise_power_dbm = -70.0;
    plan.power_grid_dbm = {0.0, 5.0, 10.0, 15.0, 20.0};
    plan.schemes = {Scheme::sjas, Scheme::es, Scheme::maxmin, Scheme::random};
    plan.trials = trials;
    plan.master_seed = 20260101;
    return plan;
}

bool bit_equal(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

bool bit_equal(const OutageEstimate &a, const OutageEstimate &b)
{
    return a.scheme == b.scheme && a.point == b.point && a.outages == b.outages && a.trials == b.trials &&
           bit_equal(a.p_hat, b.p_hat) && bit_equal(a.mean_b, b.mean_b) && bit_equal(a.mean_gamma_s, b.mean_gamma_s) &&
           bit_equal(a.ci95_halfwidth, b.ci95_halfwidth) && bit_equal(a.rho, b.rho);
}
} // namespace

TEST_CASE("plan validation")
{
    ExperimentPlan plan = small_plan(10);
    plan.trials = 0;
    CHECK_THROWS_AS(run_point(plan, Scheme::sjas, 0), std::domain_error);
    plan = small_plan(10);
    plan.power_grid_dbm = {};
    CHECK_THROWS_AS(plan.validate(), std::domain_error);
    plan.power_grid_dbm = {5.0, 5.0};
    CHECK_THROWS_AS(plan.validate(), std::domain_error);
    plan.power_grid_dbm = {5.0, 0.0};
    CHECK_THROWS_AS(plan.validate(), std::domain_error);
    plan = small_plan(10);
    plan.schemes = {};
    CHECK_THROWS_AS(plan.validate(), std::domain_error);
    CHECK_THROWS_AS(run_point(small_plan(10), Scheme::sjas, 5), std::out_of_range);
}

TEST_CASE("certain outage with an unreachable PU target")
{
    ExperimentPlan plan = small_plan(1);
    plan.config.gamma_p_th = 1e30;
    for (Scheme s : kAllSchemes)
    {
        const OutageEstimate e = run_point(plan, s, 0);
        CHECK(e.p_hat == 1.0);
        CHECK(e.mean_b == 0.0);
        CHECK(e.mean_gamma_s == 0.0);
        CHECK(e.ci95_halfwidth == 0.0);
    }
}

TEST_CASE("estimates match a direct serial loop")
{
    ExperimentPlan plan = small_plan(10000);
    const std::size_t point = 2;
    const double rho = plan.rho_at(point);
    for (Scheme s : kAllSchemes)
    {
        std::uint64_t outages = 0;
        double sum_b = 0.0, sum_g = 0.0;
        for (std::uint64_t t = 0; t < plan.trials; ++t)
        {
            CounterStream ch_stream(channel_stream_id(plan, s, point, t));
            CounterStream pick(pick_stream_id(plan, s, point, t));
            const auto ch = sample_channels(plan.config, ch_stream);
            const auto o = run_scheme(s, ch, plan.config, rho, pick);
            outages += o.outage;
            sum_b += o.b;
            sum_g += o.gamma_s;
        }
        const OutageEstimate e = run_point(plan, s, point, {1});
        CHECK(e.outages == outages);
        CHECK(e.mean_b == doctest::Approx(sum_b / 10000.0).epsilon(1e-12));
        CHECK(e.mean_gamma_s == doctest::Approx(sum_g / 10000.0).epsilon(1e-12));
        CHECK(e.ci95_halfwidth == doctest::Approx(1.96 * std::sqrt(e.p_hat * (1 - e.p_hat) / 10000.0)));
        CHECK(e.rho == rho);
        CHECK(e.power_dbm == 10.0);
    }
}

TEST_CASE("results are bit-identical across worker counts")
{
    const ExperimentPlan plan = small_plan(50000);
    const auto one = run_plan(plan, {1});
    const auto four = run_plan(plan, {4});
    const auto seven = run_plan(plan, {7});
    REQUIRE(one.size() == 20);
    for (std::size_t i = 0; i < one.size(); ++i)
    {
        CHECK(bit_equal(one[i], four[i]));
        CHECK(bit_equal(one[i], seven[i]));
    }
}

TEST_CASE("run_plan ordering: schemes as listed, power ascending")
{
    ExperimentPlan plan = small_plan(100);
    plan.schemes = {Scheme::random, Scheme::sjas};
    const auto est = run_plan(plan);
    REQUIRE(est.size() == 10);
    for (std::size_t i = 0; i < est.size(); ++i)
    {
        CHECK(est[i].scheme == (i < 5 ? Scheme::random : Scheme::sjas));
        CHECK(est[i].point == i % 5);
    }

    plan.schemes = {Scheme::es};
    plan.power_grid_dbm = {7.5};
    const auto single = run_plan(plan);
    REQUIRE(single.size() == 1);
    CHECK(bit_equal(single[0], run_point(plan, Scheme::es, 0)));
}

TEST_CASE("paired schemes: SJ-AS equals ES; ES dominates max-min and random")
{
    const ExperimentPlan plan = small_plan(100000);
    for (std::size_t p = 0; p < plan.power_grid_dbm.size(); ++p)
    {
        const auto sj = run_point(plan, Scheme::sjas, p);
        const auto es = run_point(plan, Scheme::es, p);
        const auto mm = run_point(plan, Scheme::maxmin, p);
        const auto rnd = run_point(plan, Scheme::random, p);
        CHECK(sj.outages == es.outages);
        CHECK(bit_equal(sj.mean_b, es.mean_b));
        CHECK(bit_equal(sj.mean_gamma_s, es.mean_gamma_s));
        CHECK(es.outages <= mm.outages);
        CHECK(es.outages <= rnd.outages);
        CHECK(es.mean_gamma_s >= mm.mean_gamma_s);
        CHECK(mm.mean_gamma_s >= rnd.mean_gamma_s);
    }
}

TEST_CASE("unpaired mode draws separate channels per scheme")
{
    ExperimentPlan plan = small_plan(20000);
    plan.paired = false;
    const auto sj = run_point(plan, Scheme::sjas, 2);
    const auto es = run_point(plan, Scheme::es, 2);
    CHECK(sj.outages != es.outages);
    CHECK(std::abs(sj.p_hat - es.p_hat) < 3.0 * (sj.ci95_halfwidth + es.ci95_halfwidth) / 1.96);
    CHECK(bit_equal(sj, run_point(plan, Scheme::sjas, 2, {3})));
}

TEST_CASE("statistical monotonicity in power and CI scaling")
{
    ExperimentPlan plan = small_plan(200000);
    plan.schemes = {Scheme::sjas, Scheme::random};
    const auto est = run_plan(plan);
    for (std::size_t i = 1; i < 5; ++i)
        CHECK(est[i].p_hat <= est[i - 1].p_hat + 3.0 * (est[i].ci95_halfwidth + est[i - 1].ci95_halfwidth));
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(est[5 + i].p_hat + 3.0 * (est[5 + i].ci95_halfwidth + est[i].ci95_halfwidth) >= est[i].p_hat);

    ExperimentPlan small = small_plan(2000);
    ExperimentPlan large = small_plan(200000);
    const auto a = run_point(small, Scheme::random, 2);
    const auto b = run_point(large, Scheme::random, 2);
    CHECK(a.ci95_halfwidth / b.ci95_halfwidth == doctest::Approx(10.0).epsilon(0.1));
    CHECK(ci95_halfwidth(0.5, 100) == doctest::Approx(0.098));
}
