// SPDX-License-Identifier: Apache-2.0
//
// ssris - element-count feasibility solver for self-sustainable RIS
// Copyright (C) 2026 The ssris authors
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

#include <ssris/outage.hpp>
#include <ssris/solver.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ssris;
using ssris::testing::rel_err;
using doctest::Approx;

namespace {

// Broadside, 25 m hops: alpha = 18.90591296816639, Gamma0 = 8.121720240360866e-5.
LinkGeometry broadside() { return raw_geometry(0.0, 0.0, 25.0, 25.0); }

} // namespace

TEST_CASE("LOS closed forms at a reference point")
{
    const SystemParams p;
    const auto es = solve_p1(p, broadside(), 10e6);
    CHECK(rel_err(es.m_reflect, 3.7820222920088297) <= 1e-13);
    CHECK(rel_err(es.m_total, 75.284606588392938) <= 1e-13);
    CHECK(es.tau == 0.0);

    const auto ts = solve_p2(p, broadside(), 10e6);
    CHECK(rel_err(ts.tau, 0.94976367064403408) <= 1e-14);
    CHECK(rel_err(ts.m_total, 37.721954753774704) <= 1e-12);
    CHECK(ts.m_harvest == 0.0);

    const auto ts20 = solve_p2(p, broadside(), 20e6);
    CHECK(rel_err(ts20.m_total, 154.58024139896601) <= 1e-12);
    CHECK(rel_err(solve_p1(p, broadside(), 20e6).m_total, 110.35548173799937) <= 1e-13);
}

TEST_CASE("closed-form totals agree with the per-problem solvers")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ang(-1.3, 1.3), dist(5.0, 80.0);
    for (int i = 0; i < 100; ++i) {
        SystemParams p;
        p.tx_power_w = ssris::testing::log_uniform(rng, 0.01, 2.0);
        p.num_bs_antennas = 4 + i;
        const auto geom = raw_geometry(ang(rng), ang(rng), dist(rng), dist(rng));
        const double rate = ssris::testing::log_uniform(rng, 1e6, 60e6);
        const auto cf = closed_form_totals(p, geom, rate);
        CHECK(rel_err(solve_p1(p, geom, rate).m_total, cf.m_es) <= 1e-12);
        if (cf.m_ts <= 0x1p53)
            CHECK(rel_err(solve_p2(p, geom, rate).m_total, cf.m_ts) <= 1e-12);
        else
            CHECK_THROWS_AS(solve_p2(p, geom, rate), std::overflow_error);
    }
}

TEST_CASE("continuous optima are tight")
{
    const SystemParams p;
    const auto geom = default_geometry();
    for (Scheme s : {Scheme::Es, Scheme::Ts}) {
        const auto los = solve(p, geom, s, ChannelCondition::Los, 10e6, std::nullopt);
        CHECK(std::abs(los.diagnostics.ss_slack) <= 1e-12);
        CHECK(std::abs(*los.diagnostics.rate_slack) <= 1e-12);
        CHECK(los.diagnostics.satisfied());
        CHECK(los.integer_feasible);

        const auto nlos = solve(p, geom, s, ChannelCondition::Nlos, 10e6, 0.01);
        CHECK(std::abs(nlos.diagnostics.ss_slack) <= 1e-12);
        CHECK(std::abs(*nlos.diagnostics.outage_slack) <= 1e-9);
        CHECK(nlos.root_gap <= 1e-10);
        CHECK(nlos.integer_feasible);
    }
}

TEST_CASE("TS self-sustainability does not depend on M")
{
    ProblemContext ctx;
    ctx.rate_target_bps = 1e6;
    ctx.gamma0 = 1e-4;
    ctx.bandwidth_hz = 50e6;
    ctx.num_antennas = 16;
    ctx.alpha = 3.0;
    const double tau = 0.8;
    const double ref = evaluate_constraints(ctx, Scheme::Ts, ChannelCondition::Los, 1.0, 0.0, tau).ss_slack;
    for (double m : {2.0, 17.5, 1e4})
        CHECK(evaluate_constraints(ctx, Scheme::Ts, ChannelCondition::Los, m, 0.0, tau).ss_slack == ref);
    CHECK(evaluate_constraints(ctx, Scheme::Ts, ChannelCondition::Los, 5.0, 0.0, 0.75).ss_slack == Approx(0.0));
    CHECK(evaluate_constraints(ctx, Scheme::Ts, ChannelCondition::Los, 5.0, 0.0, 0.7).ss_slack < 0.0);
}

TEST_CASE("requirements grow with rate and shrink with power")
{
    SystemParams p;
    const auto geom = default_geometry();
    for (Scheme s : {Scheme::Es, Scheme::Ts}) {
        for (ChannelCondition c : {ChannelCondition::Los, ChannelCondition::Nlos}) {
            double prev = 0.0;
            for (double r = 2e6; r <= 30e6; r += 4e6) {
                const double m = solve(p, geom, s, c, r, 0.01).m_total;
                CHECK(m > prev);
                prev = m;
            }
            prev = INFINITY;
            for (double pw : {0.05, 0.1, 0.2, 0.5, 1.0}) {
                p.tx_power_w = pw;
                const double m = solve(p, geom, s, c, 10e6, 0.01).m_total;
                CHECK(m < prev);
                prev = m;
            }
            p.tx_power_w = 0.1;
        }
    }
}

TEST_CASE("NLOS requirement shrinks as the outage margin is relaxed")
{
    const SystemParams p;
    const auto geom = default_geometry();
    for (Scheme s : {Scheme::Es, Scheme::Ts}) {
        double prev = INFINITY;
        for (double eps : {1e-6, 1e-4, 1e-2, 0.1, 0.5}) {
            const double m = solve(p, geom, s, ChannelCondition::Nlos, 10e6, eps).m_total;
            CHECK(m < prev);
            prev = m;
        }
        // Fading always costs elements.
        CHECK(solve(p, geom, s, ChannelCondition::Nlos, 10e6, 0.1).m_total
              > solve(p, geom, s, ChannelCondition::Los, 10e6, std::nullopt).m_total);
    }
}

TEST_CASE("TS overtakes ES as transmit power grows")
{
    SystemParams p;
    const auto geom = default_geometry();
    p.tx_power_w = 0.02;
    CHECK(solve_p2(p, geom, 10e6).m_total > solve_p1(p, geom, 10e6).m_total);
    p.tx_power_w = 1.0;
    CHECK(solve_p2(p, geom, 10e6).m_total < solve_p1(p, geom, 10e6).m_total);
}

TEST_CASE("cheap harvesting collapses both schemes to the bare link")
{
    SystemParams p;
    p.element_power_w = 1e-18;
    const auto geom = default_geometry();
    const auto es = solve_p1(p, geom, 10e6);
    const auto ts = solve_p2(p, geom, 10e6);
    CHECK(es.problem.alpha < 1e-10);
    CHECK(rel_err(es.m_total, es.m_reflect) <= 1e-8);
    CHECK(ts.tau < 1e-10);
    CHECK(rel_err(ts.m_total, es.m_reflect) <= 1e-7);
    const auto es3 = solve_p3(p, geom, 10e6, 0.01);
    const auto ts3 = solve_p4(p, geom, 10e6, 0.01);
    CHECK(rel_err(ts3.m_total, es3.m_total) <= 1e-6);
}

TEST_CASE("NLOS root matches an independent dense scan")
{
    const SystemParams p;
    const auto geom = default_geometry();
    for (Scheme s : {Scheme::Es, Scheme::Ts}) {
        for (double eps : {1e-4, 0.01, 0.3}) {
            const auto r = solve(p, geom, s, ChannelCondition::Nlos, 8e6, eps);
            const double gamma = s == Scheme::Es ? snr_threshold_es(8e6, p.bandwidth_hz)
                                                 : snr_threshold_ts(8e6, p.bandwidth_hz, r.tau);
            const auto dc = derive_constants(p, geom);
            const auto root = ssris::testing::dense_scan_first_root(
                [&](double m) {
                    return eps - outage_probability(gamma, OutageModel::for_elements(m), dc.gamma0,
                                                    p.num_bs_antennas);
                },
                1e-3, 1e5);
            REQUIRE(root.has_value());
            CHECK(std::abs(r.m_reflect - *root) <= 1e-6);
            const double pout = outage_probability(gamma, OutageModel::for_elements(r.m_reflect), dc.gamma0,
                                                   p.num_bs_antennas);
            CHECK(std::abs(pout - eps) <= 1e-9 * eps);
        }
    }
}

TEST_CASE("root finder")
{
    auto rs = find_minimum_root([](double x) { return x - 7.3; }, 100.0);
    CHECK(rs.root == Approx(7.3).epsilon(1e-12));
    CHECK(rs.root >= 7.3);
    CHECK(rs.bracket_lo <= 7.3);
    rs = find_minimum_root([](double x) { return x - 0.25; }, 100.0);
    CHECK(rs.root == Approx(0.25).epsilon(1e-12));
    // A narrow first crossing inside the octave is not skipped.
    rs = find_minimum_root([](double x) { return (x >= 5.5 && x <= 5.6) || x >= 7.0 ? 1.0 : -1.0; }, 100.0);
    CHECK(rs.root == Approx(5.5).epsilon(1e-12));
    CHECK_THROWS_AS(find_minimum_root([](double) { return -1.0; }, 1000.0), InfeasibleWithinCap);
    try {
        find_minimum_root([](double) { return -1.0; }, 1000.0);
    } catch (const InfeasibleWithinCap& e) {
        CHECK(e.ceiling() == 1000.0);
    }
    CHECK_THROWS_AS(find_minimum_root([](double x) { return x; }, 0.0), std::invalid_argument);
}

TEST_CASE("NLOS infeasible within the element cap")
{
    SystemParams p;
    p.tx_power_w = 1e-3;
    CHECK_THROWS_AS(solve_p4(p, default_geometry(), 40e6, 1e-6, SolveOptions{1e4}), InfeasibleWithinCap);
}

TEST_CASE("integerize rounds pool by pool")
{
    FeasibilityResult r;
    r.scheme = Scheme::Es;
    r.condition = ChannelCondition::Los;
    r.problem.rate_target_bps = 1e6;
    r.problem.gamma0 = 1e-3;
    r.problem.bandwidth_hz = 50e6;
    r.problem.num_antennas = 8;
    r.problem.alpha = 60.5 / 3.2;
    r.m_reflect = 3.2;
    r.m_harvest = 60.5;
    const auto out = integerize(r);
    CHECK(out.m_reflect_int == 4);
    CHECK(out.m_harvest_int == 76);  // ceil(alpha * 4), not ceil(60.5)
    CHECK(out.m_total_int == 80);
    CHECK(out.integer_diagnostics.ss_slack >= 0.0);

    // Values within round-off of an integer are not bumped.
    r.m_reflect = 4.0 + 1e-13;
    r.problem.alpha = 2.0;
    const auto snapped = integerize(r);
    CHECK(snapped.m_reflect_int == 4);
    CHECK(snapped.m_harvest_int == 8);

    r.scheme = Scheme::Ts;
    r.tau = 0.7;
    CHECK(integerize(r).m_harvest_int == 0);
}

TEST_CASE("exhaustive search agrees with the solvers")
{
    const SystemParams p;
    const auto geom = default_geometry();
    for (ChannelCondition c : {ChannelCondition::Los, ChannelCondition::Nlos}) {
        const std::optional<double> eps = c == ChannelCondition::Nlos ? std::optional(0.05) : std::nullopt;
        const auto es = solve(p, geom, Scheme::Es, c, 4e6, eps);
        const auto es_oracle = oracle_grid_search(p, geom, 4e6, eps, Scheme::Es, c, 5000);
        CHECK(es.m_reflect_int == es_oracle.m_reflect_int);
        CHECK(es.m_total_int == es_oracle.m_total_int);

        const auto ts = solve(p, geom, Scheme::Ts, c, 4e6, eps);
        const auto ts_oracle = oracle_grid_search(p, geom, 4e6, eps, Scheme::Ts, c, 5000);
        // The oracle's tau grid can only sit at or above the exact tau.
        CHECK(ts_oracle.tau >= ts.tau);
        CHECK(ts.m_total_int <= ts_oracle.m_total_int);
        CHECK(ts.m_total_int >= ts_oracle.m_total_int - 1);
    }
    CHECK_THROWS_AS(oracle_grid_search(p, geom, 40e6, std::nullopt, Scheme::Es, ChannelCondition::Los, 10),
                    InfeasibleWithinCap);
    CHECK_THROWS_AS(oracle_grid_search(p, geom, 4e6, std::nullopt, Scheme::Es, ChannelCondition::Nlos, 10),
                    std::invalid_argument);
}

TEST_CASE("bad inputs")
{
    const SystemParams p;
    const auto geom = default_geometry();
    CHECK_THROWS_AS(solve_p1(p, geom, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_p3(p, geom, 1e6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_p3(p, geom, 1e6, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(solve(p, geom, Scheme::Es, ChannelCondition::Nlos, 1e6, std::nullopt), std::invalid_argument);
    CHECK(std::string(to_string(Scheme::Ts)) == "TS");
}
