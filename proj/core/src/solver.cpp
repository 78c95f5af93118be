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

#include "ssris/solver.hpp"

#include "ssris/outage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ssris {

namespace {

constexpr int kSubScanPoints = 64;
constexpr double kBisectionRelTol = 1e-13;
constexpr int kMaxBisectionIterations = 400;
constexpr double kTauGridStep = 1e-4;
constexpr double kIntegerSnap = 1e-9;
// Beyond 2^53 consecutive integers are no longer distinct doubles.
constexpr double kMaxRepresentableElements = 9'007'199'254'740'992.0;

void require_rate(double rate_bps)
{
    if (!(rate_bps > 0.0) || !std::isfinite(rate_bps))
        throw std::invalid_argument("rate target must be positive");
}

ProblemContext make_context(const SystemParams& params, const LinkGeometry& geom, double rate_bps,
                            std::optional<double> epsilon)
{
    const DerivedConstants dc = derive_constants(params, geom);
    ProblemContext ctx;
    ctx.rate_target_bps = rate_bps;
    ctx.epsilon = epsilon;
    ctx.gamma0 = dc.gamma0;
    ctx.bandwidth_hz = params.bandwidth_hz;
    ctx.num_antennas = params.num_bs_antennas;
    ctx.alpha = dc.alpha;
    return ctx;
}

// sqrt((2^(R0/B_eff) - 1) / (N Gamma0))
double elements_for_rate(const ProblemContext& ctx, double effective_bandwidth)
{
    const double gamma = snr_threshold_es(ctx.rate_target_bps, effective_bandwidth);
    return std::sqrt(gamma / (ctx.num_antennas * ctx.gamma0));
}

double optimal_tau(double alpha) { return alpha / (1.0 + alpha); }

// ceil() that leaves values within round-off of an integer alone.
std::int64_t snapped_ceil(double x)
{
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= kIntegerSnap * std::max(1.0, std::abs(x)))
        return static_cast<std::int64_t>(nearest);
    return static_cast<std::int64_t>(std::ceil(x));
}

double outage_threshold(const ProblemContext& ctx, Scheme scheme, double tau)
{
    return scheme == Scheme::Es ? snr_threshold_es(ctx.rate_target_bps, ctx.bandwidth_hz)
                                : snr_threshold_ts(ctx.rate_target_bps, ctx.bandwidth_hz, tau);
}

// B / (1 + alpha) is (1 - tau*) B without the cancellation in 1 - tau* near 1.
double ts_effective_bandwidth(const ProblemContext& ctx) { return ctx.bandwidth_hz / (1.0 + ctx.alpha); }

FeasibilityResult finish(FeasibilityResult result)
{
    result.m_total = result.m_reflect + result.m_harvest;
    if (!(result.m_total <= kMaxRepresentableElements))
        throw std::overflow_error("required element count exceeds 2^53");
    result.diagnostics = evaluate_constraints(result.problem, result.scheme, result.condition, result.m_reflect,
                                              result.m_harvest, result.tau);
    return integerize(result);
}

FeasibilityResult solve_nlos(const SystemParams& params, const LinkGeometry& geom, double rate_bps, double epsilon,
                             Scheme scheme, const SolveOptions& opts)
{
    require_rate(rate_bps);
    check_epsilon(epsilon);

    FeasibilityResult result;
    result.scheme = scheme;
    result.condition = ChannelCondition::Nlos;
    result.problem = make_context(params, geom, rate_bps, epsilon);
    // Outage grows with tau, so TS fixes tau at the smallest self-sustaining value.
    result.tau = scheme == Scheme::Ts ? optimal_tau(result.problem.alpha) : 0.0;

    const ProblemContext& ctx = result.problem;
    const double gamma = scheme == Scheme::Ts ? snr_threshold_es(rate_bps, ts_effective_bandwidth(ctx))
                                              : snr_threshold_es(rate_bps, ctx.bandwidth_hz);
    const RootSearch rs = find_minimum_root(
        [&](double m) { return f2(m, gamma, ctx.gamma0, ctx.num_antennas) - f1(m, epsilon); }, opts.max_elements);

    result.m_reflect = rs.root;
    result.m_harvest = scheme == Scheme::Es ? ctx.alpha * rs.root : 0.0;
    result.root_gap = rs.gap;
    return finish(result);
}

} // namespace

const char* to_string(Scheme scheme)
{
    return scheme == Scheme::Es ? "ES" : "TS";
}

InfeasibleWithinCap::InfeasibleWithinCap(double ceiling)
    : std::runtime_error("infeasible within element cap " + std::to_string(static_cast<long long>(ceiling)))
    , ceiling_(ceiling)
{
}

bool Diagnostics::satisfied(double tol) const
{
    if (ss_slack < -tol)
        return false;
    if (rate_slack && *rate_slack < -tol)
        return false;
    if (outage_slack && *outage_slack < -tol)
        return false;
    return true;
}

RootSearch find_minimum_root(const std::function<double(double)>& fn, double max_x)
{
    if (!(max_x > 0.0))
        throw std::invalid_argument("root search ceiling must be positive");

    // Geometric scan for the first octave whose upper end is non-negative.
    double lo = 0.0;
    double hi = std::min(1.0, max_x);
    while (fn(hi) < 0.0) {
        if (hi >= max_x)
            throw InfeasibleWithinCap(max_x);
        lo = hi;
        hi = std::min(2.0 * hi, max_x);
    }

    // Guard against a second crossing inside the octave.
    const double octave_lo = lo;
    const double step = (hi - lo) / kSubScanPoints;
    for (int k = 1; k <= kSubScanPoints; ++k) {
        const double x = k == kSubScanPoints ? hi : octave_lo + step * k;
        if (fn(x) >= 0.0) {
            hi = x;
            break;
        }
        lo = x;
    }

    RootSearch rs;
    rs.bracket_lo = lo;
    rs.bracket_hi = hi;
    while (rs.iterations < kMaxBisectionIterations && hi - lo > kBisectionRelTol * hi) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break;
        if (fn(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
        ++rs.iterations;
    }
    rs.root = hi;
    rs.gap = std::abs(fn(hi));
    return rs;
}

Diagnostics evaluate_constraints(const ProblemContext& problem, Scheme scheme, ChannelCondition condition,
                                 double m_reflect, double m_harvest, double tau)
{
    Diagnostics d;
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (scheme == Scheme::Es) {
        // eta P rho N M_Hr >= M_Rf P0  <=>  M_Hr >= alpha M_Rf
        const double need = problem.alpha * m_reflect;
        d.ss_slack = need > 0.0 ? m_harvest / need - 1.0 : inf;
    } else {
        // tau eta P rho N M >= (1 - tau) M P0; M cancels.
        d.ss_slack = tau / (problem.alpha * (1.0 - tau)) - 1.0;
    }

    const double active_fraction = scheme == Scheme::Ts ? 1.0 - tau : 1.0;
    if (condition == ChannelCondition::Los) {
        const double rate = active_fraction * problem.bandwidth_hz
                            * std::log2(1.0 + problem.gamma0 * problem.num_antennas * m_reflect * m_reflect);
        d.rate_slack = rate / problem.rate_target_bps - 1.0;
    } else {
        if (!problem.epsilon)
            throw std::invalid_argument("NLOS constraints need an outage margin");
        const double eps = *problem.epsilon;
        if (m_reflect > 0.0) {
            const double gamma = outage_threshold(problem, scheme, tau);
            const double p_out = outage_probability(gamma, OutageModel::for_elements(m_reflect), problem.gamma0,
                                                    problem.num_antennas);
            d.outage_slack = (eps - p_out) / eps;
        } else {
            d.outage_slack = -inf;
        }
    }
    return d;
}

FeasibilityResult solve_p1(const SystemParams& params, const LinkGeometry& geom, double rate_bps)
{
    require_rate(rate_bps);
    FeasibilityResult result;
    result.scheme = Scheme::Es;
    result.condition = ChannelCondition::Los;
    result.problem = make_context(params, geom, rate_bps, std::nullopt);
    result.m_reflect = elements_for_rate(result.problem, params.bandwidth_hz);
    result.m_harvest = result.problem.alpha * result.m_reflect;
    return finish(result);
}

FeasibilityResult solve_p2(const SystemParams& params, const LinkGeometry& geom, double rate_bps)
{
    require_rate(rate_bps);
    FeasibilityResult result;
    result.scheme = Scheme::Ts;
    result.condition = ChannelCondition::Los;
    result.problem = make_context(params, geom, rate_bps, std::nullopt);
    result.tau = optimal_tau(result.problem.alpha);
    result.m_reflect = elements_for_rate(result.problem, ts_effective_bandwidth(result.problem));
    return finish(result);
}

FeasibilityResult solve_p3(const SystemParams& params, const LinkGeometry& geom, double rate_bps, double epsilon,
                           const SolveOptions& opts)
{
    return solve_nlos(params, geom, rate_bps, epsilon, Scheme::Es, opts);
}

FeasibilityResult solve_p4(const SystemParams& params, const LinkGeometry& geom, double rate_bps, double epsilon,
                           const SolveOptions& opts)
{
    return solve_nlos(params, geom, rate_bps, epsilon, Scheme::Ts, opts);
}

FeasibilityResult solve(const SystemParams& params, const LinkGeometry& geom, Scheme scheme,
                        ChannelCondition condition, double rate_bps, std::optional<double> epsilon,
                        const SolveOptions& opts)
{
    if (condition == ChannelCondition::Los)
        return scheme == Scheme::Es ? solve_p1(params, geom, rate_bps) : solve_p2(params, geom, rate_bps);
    if (!epsilon)
        throw std::invalid_argument("NLOS solve needs an outage margin");
    return scheme == Scheme::Es ? solve_p3(params, geom, rate_bps, *epsilon, opts)
                                : solve_p4(params, geom, rate_bps, *epsilon, opts);
}

ClosedFormTotals closed_form_totals(const SystemParams& params, const LinkGeometry& geom, double rate_bps)
{
    require_rate(rate_bps);
    const DerivedConstants dc = derive_constants(params, geom);
    const double n_gamma0 = params.num_bs_antennas * dc.gamma0;
    const double r = rate_bps / params.bandwidth_hz;
    ClosedFormTotals totals;
    totals.m_es = (1.0 + dc.alpha) * std::sqrt(std::expm1(r * std::numbers::ln2) / n_gamma0);
    totals.m_ts = std::sqrt(std::expm1(r * (1.0 + dc.alpha) * std::numbers::ln2) / n_gamma0);
    return totals;
}

FeasibilityResult integerize(const FeasibilityResult& result)
{
    FeasibilityResult out = result;
    out.m_reflect_int = snapped_ceil(result.m_reflect);
    if (result.scheme == Scheme::Es) {
        out.m_harvest_int = snapped_ceil(result.problem.alpha * static_cast<double>(out.m_reflect_int));
    } else {
        out.m_harvest_int = 0;
    }
    out.m_total_int = out.m_reflect_int + out.m_harvest_int;
    out.integer_diagnostics =
        evaluate_constraints(result.problem, result.scheme, result.condition, static_cast<double>(out.m_reflect_int),
                             static_cast<double>(out.m_harvest_int), result.tau);
    out.integer_feasible = out.integer_diagnostics.satisfied();
    return out;
}

FeasibilityResult oracle_grid_search(const SystemParams& params, const LinkGeometry& geom, double rate_bps,
                                     std::optional<double> epsilon, Scheme scheme, ChannelCondition condition,
                                     std::int64_t m_cap)
{
    require_rate(rate_bps);
    if (m_cap < 1)
        throw std::invalid_argument("m_cap must be >= 1");
    if (condition == ChannelCondition::Nlos) {
        if (!epsilon)
            throw std::invalid_argument("NLOS search needs an outage margin");
        check_epsilon(*epsilon);
    }

    const DerivedConstants dc = derive_constants(params, geom);
    const double harvest_per_element =
        params.harvest_efficiency * params.tx_power_w * dc.rho_sr * params.num_bs_antennas;
    const double p0 = params.element_power_w;

    // Reflect-side constraint for M elements active a (1 - tau) fraction of the time.
    auto reflect_ok = [&](std::int64_t m, double tau) {
        const double md = static_cast<double>(m);
        if (condition == ChannelCondition::Los)
            return (1.0 - tau) * rate_los(params, geom, md) >= rate_bps;
        const double gamma = scheme == Scheme::Es ? snr_threshold_es(rate_bps, params.bandwidth_hz)
                                                  : snr_threshold_ts(rate_bps, params.bandwidth_hz, tau);
        return outage_probability(gamma, OutageModel::for_elements(md), dc.gamma0, params.num_bs_antennas)
               <= *epsilon;
    };

    FeasibilityResult best;
    best.scheme = scheme;
    best.condition = condition;
    best.problem = make_context(params, geom, rate_bps, epsilon);
    bool found = false;

    if (scheme == Scheme::Es) {
        // Minimal harvest pool is nondecreasing in the reflect pool.
        std::int64_t harvest = 0;
        for (std::int64_t reflect = 1; reflect <= m_cap; ++reflect) {
            while (harvest_per_element * static_cast<double>(harvest) < static_cast<double>(reflect) * p0)
                ++harvest;
            if (reflect + harvest > m_cap)
                break;
            if (!reflect_ok(reflect, 0.0))
                continue;
            if (!found || reflect + harvest < best.m_total_int) {
                found = true;
                best.m_reflect_int = reflect;
                best.m_harvest_int = harvest;
                best.m_total_int = reflect + harvest;
            }
        }
    } else {
        const int steps = static_cast<int>(std::lround(1.0 / kTauGridStep));
        std::int64_t m = 1;
        for (int k = 0; k < steps; ++k) {
            const double tau = k * kTauGridStep;
            if (tau * harvest_per_element < (1.0 - tau) * p0)
                continue;
            while (m <= m_cap && !reflect_ok(m, tau))
                ++m;
            if (m > m_cap)
                break;
            if (!found || m < best.m_total_int) {
                found = true;
                best.m_reflect_int = m;
                best.m_harvest_int = 0;
                best.m_total_int = m;
                best.tau = tau;
            }
        }
    }

    if (!found)
        throw InfeasibleWithinCap(static_cast<double>(m_cap));

    best.m_reflect = static_cast<double>(best.m_reflect_int);
    best.m_harvest = static_cast<double>(best.m_harvest_int);
    best.m_total = best.m_reflect + best.m_harvest;
    best.diagnostics =
        evaluate_constraints(best.problem, scheme, condition, best.m_reflect, best.m_harvest, best.tau);
    best.integer_diagnostics = best.diagnostics;
    best.integer_feasible = true;
    return best;
}

} // namespace ssris
