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

#include "ssris/commands.hpp"

#include "ssris/csv.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace ssris::app {

namespace {

struct SolvePoint {
    double axis = 0.0;
    SystemParams params;
    Scheme scheme = Scheme::Es;
    ChannelCondition condition = ChannelCondition::Los;
    double rate_bps = 0.0;
    std::optional<double> epsilon;
};

ResultRow run_point(const SolvePoint& point, const LinkGeometry& geom, double max_elements)
{
    ResultRow row;
    row.axis = point.axis;
    row.scheme = point.scheme;
    row.condition = point.condition;
    try {
        SolveOptions opts;
        opts.max_elements = max_elements;
        row.result = solve(point.params, geom, point.scheme, point.condition, point.rate_bps, point.epsilon, opts);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::optional<double> first_epsilon(const RunConfig& cfg)
{
    return cfg.epsilons.empty() ? std::nullopt : std::optional<double>(cfg.epsilons.front());
}

} // namespace

std::vector<ResultRow> cmd_solve(const RunConfig& cfg)
{
    require_solvable(cfg);
    std::vector<ResultRow> rows;
    for (double rate : cfg.rates_bps) {
        for (auto condition : cfg.conditions) {
            std::vector<std::optional<double>> margins{std::nullopt};
            if (condition == ChannelCondition::Nlos)
                margins.assign(cfg.epsilons.begin(), cfg.epsilons.end());
            for (const auto& eps : margins) {
                for (auto scheme : cfg.schemes) {
                    const SolvePoint point{rate, cfg.params, scheme, condition, rate, eps};
                    rows.push_back(run_point(point, cfg.geometry, cfg.max_elements));
                }
            }
        }
    }
    return rows;
}

std::vector<ResultRow> cmd_sweep(const RunConfig& cfg, unsigned workers)
{
    require_sweepable(cfg);

    const std::vector<double>& axis_values = *cfg.sweep_axis == SweepAxis::Power  ? cfg.tx_powers_w
                                             : *cfg.sweep_axis == SweepAxis::Rate ? cfg.rates_bps
                                                                                  : cfg.epsilons;
    std::vector<SolvePoint> points;
    for (double value : axis_values) {
        for (auto condition : cfg.conditions) {
            for (auto scheme : cfg.schemes) {
                SolvePoint p{value, cfg.params, scheme, condition, cfg.rates_bps.front(), std::nullopt};
                if (condition == ChannelCondition::Nlos)
                    p.epsilon = first_epsilon(cfg);
                switch (*cfg.sweep_axis) {
                case SweepAxis::Power: p.params.tx_power_w = value; break;
                case SweepAxis::Rate: p.rate_bps = value; break;
                case SweepAxis::OutageMargin: p.epsilon = value; break;
                }
                points.push_back(p);
            }
        }
    }

    std::vector<ResultRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++)
            rows[i] = run_point(points[i], cfg.geometry, cfg.max_elements);
    };
    unsigned n = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, points.size()));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < n; ++k)
            pool.emplace_back(work);
    }
    return rows;
}

std::vector<ValidationRow> cmd_validate(const RunConfig& cfg)
{
    require_validatable(cfg);
    const ValidationPlan& plan = *cfg.validation;
    plan.mc.validate();
    const DerivedConstants dc = derive_constants(cfg.params, cfg.geometry);

    std::vector<ValidationRow> rows;
    for (std::int64_t m : plan.m_values) {
        const OutageModel model = OutageModel::for_elements(static_cast<double>(m));
        std::vector<double> gammas;
        for (double level : plan.outage_levels)
            gammas.push_back(snr_for_outage(level, model, dc.gamma0, cfg.params.num_bs_antennas));
        const auto reports = empirical_outage_curve(cfg.params, cfg.geometry, m, gammas, plan.mc, plan.with_ks);
        for (std::size_t k = 0; k < reports.size(); ++k)
            rows.push_back({plan.outage_levels[k], reports[k]});
    }
    return rows;
}

bool has_errors(const std::vector<ResultRow>& rows)
{
    return std::any_of(rows.begin(), rows.end(), [](const ResultRow& r) { return !r.error.empty(); });
}

void write_result_csv(std::ostream& out, const std::vector<ResultRow>& rows)
{
    out << kResultHeader << '\n';
    for (const auto& row : rows) {
        std::vector<std::string> f{format_number(row.axis), to_string(row.scheme), to_string(row.condition)};
        if (row.result) {
            const FeasibilityResult& r = *row.result;
            f.push_back(format_number(r.m_reflect));
            f.push_back(format_number(r.m_harvest));
            f.push_back(format_number(r.m_total));
            f.push_back(format_number(r.m_total_int));
            f.push_back(format_number(r.tau));
            f.push_back(format_number(r.diagnostics.rate_slack));
            f.push_back(format_number(r.diagnostics.ss_slack));
            f.push_back(format_number(r.diagnostics.outage_slack));
            f.emplace_back();
        } else {
            f.insert(f.end(), 8, std::string{});
            f.push_back(row.error);
        }
        write_csv_line(out, f);
    }
}

void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows)
{
    out << kValidationHeader << '\n';
    for (const auto& row : rows) {
        const McReport& r = row.report;
        write_csv_line(out, {format_number(r.m_elements), format_number(row.outage_level), format_number(r.gamma),
                             format_number(r.empirical_outage), format_number(r.analytic_outage),
                             format_number(r.abs_gap), format_number(r.binomial_stderr),
                             format_number(r.ks_distance),
                             format_number(static_cast<std::int64_t>(r.num_samples))});
    }
}

} // namespace ssris::app
