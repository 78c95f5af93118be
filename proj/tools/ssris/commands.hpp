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

#ifndef SSRIS_APP_COMMANDS_HPP
#define SSRIS_APP_COMMANDS_HPP

#include "ssris/config.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ssris::app {

inline constexpr std::string_view kResultHeader =
    "axis,scheme,condition,m_reflect,m_harvest,m_total,m_total_int,tau,rate_slack,ss_slack,outage_slack,error";

inline constexpr std::string_view kValidationHeader =
    "m_elements,outage_level,gamma,empirical_outage,analytic_outage,abs_gap,binomial_stderr,ks_distance,num_samples";

/// One (axis value, scheme, condition) solve. Either `result` is set or
/// `error` describes the per-point failure.
struct ResultRow {
    double axis = 0.0;
    Scheme scheme = Scheme::Es;
    ChannelCondition condition = ChannelCondition::Los;
    std::optional<FeasibilityResult> result;
    std::string error;
};

struct ValidationRow {
    double outage_level = 0.0;
    McReport report;
};

/// Rows for every rate target x condition (x epsilon for NLOS) x scheme.
/// The axis column carries the rate target.
std::vector<ResultRow> cmd_solve(const RunConfig& cfg);

/// Rows in axis order; points run on up to `workers` threads (0 = hardware
/// concurrency) without affecting the output.
std::vector<ResultRow> cmd_sweep(const RunConfig& cfg, unsigned workers = 0);

/// M x outage-level matrix of Monte Carlo reports; gamma is chosen so the
/// analytic outage equals each level.
std::vector<ValidationRow> cmd_validate(const RunConfig& cfg);

bool has_errors(const std::vector<ResultRow>& rows);

void write_result_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_validation_csv(std::ostream& out, const std::vector<ValidationRow>& rows);

} // namespace ssris::app

#endif // SSRIS_APP_COMMANDS_HPP
