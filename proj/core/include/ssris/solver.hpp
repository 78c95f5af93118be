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

#ifndef SSRIS_SOLVER_HPP
#define SSRIS_SOLVER_HPP

#include "ssris/model.hpp"
#include "ssris/phys.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

namespace ssris {

enum class Scheme { Es, Ts };

const char* to_string(Scheme scheme);

inline constexpr double kDefaultMaxElements = 16'777'216.0;  // 2^24

/// No sign change (or no feasible integer point) below the element ceiling.
class InfeasibleWithinCap : public std::runtime_error {
public:
    explicit InfeasibleWithinCap(double ceiling);
    double ceiling() const noexcept { return ceiling_; }

private:
    double ceiling_;
};

/// Everything needed to re-evaluate the constraints of one problem instance.
struct ProblemContext {
    double rate_target_bps = 0.0;
    std::optional<double> epsilon;  // NLOS only
    double gamma0 = 0.0;
    double bandwidth_hz = 0.0;
    int num_antennas = 1;
    double alpha = 0.0;
};

/// Relative constraint residuals; >= 0 means satisfied, 0 means tight.
struct Diagnostics {
    double ss_slack = 0.0;
    std::optional<double> rate_slack;    // LOS
    std::optional<double> outage_slack;  // NLOS, (eps - P_out) / eps

    bool satisfied(double tol = 1e-9) const;
};

struct FeasibilityResult {
    Scheme scheme = Scheme::Es;
    ChannelCondition condition = ChannelCondition::Los;
    double m_reflect = 0.0;
    double m_harvest = 0.0;
    double m_total = 0.0;
    double tau = 0.0;
    std::int64_t m_reflect_int = 0;
    std::int64_t m_harvest_int = 0;
    std::int64_t m_total_int = 0;
    Diagnostics diagnostics;          // at the continuous optimum
    Diagnostics integer_diagnostics;  // at the integer counts
    bool integer_feasible = false;
    double root_gap = 0.0;            // |f2 - f1| at the root, NLOS only
    ProblemContext problem;
};

struct SolveOptions {
    double max_elements = kDefaultMaxElements;
};

struct RootSearch {
    double root = 0.0;
    double gap = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
};

/// Smallest root of an increasing-at-crossing function that is negative at
/// 0+: geometric bracket scan from 1 doubling up to `max_x`, a 64-point
/// linear sub-scan of the bracketing octave, then bisection. The returned
/// root sits on the non-negative side of the crossing.
RootSearch find_minimum_root(const std::function<double(double)>& fn, double max_x);

/// Evaluates both constraints of (scheme, condition) at the given counts.
Diagnostics evaluate_constraints(const ProblemContext& problem, Scheme scheme, ChannelCondition condition,
                                 double m_reflect, double m_harvest, double tau);

/// ES, LOS user link.
FeasibilityResult solve_p1(const SystemParams& params, const LinkGeometry& geom, double rate_bps);

/// TS, LOS user link.
FeasibilityResult solve_p2(const SystemParams& params, const LinkGeometry& geom, double rate_bps);

/// ES, Rayleigh user link with outage margin epsilon.
FeasibilityResult solve_p3(const SystemParams& params, const LinkGeometry& geom, double rate_bps, double epsilon,
                           const SolveOptions& opts = {});

/// TS, Rayleigh user link with outage margin epsilon.
FeasibilityResult solve_p4(const SystemParams& params, const LinkGeometry& geom, double rate_bps, double epsilon,
                           const SolveOptions& opts = {});

/// Dispatches to solve_p1..p4. `epsilon` is required for NLOS. All four throw
/// std::overflow_error when the required count exceeds 2^53.
FeasibilityResult solve(const SystemParams& params, const LinkGeometry& geom, Scheme scheme,
                        ChannelCondition condition, double rate_bps, std::optional<double> epsilon,
                        const SolveOptions& opts = {});

struct ClosedFormTotals {
    double m_es = 0.0;
    double m_ts = 0.0;
};

/// Totals of P1 and P2 written directly in alpha.
ClosedFormTotals closed_form_totals(const SystemParams& params, const LinkGeometry& geom, double rate_bps);

/// Rounds a continuous optimum up to whole elements, pool by pool: the
/// reflect pool is ceil(M_Rf) and, for ES, the harvest pool is the smallest
/// count that sustains that integer reflect pool. Constraints are
/// re-evaluated at the integer point.
FeasibilityResult integerize(const FeasibilityResult& result);

/// Exhaustive integer search (tau on a 1e-4 grid for TS) evaluating the
/// constraints from their defining expressions. Reference for the closed
/// forms and root finder; throws InfeasibleWithinCap if no point with total
/// <= m_cap exists.
FeasibilityResult oracle_grid_search(const SystemParams& params, const LinkGeometry& geom, double rate_bps,
                                     std::optional<double> epsilon, Scheme scheme, ChannelCondition condition,
                                     std::int64_t m_cap);

} // namespace ssris

#endif // SSRIS_SOLVER_HPP
