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

#ifndef SSRIS_VALIDATE_HPP
#define SSRIS_VALIDATE_HPP

#include "ssris/model.hpp"
#include "ssris/outage.hpp"
#include "ssris/phys.hpp"
#include "ssris/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ssris {

struct McConfig {
    std::uint64_t num_samples = 1'000'000;
    std::uint64_t seed = 0x5EED5EEDULL;
    unsigned num_streams = 1;

    void validate() const;
};

struct McReport {
    std::int64_t m_elements = 0;
    double gamma = 0.0;
    double empirical_outage = 0.0;
    double analytic_outage = 0.0;
    double abs_gap = 0.0;
    double binomial_stderr = 0.0;
    std::optional<double> ks_distance;
    std::uint64_t num_samples = 0;
};

struct IdentityReport {
    int trials = 0;
    std::vector<std::uint64_t> failing_trials;
    double max_snr_rel_err = 0.0;
    double max_power_rel_err = 0.0;
    double max_collinearity_err = 0.0;

    bool passed() const { return failing_trials.empty(); }
};

/// i.i.d. CN(0, 1) entries drawn from the next `m` blocks of `stream`.
CVector sample_fading(Eigen::Index m, RandomStream& stream);

/// Y_i = sum_m |g_im| for every Monte Carlo sample i. Sample i always uses
/// substream (cfg.seed, i), whatever cfg.num_streams is.
std::vector<double> sample_envelope_sums(Eigen::Index m, const McConfig& cfg);

/// Kolmogorov distance between the empirical CDF of `samples` and the
/// truncated-Gaussian CDF. Sorts a copy.
double ks_distance(std::span<const double> samples, const OutageModel& model);

/// Empirical P{Gamma < gamma} with Gamma = Gamma0 N Y^2 against the analytic
/// truncated-Gaussian outage.
McReport empirical_outage(const SystemParams& params, const LinkGeometry& geom, Eigen::Index m, double gamma,
                          const McConfig& cfg);

/// As empirical_outage for several thresholds sharing one set of draws.
std::vector<McReport> empirical_outage_curve(const SystemParams& params, const LinkGeometry& geom, Eigen::Index m,
                                             std::span<const double> gammas, const McConfig& cfg,
                                             bool with_ks = false);

/// Trial 0 uses `geom`; later trials draw angles and distances at random.
/// Checks simulate_link against Gamma0 N M^2 and P N M rho_sr (1e-9 relative).
IdentityReport verify_los_identities(const SystemParams& params, const LinkGeometry& geom, int n_antennas,
                                     Eigen::Index m, int trials, std::uint64_t seed = 1);

/// Per sampled fading vector: SNR equals Gamma0 N (sum |a_m|)^2, the MRT
/// precoder is collinear with a_N(psi) and harvesting is at its bound.
IdentityReport verify_nlos_identities(const SystemParams& params, const LinkGeometry& geom, int n_antennas,
                                      Eigen::Index m, int trials, std::uint64_t seed = 1);

} // namespace ssris

#endif // SSRIS_VALIDATE_HPP
