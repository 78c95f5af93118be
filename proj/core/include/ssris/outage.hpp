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

#ifndef SSRIS_OUTAGE_HPP
#define SSRIS_OUTAGE_HPP

namespace ssris {

/// Outage margins outside this range are rejected: below it the tail
/// arithmetic dominates, above it the approximation is meaningless.
inline constexpr double kMinEpsilon = 1e-9;
inline constexpr double kMaxEpsilon = 0.5;

void check_epsilon(double epsilon);

/// Gaussian tail probability, 0.5 erfc(x / sqrt 2).
double q_function(double x);

/// Inverse of q_function on (0, 1).
double q_function_inverse(double p);

/// Truncated-Gaussian stand-in for Y = sum_m |g_m| with g ~ CN(0, I_M).
struct OutageModel {
    double m_elements = 0.0;
    double mu_y = 0.0;
    double sigma_y = 0.0;
    double c_norm = 1.0;  // 1 / Q(-mu/sigma), renormalizes the y < 0 mass away

    /// M may be fractional (continuous relaxation); must be > 0.
    static OutageModel for_elements(double m_elements);
};

struct OutageSpec {
    double gamma_threshold = 0.0;
    double epsilon = 0.01;
    double rate_target_bps = 0.0;

    void validate() const;
};

double truncated_gaussian_cdf(double y, const OutageModel& model);

/// Smallest y with F_Y(y) = p, p in [0, 1).
double truncated_gaussian_quantile(double p, const OutageModel& model);

/// P{Gamma < gamma} = F_Y(sqrt(gamma / (N Gamma0))).
double outage_probability(double gamma, const OutageModel& model, double gamma0, int n_antennas);

/// The SNR threshold at which outage_probability equals `p`.
double snr_for_outage(double p, const OutageModel& model, double gamma0, int n_antennas);

/// 2^(R0/B) - 1.
double snr_threshold_es(double rate_bps, double bandwidth_hz);

/// 2^(R0/((1-tau)B)) - 1; tau in [0, 1).
double snr_threshold_ts(double rate_bps, double bandwidth_hz, double tau);

// The outage constraint P_out <= eps, rearranged as f1(M) <= f2(M).
double f1(double m_rf, double epsilon);
double f2(double m_rf, double gamma, double gamma0, int n_antennas);

} // namespace ssris

#endif // SSRIS_OUTAGE_HPP
