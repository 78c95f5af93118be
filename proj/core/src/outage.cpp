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

#include "ssris/outage.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ssris {

namespace {

constexpr double kFourMinusPi = 4.0 - std::numbers::pi;

void require_gamma0_and_n(double gamma0, int n_antennas)
{
    if (!(gamma0 > 0.0))
        throw std::invalid_argument("gamma0 must be positive");
    if (n_antennas < 1)
        throw std::invalid_argument("n_antennas must be >= 1");
}

} // namespace

void check_epsilon(double epsilon)
{
    if (!(epsilon >= kMinEpsilon && epsilon <= kMaxEpsilon))
        throw std::invalid_argument("epsilon " + std::to_string(epsilon) + " outside supported range [1e-9, 0.5]");
}

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double q_function_inverse(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("q_function_inverse needs p in (0, 1)");
    return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

OutageModel OutageModel::for_elements(double m_elements)
{
    if (!(m_elements > 0.0) || !std::isfinite(m_elements))
        throw std::invalid_argument("element count must be positive");
    OutageModel model;
    model.m_elements = m_elements;
    model.mu_y = m_elements * std::sqrt(std::numbers::pi) / 2.0;
    model.sigma_y = std::sqrt(m_elements * kFourMinusPi / 4.0);
    model.c_norm = 1.0 / q_function(-model.mu_y / model.sigma_y);
    return model;
}

void OutageSpec::validate() const
{
    if (!(gamma_threshold > 0.0))
        throw std::invalid_argument("gamma_threshold must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (rate_target_bps < 0.0)
        throw std::invalid_argument("rate_target_bps must be non-negative");
}

double truncated_gaussian_cdf(double y, const OutageModel& model)
{
    if (!(y > 0.0))
        return 0.0;
    const double z = (y - model.mu_y) / model.sigma_y;
    double value = 0.0;
    if (z < 0.0) {
        // 1 - C Q(z) = C (Q(-z) - Q(mu/sigma)); avoids cancellation in the lower tail.
        value = model.c_norm * (q_function(-z) - q_function(model.mu_y / model.sigma_y));
    } else {
        value = 1.0 - model.c_norm * q_function(z);
    }
    return std::clamp(value, 0.0, 1.0);
}

double truncated_gaussian_quantile(double p, const OutageModel& model)
{
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("quantile needs p in [0, 1)");
    if (p == 0.0)
        return 0.0;
    // Lower tail: F = C (Q(-z) - Q(mu/sigma)), which keeps p's relative precision.
    const double z = p < 0.5 ? -q_function_inverse(p / model.c_norm + q_function(model.mu_y / model.sigma_y))
                             : q_function_inverse((1.0 - p) / model.c_norm);
    return std::max(0.0, model.mu_y + model.sigma_y * z);
}

double outage_probability(double gamma, const OutageModel& model, double gamma0, int n_antennas)
{
    if (gamma < 0.0)
        throw std::invalid_argument("gamma must be non-negative");
    require_gamma0_and_n(gamma0, n_antennas);
    return truncated_gaussian_cdf(std::sqrt(gamma / (n_antennas * gamma0)), model);
}

double snr_for_outage(double p, const OutageModel& model, double gamma0, int n_antennas)
{
    require_gamma0_and_n(gamma0, n_antennas);
    const double y = truncated_gaussian_quantile(p, model);
    return n_antennas * gamma0 * y * y;
}

double snr_threshold_es(double rate_bps, double bandwidth_hz)
{
    if (rate_bps < 0.0)
        throw std::invalid_argument("rate must be non-negative");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    return std::expm1(rate_bps / bandwidth_hz * std::numbers::ln2);
}

double snr_threshold_ts(double rate_bps, double bandwidth_hz, double tau)
{
    if (!(tau >= 0.0 && tau < 1.0))
        throw std::invalid_argument("tau must lie in [0, 1)");
    return snr_threshold_es(rate_bps, (1.0 - tau) * bandwidth_hz);
}

double f1(double m_rf, double epsilon)
{
    return (1.0 - epsilon) * q_function(-std::sqrt(m_rf * std::numbers::pi / kFourMinusPi));
}

double f2(double m_rf, double gamma, double gamma0, int n_antennas)
{
    const double arg = 2.0 * std::sqrt(gamma / (n_antennas * gamma0 * m_rf * kFourMinusPi))
                       - std::sqrt(m_rf * std::numbers::pi / kFourMinusPi);
    return q_function(arg);
}

} // namespace ssris
