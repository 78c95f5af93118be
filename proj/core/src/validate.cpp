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

#include "ssris/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace ssris {

namespace {

constexpr double kIdentityTol = 1e-9;

double rel_err(double value, double reference)
{
    return std::abs(value - reference) / std::abs(reference);
}

double rayleigh_magnitude(double u) { return std::sqrt(-std::log(u)); }

// Runs body(begin, end) over `cfg.num_streams` contiguous chunks of [0, n).
template <typename Body>
void for_each_chunk(std::uint64_t n, unsigned num_streams, Body body)
{
    const unsigned streams = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, num_streams), n));
    if (streams <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(streams);
    for (unsigned s = 0; s < streams; ++s) {
        const std::uint64_t begin = n * s / streams;
        const std::uint64_t end = n * (s + 1) / streams;
        workers.emplace_back([=, &body] { body(begin, end); });
    }
}

SystemParams with_antennas(SystemParams params, int n_antennas)
{
    if (n_antennas < 1)
        throw std::invalid_argument("n_antennas must be >= 1");
    params.num_bs_antennas = n_antennas;
    return params;
}

} // namespace

void McConfig::validate() const
{
    if (num_samples < 1)
        throw std::invalid_argument("num_samples must be >= 1");
    if (num_streams < 1)
        throw std::invalid_argument("num_streams must be >= 1");
}

CVector sample_fading(Eigen::Index m, RandomStream& stream)
{
    if (m < 1)
        throw std::invalid_argument("fading length must be >= 1");
    CVector g(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto [u_mag, u_phase] = stream.next_uniform_pair();
        g[i] = std::polar(rayleigh_magnitude(u_mag), 2.0 * std::numbers::pi * u_phase);
    }
    return g;
}

std::vector<double> sample_envelope_sums(Eigen::Index m, const McConfig& cfg)
{
    cfg.validate();
    if (m < 1)
        throw std::invalid_argument("element count must be >= 1");
    std::vector<double> sums(cfg.num_samples);
    for_each_chunk(cfg.num_samples, cfg.num_streams, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            RandomStream stream(cfg.seed, i);
            double y = 0.0;
            for (Eigen::Index k = 0; k < m; ++k)
                y += rayleigh_magnitude(stream.next_uniform_pair()[0]);
            sums[i] = y;
        }
    });
    return sums;
}

double ks_distance(std::span<const double> samples, const OutageModel& model)
{
    if (samples.empty())
        throw std::invalid_argument("no samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = truncated_gaussian_cdf(sorted[i], model);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

std::vector<McReport> empirical_outage_curve(const SystemParams& params, const LinkGeometry& geom, Eigen::Index m,
                                             std::span<const double> gammas, const McConfig& cfg, bool with_ks)
{
    const DerivedConstants dc = derive_constants(params, geom);
    const OutageModel model = OutageModel::for_elements(static_cast<double>(m));
    const std::vector<double> sums = sample_envelope_sums(m, cfg);
    const double scale = dc.gamma0 * params.num_bs_antennas;

    std::optional<double> ks;
    if (with_ks)
        ks = ks_distance(sums, model);

    std::vector<McReport> reports;
    reports.reserve(gammas.size());
    for (const double gamma : gammas) {
        if (gamma < 0.0)
            throw std::invalid_argument("gamma must be non-negative");
        std::uint64_t below = 0;
        for (const double y : sums)
            below += (scale * y * y < gamma) ? 1u : 0u;

        McReport r;
        r.m_elements = m;
        r.gamma = gamma;
        r.num_samples = cfg.num_samples;
        r.empirical_outage = static_cast<double>(below) / static_cast<double>(cfg.num_samples);
        r.analytic_outage = outage_probability(gamma, model, dc.gamma0, params.num_bs_antennas);
        r.abs_gap = std::abs(r.empirical_outage - r.analytic_outage);
        r.binomial_stderr =
            std::sqrt(r.empirical_outage * (1.0 - r.empirical_outage) / static_cast<double>(cfg.num_samples));
        r.ks_distance = ks;
        reports.push_back(r);
    }
    return reports;
}

McReport empirical_outage(const SystemParams& params, const LinkGeometry& geom, Eigen::Index m, double gamma,
                          const McConfig& cfg)
{
    const double g[] = {gamma};
    return empirical_outage_curve(params, geom, m, g, cfg, false).front();
}

IdentityReport verify_los_identities(const SystemParams& params, const LinkGeometry& geom, int n_antennas,
                                     Eigen::Index m, int trials, std::uint64_t seed)
{
    const SystemParams p = with_antennas(params, n_antennas);
    IdentityReport report;
    report.trials = trials;

    for (int t = 0; t < trials; ++t) {
        LinkGeometry trial_geom = geom;
        ChannelOptions opts;
        if (t > 0) {
            RandomStream stream(seed, static_cast<std::uint64_t>(t));
            const auto [ua, ub] = stream.next_uniform_pair();
            const auto [uc, ud] = stream.next_uniform_pair();
            const auto [ue, uf] = stream.next_uniform_pair();
            trial_geom = raw_geometry(2.8 * (ua - 0.5), 2.8 * (ub - 0.5), 5.0 + 95.0 * uc, 5.0 + 95.0 * ud);
            opts.ref_phase_sr_rad = 2.0 * std::numbers::pi * ue;
            opts.ref_phase_rd_rad = 2.0 * std::numbers::pi * uf;
        }

        const DerivedConstants dc = derive_constants(p, trial_geom);
        const ChannelRealization chan = los_channel(p, trial_geom, m, opts);
        const CVector phi = optimal_phases(chan.u1);
        const CVector w = mrt_precoder(chan.H, phi);
        const LinkMeasurement meas = simulate_link(p, chan, phi, w);

        const double md = static_cast<double>(m);
        const double snr_err = rel_err(meas.snr, dc.gamma0 * n_antennas * md * md);
        const double power_err = rel_err(meas.harvested_power_w, p.tx_power_w * n_antennas * md * dc.rho_sr);
        const CVector a_n = array_response(n_antennas, trial_geom.psi_rad, opts.element_spacing_wl);
        const double col_err = rel_err(std::abs(a_n.dot(w)), std::sqrt(static_cast<double>(n_antennas)));

        report.max_snr_rel_err = std::max(report.max_snr_rel_err, snr_err);
        report.max_power_rel_err = std::max(report.max_power_rel_err, power_err);
        report.max_collinearity_err = std::max(report.max_collinearity_err, col_err);
        if (!(snr_err <= kIdentityTol && power_err <= kIdentityTol && col_err <= kIdentityTol))
            report.failing_trials.push_back(static_cast<std::uint64_t>(t));
    }
    return report;
}

IdentityReport verify_nlos_identities(const SystemParams& params, const LinkGeometry& geom, int n_antennas,
                                      Eigen::Index m, int trials, std::uint64_t seed)
{
    const SystemParams p = with_antennas(params, n_antennas);
    const DerivedConstants dc = derive_constants(p, geom);
    const CVector a_m_conj = array_response(m, geom.psi_rad).conjugate();
    const CVector a_n = array_response(n_antennas, geom.psi_rad);

    IdentityReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        RandomStream stream(seed, static_cast<std::uint64_t>(t));
        const CVector fading = sample_fading(m, stream);
        const ChannelRealization chan = nlos_channel(p, geom, fading);
        const CVector phi = optimal_phases(chan.u1);
        const CVector w = mrt_precoder(chan.H, phi);
        const LinkMeasurement meas = simulate_link(p, chan, phi, w);

        const double y = fading.cwiseProduct(a_m_conj).cwiseAbs().sum();
        const double snr_err = rel_err(meas.snr, dc.gamma0 * n_antennas * y * y);
        const double power_err =
            rel_err(meas.harvested_power_w, p.tx_power_w * n_antennas * static_cast<double>(m) * dc.rho_sr);
        const double col_err = rel_err(std::abs(a_n.dot(w)), std::sqrt(static_cast<double>(n_antennas)));

        report.max_snr_rel_err = std::max(report.max_snr_rel_err, snr_err);
        report.max_power_rel_err = std::max(report.max_power_rel_err, power_err);
        report.max_collinearity_err = std::max(report.max_collinearity_err, col_err);
        if (!(snr_err <= kIdentityTol && power_err <= kIdentityTol && col_err <= kIdentityTol))
            report.failing_trials.push_back(static_cast<std::uint64_t>(t));
    }
    return report;
}

} // namespace ssris
