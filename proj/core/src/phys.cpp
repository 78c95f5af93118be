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

#include "ssris/phys.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssris {

namespace {

Complex unit_phasor(double phase) { return std::polar(1.0, phase); }

// Cascaded channel for a given surface->UE vector g.
ChannelRealization assemble(const SystemParams& params, const LinkGeometry& geom, const DerivedConstants& dc,
                            CVector g, const ChannelOptions& opts)
{
    const Eigen::Index n = params.num_bs_antennas;
    const Eigen::Index m = g.size();
    const CVector a_n = array_response(n, geom.psi_rad, opts.element_spacing_wl);
    const CVector a_m = array_response(m, geom.psi_rad, opts.element_spacing_wl);

    ChannelRealization chan;
    chan.G = std::sqrt(dc.rho_sr) * unit_phasor(-opts.ref_phase_sr_rad) * (a_n * a_m.transpose());
    chan.g = std::move(g);
    chan.H = chan.g.asDiagonal() * chan.G.adjoint();
    return chan;
}

} // namespace

const char* to_string(ChannelCondition condition)
{
    return condition == ChannelCondition::Los ? "LOS" : "NLOS";
}

CVector array_response(Eigen::Index size, double angle_rad, double spacing_wl)
{
    if (size < 1)
        throw std::invalid_argument("array size must be >= 1");
    const double step = 2.0 * std::numbers::pi * spacing_wl * std::sin(angle_rad);
    CVector a(size);
    for (Eigen::Index i = 0; i < size; ++i)
        a[i] = unit_phasor(step * static_cast<double>(i));
    return a;
}

ChannelRealization los_channel(const SystemParams& params, const LinkGeometry& geom, Eigen::Index num_elements,
                               const ChannelOptions& opts)
{
    if (num_elements < 1)
        throw std::invalid_argument("num_elements must be >= 1");
    const DerivedConstants dc = derive_constants(params, geom);
    CVector g = std::sqrt(dc.rho_rd) * unit_phasor(-opts.ref_phase_rd_rad)
                * array_response(num_elements, geom.theta_rad, opts.element_spacing_wl);

    ChannelRealization chan = assemble(params, geom, dc, std::move(g), opts);
    chan.condition = ChannelCondition::Los;

    // a_bar = diag(g) conj(a_M(psi)); ||a_bar||^2 = rho_rd M.
    const CVector a_bar =
        chan.g.cwiseProduct(array_response(num_elements, geom.psi_rad, opts.element_spacing_wl).conjugate());
    chan.u1 = a_bar / std::sqrt(dc.rho_rd * static_cast<double>(num_elements));
    chan.lambda1 = dc.rho0 * params.num_bs_antennas * static_cast<double>(num_elements);
    return chan;
}

ChannelRealization nlos_channel(const SystemParams& params, const LinkGeometry& geom, const CVector& fading,
                                const ChannelOptions& opts)
{
    if (fading.size() < 1)
        throw std::invalid_argument("fading vector must be non-empty");
    const double energy = fading.squaredNorm();
    if (!(energy > 0.0))
        throw std::domain_error("all-zero fading vector; dominant eigenvector undefined");

    const DerivedConstants dc = derive_constants(params, geom);
    ChannelRealization chan = assemble(params, geom, dc, std::sqrt(dc.rho_rd) * fading, opts);
    chan.condition = ChannelCondition::Nlos;
    chan.fading = fading;

    const CVector a_tilde =
        fading.cwiseProduct(array_response(fading.size(), geom.psi_rad, opts.element_spacing_wl).conjugate());
    chan.u1 = a_tilde / a_tilde.norm();
    chan.lambda1 = dc.rho0 * params.num_bs_antennas * energy;
    return chan;
}

CVector optimal_phases(const CVector& u1)
{
    CVector phi(u1.size());
    for (Eigen::Index i = 0; i < u1.size(); ++i) {
        const double mag = std::abs(u1[i]);
        if (!(mag > 0.0))
            throw std::domain_error("zero eigenvector entry; phase undefined");
        phi[i] = u1[i] / mag;
    }
    return phi;
}

CVector mrt_precoder(const CMatrix& H, const CVector& phi)
{
    if (phi.size() != H.rows())
        throw std::invalid_argument("phase vector length does not match channel rows");
    // (phi^H H)^H = H^H phi
    const CVector eff = H.adjoint() * phi;
    const double norm = eff.norm();
    if (!(norm > 0.0))
        throw std::domain_error("effective channel phi^H H is zero; MRT undefined");
    return eff / norm;
}

double snr(const SystemParams& params, const ChannelRealization& chan, const CVector& phi)
{
    if (phi.size() != chan.u1.size())
        throw std::invalid_argument("phase vector length does not match channel");
    const double proj = std::norm(phi.dot(chan.u1));  // |phi^H u1|^2
    return params.tx_power_w * chan.lambda1 * proj / (params.bandwidth_hz * params.noise_psd_w_per_hz);
}

double harvested_power(const SystemParams& params, const ChannelRealization& chan, const CVector& w)
{
    if (w.size() != chan.G.rows())
        throw std::invalid_argument("precoder length does not match antenna count");
    return params.tx_power_w * (chan.G.adjoint() * w).squaredNorm();
}

double rate_los(const SystemParams& params, const LinkGeometry& geom, double num_elements)
{
    if (num_elements < 0.0)
        throw std::invalid_argument("num_elements must be >= 0");
    const DerivedConstants dc = derive_constants(params, geom);
    return params.bandwidth_hz
           * std::log2(1.0 + dc.gamma0 * params.num_bs_antennas * num_elements * num_elements);
}

LinkMeasurement simulate_link(const SystemParams& params, const ChannelRealization& chan, const CVector& phi,
                              const CVector& w)
{
    if (phi.size() != chan.H.rows() || w.size() != chan.H.cols())
        throw std::invalid_argument("beamformer dimensions do not match channel");
    const Complex gain = phi.dot(chan.H * w);  // phi^H H w
    LinkMeasurement out;
    out.snr = params.tx_power_w * std::norm(gain) / (params.bandwidth_hz * params.noise_psd_w_per_hz);
    out.harvested_power_w = params.tx_power_w * (chan.G.adjoint() * w).squaredNorm();
    return out;
}

BeamformingSolution design_beamforming(const SystemParams& params, const ChannelRealization& chan)
{
    BeamformingSolution sol;
    sol.phi = optimal_phases(chan.u1);
    sol.w = mrt_precoder(chan.H, sol.phi);
    sol.snr = snr(params, chan, sol.phi);
    sol.harvested_power_w = harvested_power(params, chan, sol.w);
    sol.rate_bps = params.bandwidth_hz * std::log2(1.0 + sol.snr);
    return sol;
}

} // namespace ssris
