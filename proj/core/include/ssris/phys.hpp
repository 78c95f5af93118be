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

#ifndef SSRIS_PHYS_HPP
#define SSRIS_PHYS_HPP

#include "ssris/model.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>

namespace ssris {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

enum class ChannelCondition { Los, Nlos };

const char* to_string(ChannelCondition condition);

/// Knobs that do not change any SNR or power figure but matter for
/// signal-level fidelity.
struct ChannelOptions {
    double ref_phase_sr_rad = 0.0;
    double ref_phase_rd_rad = 0.0;
    double element_spacing_wl = 0.5;
};

/// Cascaded BS -> surface -> UE channel together with the dominant
/// eigenpair of V = H H^H, which is rank one because G is pure LOS.
struct ChannelRealization {
    CMatrix G;                      // N x M, BS to surface
    CVector g;                      // M, surface to UE
    CMatrix H;                      // M x N, diag(g) G^H
    std::optional<CVector> fading;  // normalized fading, NLOS only
    double lambda1 = 0.0;
    CVector u1;
    ChannelCondition condition = ChannelCondition::Los;

    Eigen::Index num_elements() const { return g.size(); }
    Eigen::Index num_antennas() const { return G.rows(); }
};

struct BeamformingSolution {
    CVector w;
    CVector phi;
    double snr = 0.0;
    double harvested_power_w = 0.0;
    double rate_bps = 0.0;
};

struct LinkMeasurement {
    double snr = 0.0;
    double harvested_power_w = 0.0;
};

/// Unit-modulus steering vector with phase 2*pi*spacing*i*sin(angle) on
/// element i. The scene is coplanar, so only the horizontal index matters.
CVector array_response(Eigen::Index size, double angle_rad, double spacing_wl = 0.5);

ChannelRealization los_channel(const SystemParams& params, const LinkGeometry& geom, Eigen::Index num_elements,
                               const ChannelOptions& opts = {});

/// `fading` is the normalized small-scale vector; g = sqrt(rho_rd) * fading.
ChannelRealization nlos_channel(const SystemParams& params, const LinkGeometry& geom, const CVector& fading,
                                const ChannelOptions& opts = {});

/// exp(j angle(u1)). Throws std::domain_error on a zero entry.
CVector optimal_phases(const CVector& u1);

/// (phi^H H)^H / ||phi^H H||.
CVector mrt_precoder(const CMatrix& H, const CVector& phi);

/// P lambda1 |phi^H u1|^2 / (B N0) using the stored eigenpair.
double snr(const SystemParams& params, const ChannelRealization& chan, const CVector& phi);

/// P ||G^H w||^2.
double harvested_power(const SystemParams& params, const ChannelRealization& chan, const CVector& w);

/// B log2(1 + Gamma0 N M^2); M may be fractional.
double rate_los(const SystemParams& params, const LinkGeometry& geom, double num_elements);

/// Brute-force evaluation of phi^H H w and G^H w, no eigen shortcuts.
LinkMeasurement simulate_link(const SystemParams& params, const ChannelRealization& chan, const CVector& phi,
                              const CVector& w);

/// Optimal phases, MRT precoder and the analytic figures they produce.
BeamformingSolution design_beamforming(const SystemParams& params, const ChannelRealization& chan);

} // namespace ssris

#endif // SSRIS_PHYS_HPP
