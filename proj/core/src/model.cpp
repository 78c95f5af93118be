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

#include "ssris/model.hpp"

#include <cmath>

namespace ssris {

namespace {

void require_positive(double value, const char* name)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

void require_angle_in_domain(double angle_rad, const char* name)
{
    if (!std::isfinite(angle_rad) || std::abs(angle_rad) >= std::numbers::pi / 2.0 - kAngleDomainMargin)
        throw GeometryError(std::string(name) + " lies outside (-pi/2, pi/2); cosine gain model undefined");
}

double wrap_angle(double a)
{
    return std::remainder(a, 2.0 * std::numbers::pi);
}

} // namespace

double thermal_noise_psd(double noise_figure_db)
{
    // dBm/Hz -> W/Hz
    return std::pow(10.0, (kThermalNoiseDbmPerHz + noise_figure_db - 30.0) / 10.0);
}

void SystemParams::validate() const
{
    require_positive(carrier_freq_hz, "carrier_freq_hz");
    require_positive(bandwidth_hz, "bandwidth_hz");
    require_positive(noise_psd_w_per_hz, "noise_psd_w_per_hz");
    if (num_bs_antennas < 1)
        throw std::invalid_argument("num_bs_antennas must be >= 1");
    require_positive(harvest_efficiency, "harvest_efficiency");
    if (harvest_efficiency > 1.0)
        throw std::invalid_argument("harvest_efficiency must be <= 1");
    require_positive(element_power_w, "element_power_w");
    require_positive(tx_power_w, "tx_power_w");
    require_positive(area_side_m, "area_side_m");
}

void LinkGeometry::validate() const
{
    require_positive(d_sr_m, "d_sr_m");
    require_positive(d_rd_m, "d_rd_m");
    require_angle_in_domain(psi_rad, "psi");
    require_angle_in_domain(theta_rad, "theta");
}

double wavelength(double freq_hz)
{
    require_positive(freq_hz, "frequency");
    return kSpeedOfLight / freq_hz;
}

double fspl(double angle_rad, double distance_m, double lambda_m)
{
    require_positive(distance_m, "distance");
    require_positive(lambda_m, "wavelength");
    require_angle_in_domain(angle_rad, "angle");
    const double spread = lambda_m / (4.0 * std::numbers::pi * distance_m);
    return spread * spread * std::numbers::pi * std::cos(angle_rad);
}

LinkGeometry geometry_from_positions(Point2 bs, Point2 ue, Point2 ris, double normal_rad)
{
    const double sr_x = ris.x - bs.x;
    const double sr_y = ris.y - bs.y;
    const double rd_x = ue.x - ris.x;
    const double rd_y = ue.y - ris.y;

    LinkGeometry geom;
    geom.bs = bs;
    geom.ue = ue;
    geom.ris = ris;
    geom.normal_rad = normal_rad;
    geom.d_sr_m = std::hypot(sr_x, sr_y);
    geom.d_rd_m = std::hypot(rd_x, rd_y);
    if (!(geom.d_sr_m > 0.0))
        throw GeometryError("surface position coincides with the BS");
    if (!(geom.d_rd_m > 0.0))
        throw GeometryError("surface position coincides with the UE");

    geom.psi_rad = wrap_angle(std::atan2(sr_y, sr_x) - normal_rad);
    geom.theta_rad = wrap_angle(std::atan2(rd_y, rd_x) - normal_rad);
    geom.validate();
    return geom;
}

LinkGeometry raw_geometry(double psi_rad, double theta_rad, double d_sr_m, double d_rd_m)
{
    LinkGeometry geom;
    geom.psi_rad = psi_rad;
    geom.theta_rad = theta_rad;
    geom.d_sr_m = d_sr_m;
    geom.d_rd_m = d_rd_m;
    // Synthesize consistent coordinates for reporting.
    geom.ris = {d_sr_m * std::cos(psi_rad), d_sr_m * std::sin(psi_rad)};
    geom.ue = {geom.ris.x + d_rd_m * std::cos(theta_rad), geom.ris.y + d_rd_m * std::sin(theta_rad)};
    geom.validate();
    return geom;
}

LinkGeometry default_geometry(double area_side_m)
{
    require_positive(area_side_m, "area_side_m");
    return geometry_from_positions({0.0, 0.0}, {area_side_m, area_side_m}, {area_side_m / 2.0, 0.0},
                                   std::numbers::pi / 4.0);
}

DerivedConstants derive_constants(const SystemParams& params, const LinkGeometry& geom)
{
    params.validate();
    geom.validate();

    DerivedConstants dc;
    dc.lambda_m = wavelength(params.carrier_freq_hz);
    dc.rho_sr = fspl(geom.psi_rad, geom.d_sr_m, dc.lambda_m);
    dc.rho_rd = fspl(geom.theta_rad, geom.d_rd_m, dc.lambda_m);
    dc.rho0 = dc.rho_sr * dc.rho_rd;
    dc.gamma0 = params.tx_power_w * dc.rho0 / (params.bandwidth_hz * params.noise_psd_w_per_hz);
    dc.alpha = params.element_power_w
               / (params.harvest_efficiency * params.tx_power_w * params.num_bs_antennas * dc.rho_sr);
    return dc;
}

} // namespace ssris
