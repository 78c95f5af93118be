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

#ifndef SSRIS_MODEL_HPP
#define SSRIS_MODEL_HPP

#include <numbers>
#include <stdexcept>
#include <string>

namespace ssris {

inline constexpr double kSpeedOfLight = 299'792'458.0;

// Thermal noise floor at room temperature, dBm/Hz.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

// Angles closer than this to +-pi/2 are outside the cosine gain model.
inline constexpr double kAngleDomainMargin = 1e-9;

/// Raised for positions or angles the cosine-gain model cannot represent,
/// e.g. a user behind the surface or a ray lying in the surface plane.
class GeometryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Noise power spectral density in W/Hz for a receiver with the given
/// noise figure on top of the thermal floor.
double thermal_noise_psd(double noise_figure_db = 0.0);

/// Scalar radio parameters. Defaults are the reference operating point:
/// 15 GHz carrier, 50 MHz bandwidth, 128 BS antennas, 65 % harvesting
/// efficiency, 2 uW per reflecting element, 0.1 W transmit power, 50 m area.
struct SystemParams {
    double carrier_freq_hz = 15e9;
    double bandwidth_hz = 50e6;
    double noise_psd_w_per_hz = thermal_noise_psd();
    int num_bs_antennas = 128;
    double harvest_efficiency = 0.65;
    double element_power_w = 2e-6;
    double tx_power_w = 0.1;
    double area_side_m = 50.0;

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;
};

/// Positions and the derived link angles/distances. psi is the azimuth of
/// the surface seen from the BS, theta the azimuth of the UE seen from the
/// surface, both measured from the common broadside normal.
struct LinkGeometry {
    Point2 bs{};
    Point2 ue{};
    Point2 ris{};
    double normal_rad = 0.0;
    double psi_rad = 0.0;
    double theta_rad = 0.0;
    double d_sr_m = 0.0;
    double d_rd_m = 0.0;

    void validate() const;
};

struct DerivedConstants {
    double lambda_m = 0.0;
    double rho_sr = 0.0;
    double rho_rd = 0.0;
    double rho0 = 0.0;
    double gamma0 = 0.0;
    double alpha = 0.0;
};

/// c / f.
double wavelength(double freq_hz);

/// Free-space path gain with the surface cosine antenna gain:
/// lambda^2 / (4 pi d)^2 * pi cos(angle).
double fspl(double angle_rad, double distance_m, double lambda_m);

/// Derives psi, theta, d_SR and d_RD from 2-D coordinates. `normal_rad` is the
/// direction of the broadside normal shared by the BS and the surface.
LinkGeometry geometry_from_positions(Point2 bs, Point2 ue, Point2 ris, double normal_rad);

/// Escape hatch for parameter studies that fix angles and distances directly.
LinkGeometry raw_geometry(double psi_rad, double theta_rad, double d_sr_m, double d_rd_m);

/// BS at (0,0), UE at (d,d), surface at (d/2,0), broadside normal along the
/// region diagonal.
LinkGeometry default_geometry(double area_side_m = 50.0);

DerivedConstants derive_constants(const SystemParams& params, const LinkGeometry& geom);

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

} // namespace ssris

#endif // SSRIS_MODEL_HPP
