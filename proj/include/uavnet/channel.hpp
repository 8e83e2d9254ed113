// SPDX-License-Identifier: Apache-2.0
//
// uavnet - outage analysis for layered aerial networks under beam misalignment
// Copyright 2026 uavnet contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "uavnet/rng.hpp"

namespace uavnet {

enum class LinkType { LoS, NLoS };

// Propagation and environment parameters shared by every tier. Linear units
// throughout (powers in watts); dB conversions happen at the CLI boundary.
struct ChannelParams {
    double alpha_los = 2.5;   // path-loss exponent, line of sight
    double alpha_nlos = 4.0;  // path-loss exponent, non line of sight
    double atten_los = 1.0;   // mean excess attenuation, line of sight
    double atten_nlos = 0.01;
    int m_los = 3;   // fading shape (integer), line of sight
    int m_nlos = 1;  // Rayleigh
    double env_a = 11.95;  // environment constants of the sigmoid
    double env_b = 0.136;  // visibility model (dense urban by default)
    double noise_power = 1e-13;  // watts

    void validate() const;  // throws std::invalid_argument naming the field
};

inline double path_exponent(const ChannelParams& p, LinkType t) {
    return t == LinkType::LoS ? p.alpha_los : p.alpha_nlos;
}
inline double attenuation(const ChannelParams& p, LinkType t) {
    return t == LinkType::LoS ? p.atten_los : p.atten_nlos;
}
inline int fading_shape(const ChannelParams& p, LinkType t) {
    return t == LinkType::LoS ? p.m_los : p.m_nlos;
}

// Probability that a transmitter at height `height` seen from ground
// horizontal distance `z` has a line-of-sight link: a sigmoid in the
// elevation angle (degrees). z = 0 takes the overhead limit.
double los_probability(double z, double height, const ChannelParams& p);

inline double nlos_probability(double z, double height, const ChannelParams& p) {
    return 1.0 - los_probability(z, height, p);
}
double link_probability(LinkType t, double z, double height, const ChannelParams& p);

// Large-z limit of los_probability; useful for tail bounds.
double los_probability_far(const ChannelParams& p);

// Sectorized approximation of a square planar array: one main lobe of
// constant gain over a rectangular angular window, constant side gain
// elsewhere. Gains are linear, widths in radians.
struct AntennaPattern {
    double main_gain = 1.0;
    double side_gain = 1.0;
    double width_azimuth = 0.0;    // full main-lobe width
    double width_elevation = 0.0;
};

// Pattern of an n-element square array (n a perfect square, n >= 1).
// n = 1 degenerates to an isotropic element.
AntennaPattern antenna_from_count(int n);

// Distance-dependent mean channel gain (excludes antenna gains and fading).
double path_gain(double dist, LinkType t, const ChannelParams& p);

// Normalized small-scale power fade: Gamma(shape m, scale 1/m), unit mean.
double sample_fading(LinkType t, const ChannelParams& p, Rng& rng);

}  // namespace uavnet
