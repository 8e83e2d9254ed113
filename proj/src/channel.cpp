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

#include "uavnet/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavnet {

namespace {
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("channel: " + what);
}
}  // namespace

void ChannelParams::validate() const {
    require(alpha_los > 2.0, "alpha_los must exceed 2 for finite interference");
    require(alpha_nlos > 2.0, "alpha_nlos must exceed 2 for finite interference");
    require(atten_los > 0.0, "atten_los must be positive");
    require(atten_nlos > 0.0, "atten_nlos must be positive");
    require(m_los >= 1, "m_los must be a positive integer");
    require(m_nlos >= 1, "m_nlos must be a positive integer");
    require(env_a > 0.0, "env_a must be positive");
    require(env_b >= 0.0, "env_b must be non-negative");
    require(noise_power >= 0.0, "noise_power must be non-negative");
}

double los_probability(double z, double height, const ChannelParams& p) {
    // Elevation angle in degrees; z = 0 is straight overhead (90 deg).
    const double angle_deg =
        z <= 0.0 ? 90.0 : kRadToDeg * std::atan(height / z);
    return 1.0 / (1.0 + p.env_a * std::exp(-p.env_b * (angle_deg - p.env_a)));
}

double link_probability(LinkType t, double z, double height, const ChannelParams& p) {
    const double pl = los_probability(z, height, p);
    return t == LinkType::LoS ? pl : 1.0 - pl;
}

double los_probability_far(const ChannelParams& p) {
    return 1.0 / (1.0 + p.env_a * std::exp(p.env_a * p.env_b));
}

AntennaPattern antenna_from_count(int n) {
    if (n < 1) throw std::invalid_argument("channel: antenna count must be >= 1");
    const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (root * root != n)
        throw std::invalid_argument("channel: antenna count must be a perfect square");

    const double nd = static_cast<double>(n);
    const double rn = std::sqrt(nd);
    const double c = std::sqrt(3.0) / (2.0 * std::numbers::pi);
    const double s = std::sin(std::sqrt(3.0) / (2.0 * rn));

    AntennaPattern pat;
    pat.main_gain = nd;
    pat.side_gain = (rn - c * nd * s) / (rn - c * s);
    pat.width_azimuth = std::sqrt(3.0) / rn;
    pat.width_elevation = pat.width_azimuth;
    return pat;
}

double path_gain(double dist, LinkType t, const ChannelParams& p) {
    return attenuation(p, t) * std::pow(dist, -path_exponent(p, t));
}

double sample_fading(LinkType t, const ChannelParams& p, Rng& rng) {
    return rng.gamma_unit_mean(fading_shape(p, t));
}

}  // namespace uavnet
