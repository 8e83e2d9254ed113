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

#include "uavnet/config.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavnet {

namespace {
void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("config: " + what);
}
}  // namespace

ErrorDistribution ErrorDistribution::uniform(double min, double max) {
    require(min <= max, "error distribution needs min <= max");
    if (min == max) return degenerate(min);
    ErrorDistribution d;
    d.degenerate_ = false;
    d.min_ = min;
    d.max_ = max;
    return d;
}

ErrorDistribution ErrorDistribution::degenerate(double at) {
    ErrorDistribution d;
    d.degenerate_ = true;
    d.min_ = d.max_ = at;
    return d;
}

double ErrorDistribution::pdf(double x) const {
    if (degenerate_) return 0.0;  // density does not exist; callers special-case
    return (x >= min_ && x <= max_) ? 1.0 / (max_ - min_) : 0.0;
}

double ErrorDistribution::cdf(double x) const {
    if (degenerate_) return x >= min_ ? 1.0 : 0.0;
    if (x <= min_) return 0.0;
    if (x >= max_) return 1.0;
    return (x - min_) / (max_ - min_);
}

double ErrorDistribution::sample(Rng& rng) const {
    return degenerate_ ? min_ : rng.uniform(min_, max_);
}

double ErrorDistribution::prob_within(double halfwidth) const {
    if (halfwidth < 0.0) return 0.0;
    return cdf(halfwidth) - cdf(-halfwidth) +
           (degenerate_ && min_ == -halfwidth ? 1.0 : 0.0);
}

MisalignmentModel MisalignmentModel::uniform_symmetric(double uav_half_range,
                                                       double ue_half_range) {
    MisalignmentModel m;
    m.uav_azimuth = ErrorDistribution::uniform(-uav_half_range, uav_half_range);
    m.uav_elevation = ErrorDistribution::uniform(-uav_half_range, uav_half_range);
    m.ue_azimuth = ErrorDistribution::uniform(-ue_half_range, ue_half_range);
    m.ue_elevation = ErrorDistribution::uniform(-ue_half_range, ue_half_range);
    return m;
}

bool MisalignmentModel::is_perfect() const {
    auto centered = [](const ErrorDistribution& d) {
        return d.is_degenerate() && d.min() == 0.0;
    };
    return centered(uav_azimuth) && centered(uav_elevation) &&
           centered(ue_azimuth) && centered(ue_elevation);
}

NetworkConfig NetworkConfig::defaults() {
    NetworkConfig net;
    net.tiers = {
        {150.0, 1e-5, 1.0, 9},
        {200.0, 1e-5, std::pow(10.0, 0.2), 9},  // +2 dB on the higher tier
    };
    net.ue_antennas = 4;
    net.misalignment = MisalignmentModel::uniform_symmetric(
        std::numbers::pi / 8.0, std::numbers::pi / 12.0);
    net.sinr_threshold = 1.0;  // 0 dB
    net.scheme = AssociationScheme::MaxPower;
    return net;
}

void NetworkConfig::validate() const {
    require(!tiers.empty(), "at least one tier is required");
    double prev_height = 0.0;
    for (std::size_t k = 0; k < tiers.size(); ++k) {
        const std::string tag = "tier " + std::to_string(k) + ": ";
        require(tiers[k].height > 0.0, tag + "height_m must be positive");
        require(tiers[k].height >= prev_height, tag + "heights must be non-decreasing");
        require(tiers[k].density > 0.0, tag + "density_per_m2 must be positive");
        require(tiers[k].tx_power > 0.0, tag + "power must be positive");
        antenna_from_count(tiers[k].uav_antennas);  // validates the count
        prev_height = tiers[k].height;
    }
    antenna_from_count(ue_antennas);
    require(sinr_threshold > 0.0, "threshold must be positive (linear)");
    channel.validate();
}

}  // namespace uavnet
