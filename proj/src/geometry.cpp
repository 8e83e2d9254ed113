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

#include "uavnet/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uavnet {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = std::numbers::pi / 2.0;
}  // namespace

ServingContext ServingContext::make(const NetworkConfig& net, std::size_t tier,
                                    LinkType link, double r, double ue_elev_error) {
    if (tier >= net.tiers.size())
        throw std::out_of_range("geometry: tier index out of range");
    const double h = net.tiers[tier].height;
    if (r < h) throw std::invalid_argument("geometry: serving distance below tier height");
    ServingContext ctx;
    ctx.tier_index = tier;
    ctx.link = link;
    ctx.distance = r;
    ctx.elevation_angle = std::asin(std::min(1.0, h / r));
    ctx.ue_elevation_error = ue_elev_error;
    return ctx;
}

ProjectionRegion projection_region(const ServingContext& ctx, double target_height,
                                   const AntennaPattern& ue_pattern) {
    const double h = target_height;
    const double half_w = 0.5 * ue_pattern.width_elevation;
    const double bore = ctx.elevation_angle + ctx.ue_elevation_error;

    ProjectionRegion reg;
    reg.angle = ue_pattern.width_azimuth;

    // Upper lobe edge at elevation bore + half_w. At or past the zenith the
    // footprint reaches in to z = 0; an edge at or below the horizontal never
    // meets the tier, leaving the footprint empty.
    if (bore < kHalfPi - half_w) {
        const double upper = bore + half_w;
        reg.inner = upper > 0.0 ? h / std::tan(upper) : kInf;
    } else {
        reg.inner = 0.0;
    }

    // Lower lobe edge at elevation bore - half_w.
    if (half_w < bore && bore < kHalfPi - half_w) {
        reg.outer = h / std::tan(bore - half_w);
    } else if (bore >= kHalfPi - half_w) {
        // Beam straddles the zenith; the far edge is set by the wrapped-over
        // upper side of the lobe (empty only in the degenerate wide-lobe case).
        const double wrapped = kHalfPi - ue_pattern.width_elevation;
        reg.outer = wrapped > 0.0 ? h / std::tan(wrapped) : kInf;
    } else {
        reg.outer = kInf;
    }

    if (std::isinf(reg.inner)) reg.outer = kInf;  // empty: [inf, inf)
    return reg;
}

double equivalent_distance_max_power(double r, LinkType serving_link, LinkType link,
                                     double target_height, const ChannelParams& p) {
    const double h2 = target_height * target_height;
    double reach2;  // squared 3D distance at which tier-k power ties the server
    if (serving_link == link) {
        reach2 = r * r;
    } else {
        // Cross-type comparison: equate A_s * d_s^-a_s with A_o * d^-a_o.
        const double a_serv = path_exponent(p, serving_link);
        const double a_oth = path_exponent(p, link);
        const double ratio = attenuation(p, serving_link) / attenuation(p, link);
        reach2 = std::pow(ratio, -2.0 / a_oth) * std::pow(r, 2.0 * a_serv / a_oth);
    }
    return std::sqrt(std::max(0.0, reach2 - h2));
}

double equivalent_distance_nearest(double r, double target_height) {
    return std::sqrt(std::max(0.0, r * r - target_height * target_height));
}

double equivalent_distance(AssociationScheme scheme, double r, LinkType serving_link,
                           LinkType link, double target_height, const ChannelParams& p) {
    return scheme == AssociationScheme::MaxPower
               ? equivalent_distance_max_power(r, serving_link, link, target_height, p)
               : equivalent_distance_nearest(r, target_height);
}

}  // namespace uavnet
