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

#include <cstddef>

#include "uavnet/config.hpp"

namespace uavnet {

// State of the typical link that the conditional interference law depends
// on: which tier and link type serve, the 3D serving distance, and the
// user-side elevation boresight error.
struct ServingContext {
    std::size_t tier_index = 0;
    LinkType link = LinkType::LoS;
    double distance = 0.0;         // 3D serving distance r (m), r >= tier height
    double elevation_angle = 0.0;  // elevation of the serving node seen from the user
    double ue_elevation_error = 0.0;

    static ServingContext make(const NetworkConfig& net, std::size_t tier,
                               LinkType link, double r, double ue_elev_error = 0.0);
};

// Intersection of the user's main lobe with the plane of one tier,
// approximated as a ring sector: horizontal radii [inner, outer] and the
// azimuthal opening. outer may be +inf (lower lobe edge at or below the
// horizon); an empty region has inner == outer == +inf.
struct ProjectionRegion {
    double inner = 0.0;
    double outer = 0.0;
    double angle = 0.0;  // azimuthal width (radians), = UE azimuth lobe width
    bool empty() const { return !(inner < outer); }
};

// Ring-sector footprint on the tier at `target_height`, for a user whose
// elevation boresight is ctx.elevation_angle + ctx.ue_elevation_error.
ProjectionRegion projection_region(const ServingContext& ctx, double target_height,
                                   const AntennaPattern& ue_pattern);

// Horizontal exclusion radius on tier k implied by the serving state under
// max-average-power association: any node of tier k / link `link` closer
// than this would have offered more average power than the serving node at
// 3D distance r. Units: m; 0 when no exclusion is implied.
double equivalent_distance_max_power(double r, LinkType serving_link, LinkType link,
                                     double target_height, const ChannelParams& p);

// Same under nearest-distance association: pure 3D ball of radius r.
double equivalent_distance_nearest(double r, double target_height);

double equivalent_distance(AssociationScheme scheme, double r, LinkType serving_link,
                           LinkType link, double target_height, const ChannelParams& p);

}  // namespace uavnet
