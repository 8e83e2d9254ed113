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
#include <vector>

#include "uavnet/channel.hpp"
#include "uavnet/rng.hpp"

namespace uavnet {

enum class AssociationScheme { MaxPower, NearestDistance };

struct TierConfig {
    double height = 150.0;       // m above the user plane
    double density = 1e-5;       // transmitters per m^2
    double tx_power = 1.0;       // watts
    int uav_antennas = 9;        // square-array element count
};

// One boresight error component (a single node, single plane). Angles in
// radians, measured from the perfectly aligned direction.
class ErrorDistribution {
  public:
    static ErrorDistribution uniform(double min, double max);
    static ErrorDistribution degenerate(double at = 0.0);

    bool is_degenerate() const { return degenerate_; }
    double min() const { return min_; }
    double max() const { return max_; }

    double pdf(double x) const;
    double cdf(double x) const;
    double sample(Rng& rng) const;

    // P(|error| <= halfwidth), i.e. the chance this component stays inside a
    // symmetric window; the main-lobe overlap factors of the coverage
    // analysis are built from these.
    double prob_within(double halfwidth) const;

  private:
    bool degenerate_ = true;
    double min_ = 0.0, max_ = 0.0;
};

// Independent boresight errors for the four node/plane combinations.
struct MisalignmentModel {
    ErrorDistribution uav_azimuth = ErrorDistribution::degenerate();
    ErrorDistribution uav_elevation = ErrorDistribution::degenerate();
    ErrorDistribution ue_azimuth = ErrorDistribution::degenerate();
    ErrorDistribution ue_elevation = ErrorDistribution::degenerate();

    static MisalignmentModel perfect() { return {}; }
    // Symmetric uniform errors, the same half-range for both planes of a node.
    static MisalignmentModel uniform_symmetric(double uav_half_range,
                                               double ue_half_range);
    bool is_perfect() const;
};

struct NetworkConfig {
    std::vector<TierConfig> tiers;
    ChannelParams channel;
    int ue_antennas = 4;
    MisalignmentModel misalignment;
    double sinr_threshold = 1.0;  // linear
    AssociationScheme scheme = AssociationScheme::MaxPower;

    // Two-tier dense-urban reference configuration used throughout the test
    // and validation suites.
    static NetworkConfig defaults();

    void validate() const;  // throws std::invalid_argument naming the field

    AntennaPattern ue_pattern() const { return antenna_from_count(ue_antennas); }
    AntennaPattern tier_pattern(std::size_t k) const {
        return antenna_from_count(tiers[k].uav_antennas);
    }
    std::size_t n_tiers() const { return tiers.size(); }
};

}  // namespace uavnet
