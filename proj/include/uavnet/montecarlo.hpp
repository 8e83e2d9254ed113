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

#include <array>
#include <cstdint>
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/geometry.hpp"
#include "uavnet/rng.hpp"

namespace uavnet {

struct UavRecord {
    double x, y;          // horizontal position, user at the origin
    LinkType link;
    double fading;        // Gamma(m, 1/m) power fade toward the user
    double bore_az;       // boresight azimuth, U[0, 2pi)
    double bore_el;       // boresight elevation (down-tilt), U[0, pi/2)
};

struct ErrorDraw {
    double uav_az = 0.0, uav_el = 0.0;  // serving node's steering error
    double ue_az = 0.0, ue_el = 0.0;    // user's steering error
};

struct NetworkRealization {
    std::vector<std::vector<UavRecord>> tiers;
    ErrorDraw errors;
    std::size_t total = 0;
};

// Serving-node ranking under max-average-power association. Strict ranks by
// attenuation * distance^-alpha exactly as the analytical exclusion law
// does; FullPower additionally weighs the per-tier transmit power.
enum class RankingMode { Strict, FullPower };

// One network drop inside a disk of `window_radius` around the user. The
// draw order per tier is fixed (count, then per node: radius, angle, link,
// fading, boresight az, boresight el; finally the four steering errors), so
// a given Rng state always produces the same realization.
NetworkRealization sample_realization(const NetworkConfig& net, double window_radius,
                                      Rng& rng);

struct DropResult {
    bool valid = false;  // an empty realization has no serving node
    double sinr = 0.0;
    std::size_t tier = 0;
    LinkType link = LinkType::LoS;
    double distance = 0.0;
    int gain_case = 0;  // 0 both main lobes, 1 tx only, 2 rx only, 3 neither
};

// Pure evaluation of one drop: association, typical-link gain case from the
// error draws, interference with exact main-lobe cone tests on both ends.
DropResult run_drop(const NetworkRealization& real, const NetworkConfig& net,
                    RankingMode mode = RankingMode::Strict);

struct OutageEstimate {
    double estimate = 0.0;
    double ci_halfwidth = 0.0;  // 95% normal-approximation half width
    long drops = 0;
    std::uint64_t seed = 0;
};

struct SimulationSummary {
    OutageEstimate outage;
    // Counts over valid drops, indexed [tier][link==NLoS].
    std::vector<std::array<long, 2>> association_counts;
    std::array<long, 4> case_counts{};
    // Serving-distance histogram over [hist_lo, hist_hi), uniform bins.
    double hist_lo = 0.0, hist_hi = 0.0;
    std::vector<long> serving_hist;
    long hist_overflow = 0;
    long resampled = 0;  // empty realizations redrawn
};

inline constexpr double kDefaultWindowRadius = 5000.0;
inline constexpr int kServingHistBins = 50;

// Independent-drop estimate of P(SINR < threshold). Drop i always draws
// from Rng::substream(seed, i), so the result is bit-identical for any
// worker count.
SimulationSummary estimate_outage(const NetworkConfig& net, long drops,
                                  double window_radius = kDefaultWindowRadius,
                                  std::uint64_t seed = 1,
                                  RankingMode mode = RankingMode::Strict,
                                  int workers = 1);

// Aggregate interference conditioned on the serving state (tier, link, 3D
// distance r, user elevation steering error): interferer fields of every
// cell are the association-thinned processes, the user's beam points at the
// serving node plus the given elevation error. Used to cross-check the
// analytical transform.
double sample_conditional_interference(const NetworkConfig& net, std::size_t tier,
                                       LinkType link, double r, double ue_elev_error,
                                       double window_radius, Rng& rng);

// Fraction of uniformly steered boresights whose main lobe covers a target
// at elevation `beta`: the empirical counterpart of the thinning
// probability used for interferer decomposition.
double mainlobe_hit_fraction(const AntennaPattern& pat, double beta, long draws,
                             std::uint64_t seed);

}  // namespace uavnet
