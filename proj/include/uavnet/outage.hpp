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
#include <cstddef>

#include "uavnet/config.hpp"
#include "uavnet/serving.hpp"

namespace uavnet {

// Probabilities of the four gain-alignment combinations of the typical
// link (both nodes' main lobes, only the serving side, only the user side,
// neither); they sum to one.
std::array<double, 4> case_probabilities(const MisalignmentModel& mis,
                                         const AntennaPattern& uav,
                                         const AntennaPattern& ue);

// Coverage probability of the typical user conditioned on the serving cell
// and distance, averaged over all four boresight errors. The user-side
// elevation error is the one that moves the interference footprint, so it
// is integrated explicitly (fixed Gauss-Legendre panels per alignment
// window); the other three errors only gate the gain case and reduce to
// closed-form window probabilities.
double conditional_coverage_given_r(std::size_t tier, LinkType link, double r,
                                    const NetworkConfig& net,
                                    double* inner_error = nullptr);

// Same with every boresight error pinned to zero (both main lobes aligned).
double perfect_conditional_coverage_given_r(std::size_t tier, LinkType link,
                                            double r, const NetworkConfig& net,
                                            double* inner_error = nullptr);

struct OutageResult {
    double value = 0.0;
    double error_estimate = 0.0;  // outer quadrature + serving-tail bound
    long evaluations = 0;
};

// P(SINR < threshold) for the configured network: serving-distance average
// of the conditional coverage, complemented. `workers` parallelizes over
// fixed integration panels; results are bitwise independent of it.
OutageResult outage_probability(const NetworkConfig& net, int workers = 1);

// Reference curve with idealized beam alignment (errors forced to zero,
// leaner evaluation path than passing zero-width distributions).
OutageResult perfect_alignment_outage(const NetworkConfig& net, int workers = 1);

// Number of Gauss-Legendre nodes per user-elevation alignment window.
inline constexpr int kElevationNodes = 16;

}  // namespace uavnet
