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
#include <span>
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/geometry.hpp"

namespace uavnet {

// Largest supported fading shape (derivative orders of the transform).
inline constexpr int kMaxFadingShape = 8;

// Probability that a transmitter whose boresight is uniform over the
// azimuth circle and the elevation quarter-arc covers a given direction
// with its main lobe.
double mainlobe_probability(const AntennaPattern& pat);

// Combined transmit/receive gain and relative density of the four
// main/side-lobe alignment combinations an interferer can present.
struct AlignmentCase {
    double gain;              // product of the two node gains
    double density_fraction;  // fraction of the tier density in this case
    bool tx_mainlobe;         // interferer's own lobe points at the user
};
std::array<AlignmentCase, 4> alignment_cases(const AntennaPattern& uav,
                                             const AntennaPattern& ue,
                                             double tx_mainlobe_prob);

// Single-interferer fading average: E_h[exp(-s * g * h * pathloss)] for
// Gamma(m, 1/m) power fading, node at horizontal distance z on a tier at
// `height`. `gain_power` is the combined antenna gain times transmit power.
double fading_laplace_factor(LinkType link, double height, double gain_power,
                             double z, double s, const ChannelParams& p);

// Log-Laplace transform of the aggregate interference seen by the typical
// user conditioned on the serving state, together with its s-derivatives.
// All derivative orders and several s arguments are integrated on shared
// quadrature nodes, which is what makes the coverage evaluation affordable.
class LaplaceEvaluator {
  public:
    LaplaceEvaluator(const ServingContext& ctx, const NetworkConfig& net,
                     AssociationScheme scheme);

    struct Derivs {
        std::array<double, kMaxFadingShape> q{};      // Q^(n)(s), n = 0..orders-1
        std::array<double, kMaxFadingShape> error{};  // accumulated bound per order
    };

    // Up to 4 s-values per call; `orders` <= kMaxFadingShape.
    void eval(std::span<const double> s, int orders, Derivs* out) const;

    double log_laplace(double s) const;

    // Conditional coverage of the typical link for serving fading shape m.
    // `s` is the full Gamma-CCDF argument m * T * r^alpha / (P * A * G):
    // sum of the first m Taylor-like terms applied to exp(-s sigma^2) * L(s).
    double coverage(double s, int m) const;

    long evaluations() const { return evals_; }

  private:
    struct Segment {
        double lo, hi;        // hi may be +inf
        double coef_a, coef_b;  // azimuth weight x case density (two cases)
        double gain_a, gain_b;  // combined gain of the two cases sharing nodes
    };
    struct Cell {
        LinkType link;
        double alpha, atten, height, power;
        int m;
        std::vector<Segment> segs;
    };

    std::vector<Cell> cells_;
    ChannelParams channel_;
    double sigma2_ = 0.0;
    double rel_tol_ = 1e-7;
    mutable long evals_ = 0;
};

// One-off conveniences over LaplaceEvaluator.
double log_laplace(double s, const ServingContext& ctx, const NetworkConfig& net,
                   AssociationScheme scheme);

// Conditional coverage probability; `s` is the Gamma-CCDF argument of the
// serving link, m * T * r^alpha / (P * A * G), with m its fading shape.
double coverage_derivative_sum(double s, const ServingContext& ctx,
                               const NetworkConfig& net, AssociationScheme scheme);

// Shared helper: assemble sum_{t<m} ((-s)^t / t!) F^(t) from the exponent
// derivatives q[0..m-1] of Q(s) (excluding the noise term, passed as sigma2).
// Exposed for the finite-difference validation suite.
double coverage_from_exponent_derivs(double s, int m, const double* q, double sigma2);

}  // namespace uavnet
