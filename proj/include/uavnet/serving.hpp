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
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/geometry.hpp"
#include "uavnet/quadrature.hpp"

namespace uavnet {

// Distribution of the typical user's serving node (tier, link type, 3D
// distance) under either association rule. Densities of a given link type
// form an independent thinned planar process with radial intensity
// lambda_k * p_{k,link}(z); the cumulative integrals of that intensity enter
// every void probability, so they are tabulated once per network
// (cubic Hermite interpolation, exact node derivatives).
class ServingDistanceModel {
  public:
    explicit ServingDistanceModel(const NetworkConfig& net);

    const NetworkConfig& net() const { return net_; }

    // \int_0^Z z p_{k,link}(z) dz (m^2); monotone in Z, asymptotically
    // quadratic with the far-field link probability as slope.
    double radial_integral(std::size_t tier, LinkType link, double Z) const;

    // Density of the 3D distance to the nearest node of one (tier, link)
    // cell, ignoring all other cells.
    double nearest_distance_pdf(std::size_t tier, LinkType link, double r) const;

    // Joint density (defective over r) of serving cell = (tier, link) and
    // serving distance = r under `scheme`.
    double serving_pdf(AssociationScheme scheme, std::size_t tier, LinkType link,
                       double r) const;

    // Positive exponent E(r) with serving_pdf = prefactor(r) * exp(-E(r)):
    // the sum of every void/exclusion exponent at distance r.
    double void_exponent(AssociationScheme scheme, std::size_t tier, LinkType link,
                         double r) const;

    // Smallest radius whose residual serving mass exp(-E(r)) drops below
    // `tail_bound`; the r-integrals over serving distance stop here and
    // carry the bound in their error estimate.
    double truncation_radius(AssociationScheme scheme, std::size_t tier,
                             LinkType link, double tail_bound = 1e-12) const;

    quad::Result association_probability(AssociationScheme scheme, std::size_t tier,
                                         LinkType link) const;

  private:
    struct Table {
        std::vector<double> z, val, slope;  // slope_i = z_i * p(z_i)
        double far_prob = 0.0;              // link probability at z -> inf
        double eval(double Z) const;
    };

    double exclusion_exponent(AssociationScheme scheme, std::size_t tier,
                              LinkType link, double r) const;

    NetworkConfig net_;
    std::vector<std::array<Table, 2>> tables_;  // [tier][link]
};

}  // namespace uavnet
