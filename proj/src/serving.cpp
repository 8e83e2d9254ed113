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

#include "uavnet/serving.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uavnet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 5-point Gauss-Legendre on [-1, 1]; used to accumulate the table integrals
// interval by interval (the integrand is smooth, so this is far beyond the
// accuracy the exponents need).
constexpr std::array<double, 5> kGlX = {-0.906179845938663992797626878299,
                                        -0.538469310105683091036314420700, 0.0,
                                        0.538469310105683091036314420700,
                                        0.906179845938663992797626878299};
constexpr std::array<double, 5> kGlW = {0.236926885056189087514264040720,
                                        0.478628670499366468041291514836,
                                        0.568888888888888888888888888889,
                                        0.478628670499366468041291514836,
                                        0.236926885056189087514264040720};

LinkType other(LinkType t) {
    return t == LinkType::LoS ? LinkType::NLoS : LinkType::LoS;
}

}  // namespace

double ServingDistanceModel::Table::eval(double Z) const {
    if (Z <= 0.0) return 0.0;
    const double zmax = z.back();
    if (Z >= zmax)
        return val.back() + 0.5 * far_prob * (Z * Z - zmax * zmax);
    const auto it = std::upper_bound(z.begin(), z.end(), Z);
    const std::size_t i = static_cast<std::size_t>(it - z.begin()) - 1;
    const double h = z[i + 1] - z[i];
    const double t = (Z - z[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    // cubic Hermite basis
    return (2 * t3 - 3 * t2 + 1) * val[i] + (t3 - 2 * t2 + t) * h * slope[i] +
           (-2 * t3 + 3 * t2) * val[i + 1] + (t3 - t2) * h * slope[i + 1];
}

ServingDistanceModel::ServingDistanceModel(const NetworkConfig& net) : net_(net) {
    net_.validate();

    // The grid must reach far enough that any query beyond it sits under an
    // astronomically large void exponent; past that the quadratic far-field
    // extension is ample.
    const double p_far_min =
        std::min(los_probability_far(net_.channel), 1.0 - los_probability_far(net_.channel));
    double density_min = net_.tiers.front().density;
    for (const auto& t : net_.tiers) density_min = std::min(density_min, t.density);
    double zmax = std::sqrt(1600.0 / (kTwoPi * density_min * std::max(p_far_min, 1e-6)));
    zmax = std::clamp(zmax, 1e4, 3e5);

    tables_.resize(net_.tiers.size());
    for (std::size_t k = 0; k < net_.tiers.size(); ++k) {
        for (LinkType link : {LinkType::LoS, LinkType::NLoS}) {
            Table& tab = tables_[k][link == LinkType::LoS ? 0 : 1];
            const double h_tier = net_.tiers[k].height;
            auto w = [&](double zz) {
                return zz * link_probability(link, zz, h_tier, net_.channel);
            };
            // dense linear grid through the sigmoid transition region, then
            // geometric out to zmax
            const double z_fine = std::min(zmax, std::max(4000.0, 8.0 * h_tier));
            for (double zz = 0.0; zz < z_fine; zz += 4.0) tab.z.push_back(zz);
            for (double zz = z_fine; zz < zmax; zz *= 1.015) tab.z.push_back(zz);
            tab.z.push_back(zmax);

            tab.val.resize(tab.z.size());
            tab.slope.resize(tab.z.size());
            tab.val[0] = 0.0;
            tab.slope[0] = w(tab.z[0]);
            for (std::size_t i = 1; i < tab.z.size(); ++i) {
                const double a = tab.z[i - 1], b = tab.z[i];
                const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
                double s = 0.0;
                for (int q = 0; q < 5; ++q) s += kGlW[q] * w(c + hw * kGlX[q]);
                tab.val[i] = tab.val[i - 1] + s * hw;
                tab.slope[i] = w(tab.z[i]);
            }
            tab.far_prob = link == LinkType::LoS
                               ? los_probability_far(net_.channel)
                               : 1.0 - los_probability_far(net_.channel);
        }
    }
}

double ServingDistanceModel::radial_integral(std::size_t tier, LinkType link,
                                             double Z) const {
    return tables_[tier][link == LinkType::LoS ? 0 : 1].eval(Z);
}

double ServingDistanceModel::nearest_distance_pdf(std::size_t tier, LinkType link,
                                                  double r) const {
    const double h = net_.tiers[tier].height;
    if (r < h) return 0.0;
    const double z = std::sqrt(std::max(0.0, r * r - h * h));
    const double lam = net_.tiers[tier].density;
    return kTwoPi * lam * r * link_probability(link, z, h, net_.channel) *
           std::exp(-kTwoPi * lam * radial_integral(tier, link, z));
}

double ServingDistanceModel::exclusion_exponent(AssociationScheme scheme,
                                                std::size_t tier, LinkType link,
                                                double r) const {
    // Void exponents of every cell other than the serving one.
    double expo = 0.0;
    if (scheme == AssociationScheme::MaxPower) {
        const LinkType comp = other(link);
        for (std::size_t k = 0; k < net_.tiers.size(); ++k) {
            const double hk = net_.tiers[k].height;
            const double lam = net_.tiers[k].density;
            const double zc = equivalent_distance_max_power(r, link, comp, hk, net_.channel);
            expo += kTwoPi * lam * radial_integral(k, comp, zc);
            if (k != tier) {
                const double zs =
                    equivalent_distance_max_power(r, link, link, hk, net_.channel);
                expo += kTwoPi * lam * radial_integral(k, link, zs);
            }
        }
    } else {
        // Nearest-distance: no node of any tier inside the 3D ball of
        // radius r; the same-cell part is accounted separately.
        for (std::size_t k = 0; k < net_.tiers.size(); ++k) {
            const double z2 = std::max(0.0, r * r - net_.tiers[k].height * net_.tiers[k].height);
            expo += std::numbers::pi * net_.tiers[k].density * z2;
        }
        const double h = net_.tiers[tier].height;
        const double z = std::sqrt(std::max(0.0, r * r - h * h));
        expo -= kTwoPi * net_.tiers[tier].density * radial_integral(tier, link, z);
    }
    return expo;
}

double ServingDistanceModel::void_exponent(AssociationScheme scheme, std::size_t tier,
                                           LinkType link, double r) const {
    const double h = net_.tiers[tier].height;
    const double z = std::sqrt(std::max(0.0, r * r - h * h));
    return kTwoPi * net_.tiers[tier].density * radial_integral(tier, link, z) +
           exclusion_exponent(scheme, tier, link, r);
}

double ServingDistanceModel::serving_pdf(AssociationScheme scheme, std::size_t tier,
                                         LinkType link, double r) const {
    const double h = net_.tiers[tier].height;
    if (r < h) return 0.0;
    const double z = std::sqrt(std::max(0.0, r * r - h * h));
    const double lam = net_.tiers[tier].density;
    const double pref =
        kTwoPi * lam * r * link_probability(link, z, h, net_.channel);
    return pref * std::exp(-void_exponent(scheme, tier, link, r));
}

double ServingDistanceModel::truncation_radius(AssociationScheme scheme,
                                               std::size_t tier, LinkType link,
                                               double tail_bound) const {
    const double target = -std::log(tail_bound);
    double lo = net_.tiers[tier].height;
    if (void_exponent(scheme, tier, link, lo) >= target) return lo;
    double hi = 2.0 * lo;
    while (void_exponent(scheme, tier, link, hi) < target) {
        hi *= 2.0;
        if (hi > 1e8) return hi;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (void_exponent(scheme, tier, link, mid) < target ? lo : hi) = mid;
    }
    return hi;
}

quad::Result ServingDistanceModel::association_probability(AssociationScheme scheme,
                                                           std::size_t tier,
                                                           LinkType link) const {
    const double h = net_.tiers[tier].height;
    const double rt = truncation_radius(scheme, tier, link);
    quad::Result res;
    if (rt > h) {
        res = quad::integrate_finite(
            [&](double r) { return serving_pdf(scheme, tier, link, r); }, h, rt,
            1e-7, 1e-13);
    }
    res.error_estimate += std::exp(-void_exponent(scheme, tier, link, rt));
    return res;
}

}  // namespace uavnet
