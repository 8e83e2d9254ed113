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

#include "uavnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavnet/parallel.hpp"

namespace uavnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circ_dist(double a, double b) {
    double d = std::fabs(std::fmod(a - b, kTwoPi));
    return d > kPi ? kTwoPi - d : d;
}

bool in_lobe(const AntennaPattern& pat, double az_diff_circ, double el_diff_abs) {
    return az_diff_circ <= 0.5 * pat.width_azimuth &&
           el_diff_abs <= 0.5 * pat.width_elevation;
}

}  // namespace

NetworkRealization sample_realization(const NetworkConfig& net, double window_radius,
                                      Rng& rng) {
    NetworkRealization real;
    real.tiers.resize(net.tiers.size());
    const double area = kPi * window_radius * window_radius;
    for (std::size_t k = 0; k < net.tiers.size(); ++k) {
        const TierConfig& tc = net.tiers[k];
        const long n = rng.poisson(tc.density * area);
        real.tiers[k].reserve(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
            UavRecord u;
            const double z = window_radius * std::sqrt(rng.uniform());
            const double phi = rng.uniform(0.0, kTwoPi);
            u.x = z * std::cos(phi);
            u.y = z * std::sin(phi);
            const double p_los = los_probability(z, tc.height, net.channel);
            u.link = rng.uniform() < p_los ? LinkType::LoS : LinkType::NLoS;
            u.fading = sample_fading(u.link, net.channel, rng);
            u.bore_az = rng.uniform(0.0, kTwoPi);
            u.bore_el = rng.uniform(0.0, kPi / 2.0);
            real.tiers[k].push_back(u);
        }
        real.total += static_cast<std::size_t>(n);
    }
    real.errors.uav_az = net.misalignment.uav_azimuth.sample(rng);
    real.errors.uav_el = net.misalignment.uav_elevation.sample(rng);
    real.errors.ue_az = net.misalignment.ue_azimuth.sample(rng);
    real.errors.ue_el = net.misalignment.ue_elevation.sample(rng);
    return real;
}

DropResult run_drop(const NetworkRealization& real, const NetworkConfig& net,
                    RankingMode mode) {
    DropResult res;
    if (real.total == 0) return res;
    if (real.tiers.size() != net.tiers.size())
        throw std::invalid_argument("montecarlo: realization/config tier mismatch");

    // Association scan: best average received power (or nearest distance).
    const bool nearest = net.scheme == AssociationScheme::NearestDistance;
    double best_score = -1.0;
    std::size_t best_tier = 0, best_idx = 0;
    for (std::size_t k = 0; k < real.tiers.size(); ++k) {
        const TierConfig& tc = net.tiers[k];
        const double h2 = tc.height * tc.height;
        for (std::size_t i = 0; i < real.tiers[k].size(); ++i) {
            const UavRecord& u = real.tiers[k][i];
            const double d2 = u.x * u.x + u.y * u.y + h2;
            double score;
            if (nearest) {
                score = 1.0 / d2;
            } else {
                score = attenuation(net.channel, u.link) *
                        std::pow(d2, -0.5 * path_exponent(net.channel, u.link));
                if (mode == RankingMode::FullPower) score *= tc.tx_power;
            }
            if (score > best_score) {
                best_score = score;
                best_tier = k;
                best_idx = i;
            }
        }
    }

    const UavRecord& serv = real.tiers[best_tier][best_idx];
    const TierConfig& stc = net.tiers[best_tier];
    const double sd2 = serv.x * serv.x + serv.y * serv.y + stc.height * stc.height;
    const double r = std::sqrt(sd2);
    const double serv_az = std::atan2(serv.y, serv.x);
    const double serv_el = std::asin(std::min(1.0, stc.height / r));

    // Typical-link gain case straight from the error draws.
    const AntennaPattern pat_v = net.tier_pattern(best_tier);
    const AntennaPattern pat_u = net.ue_pattern();
    const ErrorDraw& e = real.errors;
    const bool tx_main = std::fabs(e.uav_az) <= 0.5 * pat_v.width_azimuth &&
                         std::fabs(e.uav_el) <= 0.5 * pat_v.width_elevation;
    const bool rx_main = std::fabs(e.ue_az) <= 0.5 * pat_u.width_azimuth &&
                         std::fabs(e.ue_el) <= 0.5 * pat_u.width_elevation;
    const double g_typ = (tx_main ? pat_v.main_gain : pat_v.side_gain) *
                         (rx_main ? pat_u.main_gain : pat_u.side_gain);
    res.gain_case = tx_main ? (rx_main ? 0 : 1) : (rx_main ? 2 : 3);

    // The user steers at the serving node, subject to its own errors.
    const double ue_bore_az = serv_az + e.ue_az;
    const double ue_bore_el = serv_el + e.ue_el;

    double interference = 0.0;
    for (std::size_t k = 0; k < real.tiers.size(); ++k) {
        const TierConfig& tc = net.tiers[k];
        const AntennaPattern pat_i = net.tier_pattern(k);
        const double h2 = tc.height * tc.height;
        for (std::size_t i = 0; i < real.tiers[k].size(); ++i) {
            if (k == best_tier && i == best_idx) continue;
            const UavRecord& u = real.tiers[k][i];
            const double d2 = u.x * u.x + u.y * u.y + h2;
            const double d = std::sqrt(d2);
            const double el = std::asin(std::min(1.0, tc.height / d));
            const double az = std::atan2(u.y, u.x);
            // Interferer's own lobe: does it cover the user? The direction
            // from the node to the user has the same elevation by symmetry.
            const double gv = in_lobe(pat_i, circ_dist(u.bore_az, az + kPi),
                                      std::fabs(u.bore_el - el))
                                  ? pat_i.main_gain
                                  : pat_i.side_gain;
            const double gu = in_lobe(pat_u, circ_dist(ue_bore_az, az),
                                      std::fabs(ue_bore_el - el))
                                  ? pat_u.main_gain
                                  : pat_u.side_gain;
            interference += tc.tx_power * attenuation(net.channel, u.link) * gv * gu *
                            u.fading *
                            std::pow(d2, -0.5 * path_exponent(net.channel, u.link));
        }
    }

    const double signal = stc.tx_power * attenuation(net.channel, serv.link) * g_typ *
                          serv.fading *
                          std::pow(sd2, -0.5 * path_exponent(net.channel, serv.link));
    res.valid = true;
    res.sinr = signal / (net.channel.noise_power + interference);
    res.tier = best_tier;
    res.link = serv.link;
    res.distance = r;
    return res;
}

SimulationSummary estimate_outage(const NetworkConfig& net, long drops,
                                  double window_radius, std::uint64_t seed,
                                  RankingMode mode, int workers) {
    net.validate();
    if (drops <= 0) throw std::invalid_argument("montecarlo: drops must be positive");

    SimulationSummary sum;
    sum.association_counts.assign(net.tiers.size(), {0, 0});
    double h_min = net.tiers.front().height;
    sum.hist_lo = h_min;
    sum.hist_hi = 20.0 * h_min;
    sum.serving_hist.assign(kServingHistBins, 0);

    struct Tally {
        long outage = 0, valid = 0, resampled = 0, overflow = 0;
        std::vector<std::array<long, 2>> assoc;
        std::array<long, 4> cases{};
        std::vector<long> hist;
    };

    const long chunk = 2048;
    const std::size_t n_chunks = static_cast<std::size_t>((drops + chunk - 1) / chunk);
    std::vector<Tally> tallies(n_chunks);

    parallel_for(n_chunks, workers, [&](std::size_t c) {
        Tally& t = tallies[c];
        t.assoc.assign(net.tiers.size(), {0, 0});
        t.hist.assign(kServingHistBins, 0);
        const long lo = static_cast<long>(c) * chunk;
        const long hi = std::min(drops, lo + chunk);
        for (long i = lo; i < hi; ++i) {
            Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
            NetworkRealization real = sample_realization(net, window_radius, rng);
            while (real.total == 0) {
                ++t.resampled;
                real = sample_realization(net, window_radius, rng);
            }
            const DropResult d = run_drop(real, net, mode);
            ++t.valid;
            if (d.sinr < net.sinr_threshold) ++t.outage;
            t.assoc[d.tier][d.link == LinkType::NLoS ? 1 : 0] += 1;
            t.cases[static_cast<std::size_t>(d.gain_case)] += 1;
            const double w = (d.distance - sum.hist_lo) / (sum.hist_hi - sum.hist_lo);
            const long b = static_cast<long>(std::floor(w * kServingHistBins));
            if (b >= 0 && b < kServingHistBins)
                t.hist[static_cast<std::size_t>(b)] += 1;
            else
                ++t.overflow;
        }
    });

    long outage = 0, valid = 0;
    for (const Tally& t : tallies) {
        outage += t.outage;
        valid += t.valid;
        sum.resampled += t.resampled;
        sum.hist_overflow += t.overflow;
        for (std::size_t k = 0; k < sum.association_counts.size(); ++k) {
            sum.association_counts[k][0] += t.assoc[k][0];
            sum.association_counts[k][1] += t.assoc[k][1];
        }
        for (int j = 0; j < 4; ++j) sum.case_counts[j] += t.cases[j];
        for (int b = 0; b < kServingHistBins; ++b)
            sum.serving_hist[static_cast<std::size_t>(b)] +=
                t.hist[static_cast<std::size_t>(b)];
    }

    const double p = static_cast<double>(outage) / static_cast<double>(valid);
    sum.outage.estimate = p;
    sum.outage.ci_halfwidth =
        1.96 * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(valid));
    sum.outage.drops = valid;
    sum.outage.seed = seed;
    return sum;
}

double sample_conditional_interference(const NetworkConfig& net, std::size_t tier,
                                       LinkType link, double r, double ue_elev_error,
                                       double window_radius, Rng& rng) {
    if (tier >= net.tiers.size())
        throw std::out_of_range("montecarlo: tier index out of range");
    const double h_serv = net.tiers[tier].height;
    if (r < h_serv)
        throw std::invalid_argument("montecarlo: serving distance below tier height");

    // Serving node fixed at azimuth zero; by rotational symmetry of the
    // interferer field only the elevation steering error matters.
    const double serv_el = std::asin(std::min(1.0, h_serv / r));
    const double ue_bore_az = 0.0;
    const double ue_bore_el = serv_el + ue_elev_error;
    const AntennaPattern pat_u = net.ue_pattern();
    const double area = kPi * window_radius * window_radius;

    double interference = 0.0;
    for (std::size_t k = 0; k < net.tiers.size(); ++k) {
        const TierConfig& tc = net.tiers[k];
        const AntennaPattern pat_i = net.tier_pattern(k);
        const long n = rng.poisson(tc.density * area);
        for (long i = 0; i < n; ++i) {
            const double z = window_radius * std::sqrt(rng.uniform());
            const double phi = rng.uniform(0.0, kTwoPi);
            const double p_los = los_probability(z, tc.height, net.channel);
            const LinkType lt = rng.uniform() < p_los ? LinkType::LoS : LinkType::NLoS;
            const double fade = sample_fading(lt, net.channel, rng);
            const double bore_az = rng.uniform(0.0, kTwoPi);
            const double bore_el = rng.uniform(0.0, kPi / 2.0);

            // Association thinning: anything inside the equivalent exclusion
            // radius would have beaten the conditioned serving node.
            const double zeq =
                equivalent_distance(net.scheme, r, link, lt, tc.height, net.channel);
            if (z < zeq) continue;

            const double d2 = z * z + tc.height * tc.height;
            const double el = std::asin(std::min(1.0, tc.height / std::sqrt(d2)));
            const double gv = in_lobe(pat_i, circ_dist(bore_az, phi + kPi),
                                      std::fabs(bore_el - el))
                                  ? pat_i.main_gain
                                  : pat_i.side_gain;
            const double gu = in_lobe(pat_u, circ_dist(ue_bore_az, phi),
                                      std::fabs(ue_bore_el - el))
                                  ? pat_u.main_gain
                                  : pat_u.side_gain;
            interference += tc.tx_power * attenuation(net.channel, lt) * gv * gu * fade *
                            std::pow(d2, -0.5 * path_exponent(net.channel, lt));
        }
    }
    return interference;
}

double mainlobe_hit_fraction(const AntennaPattern& pat, double beta, long draws,
                             std::uint64_t seed) {
    Rng rng(seed);
    long hits = 0;
    for (long i = 0; i < draws; ++i) {
        const double az = rng.uniform(0.0, kTwoPi);
        const double el = rng.uniform(0.0, kPi / 2.0);
        if (in_lobe(pat, circ_dist(az, 0.0), std::fabs(el - beta))) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(draws);
}

}  // namespace uavnet
