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

#include "uavnet/outage.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "uavnet/interference.hpp"
#include "uavnet/parallel.hpp"
#include "uavnet/quadrature.hpp"

namespace uavnet {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; symmetric).
constexpr std::array<double, 8> kGl16X = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542,
};
constexpr std::array<double, 8> kGl16W = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

struct GainCases {
    std::array<double, 4> gain;  // both-main, tx-main, rx-main, neither
    std::array<double, 4> s;     // transform argument per case
    int m;                       // serving fading shape
};

GainCases make_cases(std::size_t tier, LinkType link, double r,
                     const NetworkConfig& net) {
    const AntennaPattern v = net.tier_pattern(tier);
    const AntennaPattern u = net.ue_pattern();
    GainCases c;
    c.gain = {v.main_gain * u.main_gain, v.main_gain * u.side_gain,
              v.side_gain * u.main_gain, v.side_gain * u.side_gain};
    c.m = fading_shape(net.channel, link);
    // Unit-mean Gamma(m) fading: P(h > y) = e^{-my} sum (my)^t / t!, so the
    // transform argument carries the shape factor m.
    const double num = c.m * net.sinr_threshold *
                       std::pow(r, path_exponent(net.channel, link));
    const double denom = net.tiers[tier].tx_power * attenuation(net.channel, link);
    for (int j = 0; j < 4; ++j) c.s[j] = num / (denom * c.gain[j]);
    return c;
}

struct Window {
    double lo, hi;
};

double coverage_impl(std::size_t tier, LinkType link, double r,
                     const NetworkConfig& net, double* inner_error, bool perfect) {
    const GainCases gc = make_cases(tier, link, r, net);
    const double sigma2 = net.channel.noise_power;
    double max_err = 0.0;

    auto eval_at = [&](double delta, const double* s_vals, int count,
                       double* cov_out) {
        const ServingContext ctx = ServingContext::make(net, tier, link, r, delta);
        const LaplaceEvaluator ev(ctx, net, net.scheme);
        std::array<LaplaceEvaluator::Derivs, 4> d;
        ev.eval(std::span<const double>(s_vals, static_cast<std::size_t>(count)),
                gc.m, d.data());
        for (int i = 0; i < count; ++i) {
            cov_out[i] = coverage_from_exponent_derivs(s_vals[i], gc.m, d[i].q.data(),
                                                       sigma2);
            max_err = std::max(max_err, d[i].error[0]);
        }
    };

    double result = 0.0;
    if (perfect) {
        double cov;
        eval_at(0.0, gc.s.data(), 1, &cov);
        result = cov;
    } else {
        const MisalignmentModel& mis = net.misalignment;
        const AntennaPattern v = net.tier_pattern(tier);
        const AntennaPattern u = net.ue_pattern();
        const double wv = mis.uav_azimuth.prob_within(0.5 * v.width_azimuth) *
                          mis.uav_elevation.prob_within(0.5 * v.width_elevation);
        const double wua = mis.ue_azimuth.prob_within(0.5 * u.width_azimuth);
        const double he = 0.5 * u.width_elevation;

        // Weights of the four cases when the user's elevation error stays in
        // the lobe; outside it only the tx-side alignment still matters.
        const std::array<double, 4> w_main = {wv * wua, wv * (1.0 - wua),
                                              (1.0 - wv) * wua,
                                              (1.0 - wv) * (1.0 - wua)};
        const double tail_s[2] = {gc.s[1], gc.s[3]};
        const double tail_w[2] = {wv, 1.0 - wv};

        auto accumulate = [&](double delta, double mass) {
            if (std::fabs(delta) <= he) {
                std::array<double, 4> cov;
                eval_at(delta, gc.s.data(), 4, cov.data());
                double term = 0.0;
                for (int j = 0; j < 4; ++j) term += w_main[j] * cov[j];
                result += mass * term;
            } else {
                std::array<double, 2> cov;
                eval_at(delta, tail_s, 2, cov.data());
                result += mass * (tail_w[0] * cov[0] + tail_w[1] * cov[1]);
            }
        };

        const ErrorDistribution& de = mis.ue_elevation;
        if (de.is_degenerate()) {
            accumulate(de.min(), 1.0);
        } else {
            const double density = 1.0 / (de.max() - de.min());
            const std::array<Window, 3> wins = {{{de.min(), std::min(de.max(), -he)},
                                                 {std::max(de.min(), -he),
                                                  std::min(de.max(), he)},
                                                 {std::max(de.min(), he), de.max()}}};
            for (const Window& win : wins) {
                if (!(win.lo < win.hi)) continue;
                const double mid = 0.5 * (win.lo + win.hi);
                const double half = 0.5 * (win.hi - win.lo);
                for (std::size_t i = 0; i < kGl16X.size(); ++i) {
                    const double mass = kGl16W[i] * half * density;
                    accumulate(mid - half * kGl16X[i], mass);
                    accumulate(mid + half * kGl16X[i], mass);
                }
            }
        }
    }

    if (inner_error) *inner_error = std::max(*inner_error, max_err);
    return result;
}

OutageResult integrate_outage(const NetworkConfig& net, int workers, bool perfect) {
    net.validate();
    const ServingDistanceModel model(net);

    struct Task {
        std::size_t tier;
        LinkType link;
        double lo, hi;
    };
    std::vector<Task> tasks;
    double tail_bound = 0.0;
    for (std::size_t k = 0; k < net.tiers.size(); ++k) {
        for (LinkType link : {LinkType::LoS, LinkType::NLoS}) {
            const double h = net.tiers[k].height;
            const double rt = model.truncation_radius(net.scheme, k, link);
            tail_bound += std::exp(-model.void_exponent(net.scheme, k, link, rt));
            double lo = h;
            while (lo < rt) {
                const double hi = std::min(rt, lo * 1.5);
                tasks.push_back({k, link, lo, hi});
                lo = hi;
            }
        }
    }

    std::vector<quad::Result> partial(tasks.size());
    std::vector<double> inner_err(tasks.size(), 0.0);
    parallel_for(tasks.size(), workers, [&](std::size_t i) {
        const Task& t = tasks[i];
        partial[i] = quad::integrate_finite(
            [&](double r) {
                return model.serving_pdf(net.scheme, t.tier, t.link, r) *
                       coverage_impl(t.tier, t.link, r, net, &inner_err[i], perfect);
            },
            t.lo, t.hi, 1e-5, 1e-10);
    });

    OutageResult res;
    double coverage = 0.0, max_inner = 0.0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        coverage += partial[i].value;
        res.error_estimate += partial[i].error_estimate;
        res.evaluations += partial[i].evaluations;
        max_inner = std::max(max_inner, inner_err[i]);
    }
    // Inner (transform) quadrature errors enter multiplicatively through
    // exp(Q); first-order propagation adds |dQ| times the mass involved.
    res.error_estimate += tail_bound + max_inner;
    res.value = std::clamp(1.0 - coverage, 0.0, 1.0);
    return res;
}

}  // namespace

std::array<double, 4> case_probabilities(const MisalignmentModel& mis,
                                         const AntennaPattern& uav,
                                         const AntennaPattern& ue) {
    const double wv = mis.uav_azimuth.prob_within(0.5 * uav.width_azimuth) *
                      mis.uav_elevation.prob_within(0.5 * uav.width_elevation);
    const double wu = mis.ue_azimuth.prob_within(0.5 * ue.width_azimuth) *
                      mis.ue_elevation.prob_within(0.5 * ue.width_elevation);
    return {wv * wu, wv * (1.0 - wu), wu * (1.0 - wv), (1.0 - wv) * (1.0 - wu)};
}

double conditional_coverage_given_r(std::size_t tier, LinkType link, double r,
                                    const NetworkConfig& net, double* inner_error) {
    return coverage_impl(tier, link, r, net, inner_error, false);
}

double perfect_conditional_coverage_given_r(std::size_t tier, LinkType link,
                                            double r, const NetworkConfig& net,
                                            double* inner_error) {
    return coverage_impl(tier, link, r, net, inner_error, true);
}

OutageResult outage_probability(const NetworkConfig& net, int workers) {
    return integrate_outage(net, workers, false);
}

OutageResult perfect_alignment_outage(const NetworkConfig& net, int workers) {
    return integrate_outage(net, workers, true);
}

}  // namespace uavnet
