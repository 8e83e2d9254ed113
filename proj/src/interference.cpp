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

#include "uavnet/interference.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "uavnet/quadrature.hpp"

namespace uavnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double ipow(double x, int n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double mainlobe_probability(const AntennaPattern& pat) {
    return pat.width_azimuth * pat.width_elevation / (kPi * kPi);
}

std::array<AlignmentCase, 4> alignment_cases(const AntennaPattern& uav,
                                             const AntennaPattern& ue,
                                             double tx_mainlobe_prob) {
    const double p = tx_mainlobe_prob;
    return {{
        {uav.main_gain * ue.main_gain, p, true},
        {uav.main_gain * ue.side_gain, p, true},
        {uav.side_gain * ue.main_gain, 1.0 - p, false},
        {uav.side_gain * ue.side_gain, 1.0 - p, false},
    }};
}

double fading_laplace_factor(LinkType link, double height, double gain_power,
                             double z, double s, const ChannelParams& p) {
    const double d2 = z * z + height * height;
    const double u = attenuation(p, link) * gain_power *
                     std::pow(d2, -0.5 * path_exponent(p, link));
    const int m = fading_shape(p, link);
    return std::exp(-m * std::log1p(s * u / m));
}

LaplaceEvaluator::LaplaceEvaluator(const ServingContext& ctx, const NetworkConfig& net,
                                   AssociationScheme scheme) {
    channel_ = net.channel;
    sigma2_ = net.channel.noise_power;
    const AntennaPattern ue = net.ue_pattern();
    const double theta_az = ue.width_azimuth;

    cells_.reserve(2 * net.tiers.size());
    for (std::size_t k = 0; k < net.tiers.size(); ++k) {
        const TierConfig& tc = net.tiers[k];
        const AntennaPattern uav = net.tier_pattern(k);
        const double ptm = mainlobe_probability(uav);
        const auto cases = alignment_cases(uav, ue, ptm);
        const ProjectionRegion reg = projection_region(ctx, tc.height, ue);

        for (LinkType link : {LinkType::LoS, LinkType::NLoS}) {
            Cell cell;
            cell.link = link;
            cell.alpha = path_exponent(net.channel, link);
            cell.atten = attenuation(net.channel, link);
            cell.height = tc.height;
            cell.power = tc.tx_power;
            cell.m = fading_shape(net.channel, link);

            const double zeq = equivalent_distance(scheme, ctx.distance, ctx.link,
                                                   link, tc.height, net.channel);
            auto push = [&](double lo, double hi, double w, const AlignmentCase& ca,
                            const AlignmentCase& cb) {
                if (std::isinf(lo) || !(lo < hi) || w <= 0.0) return;
                Segment s;
                s.lo = lo;
                s.hi = hi;
                s.coef_a = w * tc.density * ca.density_fraction;
                s.coef_b = w * tc.density * cb.density_fraction;
                s.gain_a = ca.gain;
                s.gain_b = cb.gain;
                cell.segs.push_back(s);
            };

            // Interferers inside the user's main-lobe footprint (ring
            // sector): tx main lobe and tx side lobe share nodes.
            push(std::max(reg.inner, zeq), std::max(reg.outer, zeq), theta_az,
                 cases[0], cases[2]);
            // Outside the footprint: full annulus minus the sector, plus the
            // sector portions before the inner and past the outer radius.
            push(zeq, kInf, 2.0 * kPi - theta_az, cases[1], cases[3]);
            push(std::min(reg.inner, zeq), reg.inner, theta_az, cases[1], cases[3]);
            push(std::max(reg.outer, zeq), kInf, theta_az, cases[1], cases[3]);

            cells_.push_back(std::move(cell));
        }
    }
}

void LaplaceEvaluator::eval(std::span<const double> s, int orders, Derivs* out) const {
    const int ns = static_cast<int>(s.size());
    if (ns == 0) return;
    if (ns > 4 || orders < 1 || orders > kMaxFadingShape)
        throw std::invalid_argument("laplace eval: unsupported batch shape");

    for (int si = 0; si < ns; ++si) out[si] = Derivs{};

    for (const Cell& cell : cells_) {
        const double h2 = cell.height * cell.height;
        const double half_alpha = 0.5 * cell.alpha;
        const int m = cell.m;
        const double md = static_cast<double>(m);
        const int ncomp = 2 * ns * orders;

        for (const Segment& seg : cell.segs) {
            // Component layout: ((side ? 1 : 0) * ns + si) * orders + n.
            // The n-th entry is d^n/ds^n [1 - M(s, z)] * p(z) * z, where M is
            // the per-interferer fading average; these have the closed form
            //   n = 0:  (1 - (m/(m+su))^m) p z
            //   n >= 1: (-1)^(n+1) (m)_n (m/(m+su))^m (u/(m+su))^n p z
            // with u the mean received power factor at z.
            auto integrand = [&](double z, double* comp) {
                const double pz = z * link_probability(cell.link, z, cell.height, channel_);
                const double t = std::pow(z * z + h2, -half_alpha);
                const double base = cell.atten * cell.power * t;
                const double gains[2] = {seg.gain_a, seg.gain_b};
                for (int g = 0; g < 2; ++g) {
                    const double u = base * gains[g];
                    for (int si = 0; si < ns; ++si) {
                        double* slot = comp + (g * ns + si) * orders;
                        const double su = s[si] * u;
                        const double bb = md + su;
                        const double y = md / bb;       // in (0, 1]
                        const double powm = ipow(y, m); // (m/(m+su))^m
                        slot[0] = (su < 1e-8 ? su * (1.0 - 0.5 * (md + 1.0) / md * su)
                                             : 1.0 - powm) *
                                  pz;
                        if (orders > 1) {
                            const double ub = u / bb;
                            double rising = 1.0, upow = powm, sign = 1.0;
                            for (int n = 1; n < orders; ++n) {
                                rising *= md + n - 1;
                                upow *= ub;
                                slot[n] = sign * rising * upow * pz;
                                sign = -sign;
                            }
                        }
                    }
                }
            };

            quad::VecResult vr;
            if (std::isinf(seg.hi)) {
                const double scale = std::max({cell.height, seg.lo, 200.0});
                vr = quad::integrate_semi_infinite_vec(integrand, ncomp, seg.lo,
                                                       rel_tol_, 1e-10,
                                                       cell.alpha - 1.0, scale);
            } else {
                vr = quad::integrate_finite_vec(integrand, ncomp, seg.lo, seg.hi,
                                                rel_tol_, 1e-10);
            }
            evals_ += vr.evaluations;

            const double coefs[2] = {seg.coef_a, seg.coef_b};
            for (int g = 0; g < 2; ++g) {
                for (int si = 0; si < ns; ++si) {
                    for (int n = 0; n < orders; ++n) {
                        const int c = (g * ns + si) * orders + n;
                        out[si].q[n] -= coefs[g] * vr.values[c];
                        out[si].error[n] += coefs[g] * vr.errors[c];
                    }
                }
            }
        }
    }
}

double LaplaceEvaluator::log_laplace(double s) const {
    Derivs d;
    const double sv[1] = {s};
    eval(std::span<const double>(sv, 1), 1, &d);
    return d.q[0];
}

double LaplaceEvaluator::coverage(double s, int m) const {
    Derivs d;
    const double sv[1] = {s};
    eval(std::span<const double>(sv, 1), m, &d);
    return coverage_from_exponent_derivs(s, m, d.q.data(), sigma2_);
}

double coverage_from_exponent_derivs(double s, int m, const double* q, double sigma2) {
    std::array<double, kMaxFadingShape> F{};
    F[0] = std::exp(-s * sigma2 + q[0]);
    for (int t = 1; t < m; ++t) {
        double acc = 0.0;
        for (int i = 0; i < t; ++i) {
            const double qt = (t - i == 1) ? q[1] - sigma2 : q[t - i];
            acc += binom(t - 1, i) * qt * F[i];
        }
        F[t] = acc;
    }
    double cov = 0.0;
    double fact = 1.0, spow = 1.0;
    for (int t = 0; t < m; ++t) {
        if (t > 0) {
            fact *= t;
            spow *= -s;
        }
        cov += spow / fact * F[t];
    }
    if (cov < -1e-6 || cov > 1.0 + 1e-6)
        throw std::runtime_error("coverage sum escaped [0,1]: " + std::to_string(cov));
    return std::min(1.0, std::max(0.0, cov));
}

double log_laplace(double s, const ServingContext& ctx, const NetworkConfig& net,
                   AssociationScheme scheme) {
    return LaplaceEvaluator(ctx, net, scheme).log_laplace(s);
}

double coverage_derivative_sum(double s, const ServingContext& ctx,
                               const NetworkConfig& net, AssociationScheme scheme) {
    const int m = fading_shape(net.channel, ctx.link);
    return LaplaceEvaluator(ctx, net, scheme).coverage(s, m);
}

}  // namespace uavnet
