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

#include "uavnet/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "uavnet/interference.hpp"
#include "uavnet/outage.hpp"
#include "uavnet/parallel.hpp"
#include "uavnet/serving.hpp"

#ifndef UAVNET_VERSION
#define UAVNET_VERSION "0.0.0"
#endif

namespace uavnet {

using nlohmann::json;

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field '" + field + "': " + why);
}

double need_num(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key)) bad_field(ctx + key, "missing");
    if (!j[key].is_number()) bad_field(ctx + key, "expected a number");
    return j[key].get<double>();
}

double opt_num(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j[key].get<double>();
}

int need_int(const json& j, const std::string& key, const std::string& ctx) {
    const double v = need_num(j, key, ctx);
    const int i = static_cast<int>(std::lround(v));
    if (std::fabs(v - i) > 1e-9) bad_field(ctx + key, "expected an integer");
    return i;
}

ErrorDistribution parse_error_dist(const json& j, const std::string& ctx) {
    if (!j.is_object()) bad_field(ctx, "expected an object");
    const std::string kind = j.value("kind", "uniform");
    if (kind == "none") return ErrorDistribution::degenerate();
    if (kind != "uniform") bad_field(ctx + ".kind", "expected 'uniform' or 'none'");
    return ErrorDistribution::uniform(need_num(j, "min_rad", ctx + "."),
                                      need_num(j, "max_rad", ctx + "."));
}

json error_dist_to_json(const ErrorDistribution& d) {
    if (d.is_degenerate() && d.min() == 0.0) return json{{"kind", "none"}};
    return json{{"kind", "uniform"}, {"min_rad", d.min()}, {"max_rad", d.max()}};
}

NetworkConfig parse_network(const json& j) {
    NetworkConfig net = NetworkConfig::defaults();
    if (j.contains("tiers")) {
        if (!j["tiers"].is_array() || j["tiers"].empty())
            bad_field("tiers", "expected a non-empty array");
        net.tiers.clear();
        std::size_t idx = 0;
        for (const json& tj : j["tiers"]) {
            const std::string ctx = "tiers[" + std::to_string(idx++) + "].";
            TierConfig tc;
            tc.height = need_num(tj, "height_m", ctx);
            tc.density = need_num(tj, "density_per_m2", ctx);
            tc.tx_power = db_to_linear(need_num(tj, "power_dbw", ctx));
            tc.uav_antennas = need_int(tj, "uav_antennas", ctx);
            net.tiers.push_back(tc);
        }
    }
    if (j.contains("channel")) {
        const json& cj = j["channel"];
        ChannelParams& ch = net.channel;
        ch.alpha_los = opt_num(cj, "alpha_los", ch.alpha_los);
        ch.alpha_nlos = opt_num(cj, "alpha_nlos", ch.alpha_nlos);
        ch.atten_los = opt_num(cj, "atten_los", ch.atten_los);
        ch.atten_nlos = opt_num(cj, "atten_nlos", ch.atten_nlos);
        if (cj.contains("fading_shape_los"))
            ch.m_los = need_int(cj, "fading_shape_los", "channel.");
        if (cj.contains("fading_shape_nlos"))
            ch.m_nlos = need_int(cj, "fading_shape_nlos", "channel.");
        ch.env_a = opt_num(cj, "env_a", ch.env_a);
        ch.env_b = opt_num(cj, "env_b", ch.env_b);
        if (cj.contains("noise_dbw"))
            ch.noise_power = db_to_linear(need_num(cj, "noise_dbw", "channel."));
    }
    if (j.contains("ue_antennas")) net.ue_antennas = need_int(j, "ue_antennas", "");
    if (j.contains("misalignment")) {
        const json& mj = j["misalignment"];
        MisalignmentModel m;
        m.uav_azimuth = parse_error_dist(mj.at("uav_azimuth"), "misalignment.uav_azimuth");
        m.uav_elevation =
            parse_error_dist(mj.at("uav_elevation"), "misalignment.uav_elevation");
        m.ue_azimuth = parse_error_dist(mj.at("ue_azimuth"), "misalignment.ue_azimuth");
        m.ue_elevation =
            parse_error_dist(mj.at("ue_elevation"), "misalignment.ue_elevation");
        net.misalignment = m;
    }
    if (j.contains("threshold_db"))
        net.sinr_threshold = db_to_linear(need_num(j, "threshold_db", ""));
    if (j.contains("scheme")) {
        const std::string s = j["scheme"].get<std::string>();
        if (s == "max_power")
            net.scheme = AssociationScheme::MaxPower;
        else if (s == "nearest")
            net.scheme = AssociationScheme::NearestDistance;
        else
            bad_field("scheme", "expected 'max_power' or 'nearest'");
    }
    net.validate();
    return net;
}

json network_to_json_obj(const NetworkConfig& net) {
    json tiers = json::array();
    for (const TierConfig& t : net.tiers)
        tiers.push_back({{"height_m", t.height},
                         {"density_per_m2", t.density},
                         {"power_dbw", linear_to_db(t.tx_power)},
                         {"uav_antennas", t.uav_antennas}});
    return json{
        {"tiers", tiers},
        {"channel",
         {{"alpha_los", net.channel.alpha_los},
          {"alpha_nlos", net.channel.alpha_nlos},
          {"atten_los", net.channel.atten_los},
          {"atten_nlos", net.channel.atten_nlos},
          {"fading_shape_los", net.channel.m_los},
          {"fading_shape_nlos", net.channel.m_nlos},
          {"env_a", net.channel.env_a},
          {"env_b", net.channel.env_b},
          {"noise_dbw", linear_to_db(net.channel.noise_power)}}},
        {"ue_antennas", net.ue_antennas},
        {"misalignment",
         {{"uav_azimuth", error_dist_to_json(net.misalignment.uav_azimuth)},
          {"uav_elevation", error_dist_to_json(net.misalignment.uav_elevation)},
          {"ue_azimuth", error_dist_to_json(net.misalignment.ue_azimuth)},
          {"ue_elevation", error_dist_to_json(net.misalignment.ue_elevation)}}},
        {"threshold_db", linear_to_db(net.sinr_threshold)},
        {"scheme", scheme_name(net.scheme)},
    };
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }
    return j;
}

SweepAxis parse_axis(const std::string& s) {
    if (s == "threshold_db") return SweepAxis::ThresholdDb;
    if (s == "uav_antennas") return SweepAxis::UavAntennas;
    if (s == "density_per_m2") return SweepAxis::Density;
    if (s == "height_m") return SweepAxis::Height;
    if (s == "misalignment_range_rad") return SweepAxis::MisalignmentRangeRad;
    bad_field("sweep.axis", "unknown axis '" + s + "'");
}

const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::ThresholdDb: return "threshold_db";
        case SweepAxis::UavAntennas: return "uav_antennas";
        case SweepAxis::Density: return "density_per_m2";
        case SweepAxis::Height: return "height_m";
        case SweepAxis::MisalignmentRangeRad: return "misalignment_range_rad";
        case SweepAxis::None: break;
    }
    return "none";
}

}  // namespace

NetworkConfig load_network_config(const std::string& path) {
    return parse_network(read_json_file(path));
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    const json j = read_json_file(path);
    ExperimentSpec spec;
    spec.base = parse_network(j);

    spec.schemes = {spec.base.scheme};
    spec.alignments = {spec.base.misalignment.is_perfect() ? Alignment::Perfect
                                                           : Alignment::Imperfect};
    if (j.contains("sweep")) {
        const json& sj = j["sweep"];
        const std::string axis_str = sj.value("axis", "none");
        if (axis_str != "none") {
            spec.axis = parse_axis(axis_str);
            if (!sj.contains("values") || !sj["values"].is_array() || sj["values"].empty())
                bad_field("sweep.values", "expected a non-empty array");
            for (const json& v : sj["values"]) spec.values.push_back(v.get<double>());
        }

        if (sj.contains("schemes")) {
            spec.schemes.clear();
            for (const json& v : sj["schemes"]) {
                const std::string s = v.get<std::string>();
                if (s == "max_power")
                    spec.schemes.push_back(AssociationScheme::MaxPower);
                else if (s == "nearest")
                    spec.schemes.push_back(AssociationScheme::NearestDistance);
                else
                    bad_field("sweep.schemes", "expected 'max_power' or 'nearest'");
            }
        }
        if (sj.contains("alignments")) {
            spec.alignments.clear();
            for (const json& v : sj["alignments"]) {
                const std::string s = v.get<std::string>();
                if (s == "imperfect")
                    spec.alignments.push_back(Alignment::Imperfect);
                else if (s == "perfect")
                    spec.alignments.push_back(Alignment::Perfect);
                else
                    bad_field("sweep.alignments", "expected 'imperfect' or 'perfect'");
            }
        }
    }
    if (j.contains("simulation")) {
        const json& mj = j["simulation"];
        if (mj.contains("drops")) spec.drops = static_cast<long>(need_num(mj, "drops", "simulation."));
        spec.window_radius = opt_num(mj, "window_radius_m", spec.window_radius);
        const std::string rank = mj.value("ranking", "strict");
        if (rank == "strict")
            spec.ranking = RankingMode::Strict;
        else if (rank == "full_power")
            spec.ranking = RankingMode::FullPower;
        else
            bad_field("simulation.ranking", "expected 'strict' or 'full_power'");
    }
    // Run manifests are a superset of this format; honouring their `seed`
    // and `engines` keys is what lets a manifest reproduce its dataset.
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            bad_field("seed", "expected a non-negative integer");
        spec.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("engines")) {
        if (!j["engines"].is_array() || j["engines"].empty())
            bad_field("engines", "expected a non-empty array");
        spec.engines.clear();
        for (const json& v : j["engines"]) {
            const std::string s = v.get<std::string>();
            if (s == "analytical")
                spec.engines.push_back(Engine::Analytical);
            else if (s == "mc")
                spec.engines.push_back(Engine::MonteCarlo);
            else
                bad_field("engines", "expected 'analytical' or 'mc'");
        }
        spec.engines_listed = true;
    }
    return spec;
}

std::string network_config_to_json(const NetworkConfig& net) {
    return network_to_json_obj(net).dump(2);
}

NetworkConfig apply_axis(const NetworkConfig& base, SweepAxis axis, double value) {
    NetworkConfig net = base;
    switch (axis) {
        case SweepAxis::None:
            break;
        case SweepAxis::ThresholdDb:
            net.sinr_threshold = db_to_linear(value);
            break;
        case SweepAxis::UavAntennas: {
            const int n = static_cast<int>(std::lround(value));
            for (TierConfig& t : net.tiers) t.uav_antennas = n;
            break;
        }
        case SweepAxis::Density:
            for (TierConfig& t : net.tiers) t.density = value;
            break;
        case SweepAxis::Height: {
            const double shift = value - base.tiers.front().height;
            for (TierConfig& t : net.tiers) t.height += shift;
            break;
        }
        case SweepAxis::MisalignmentRangeRad:
            net.misalignment.uav_azimuth = ErrorDistribution::uniform(-value, value);
            net.misalignment.uav_elevation = ErrorDistribution::uniform(-value, value);
            break;
    }
    net.validate();
    return net;
}

const char* scheme_name(AssociationScheme s) {
    return s == AssociationScheme::MaxPower ? "max_power" : "nearest";
}
const char* alignment_name(Alignment a) {
    return a == Alignment::Imperfect ? "imperfect" : "perfect";
}
const char* engine_name(Engine e) {
    return e == Engine::Analytical ? "analytical" : "mc";
}

RunOutput run_experiment(const ExperimentSpec& spec, int workers) {
    RunOutput out;
    out.spec = spec;

    std::vector<double> values = spec.values;
    if (spec.axis == SweepAxis::None || values.empty())
        values = {linear_to_db(spec.base.sinr_threshold)};

    for (double v : values)
        for (AssociationScheme sch : spec.schemes)
            for (Alignment al : spec.alignments)
                for (Engine en : spec.engines) {
                    ResultRow row;
                    row.sweep_value = v;
                    row.scheme = sch;
                    row.alignment = al;
                    row.engine = en;
                    out.rows.push_back(row);
                }

    const int outer = static_cast<int>(std::min<std::size_t>(workers, out.rows.size()));
    const int inner = out.rows.size() == 1 ? workers : 1;

    parallel_for(out.rows.size(), outer, [&](std::size_t i) {
        ResultRow& row = out.rows[i];
        const auto t0 = std::chrono::steady_clock::now();
        try {
            NetworkConfig net = spec.axis == SweepAxis::None
                                    ? spec.base
                                    : apply_axis(spec.base, spec.axis, row.sweep_value);
            net.scheme = row.scheme;
            if (row.alignment == Alignment::Perfect)
                net.misalignment = MisalignmentModel::perfect();

            if (row.engine == Engine::Analytical) {
                const OutageResult r = row.alignment == Alignment::Perfect
                                           ? perfect_alignment_outage(net, inner)
                                           : outage_probability(net, inner);
                row.outage = r.value;
                row.quad_error = r.error_estimate;
            } else {
                const SimulationSummary s = estimate_outage(
                    net, spec.drops, spec.window_radius, spec.seed, spec.ranking, inner);
                row.outage = s.outage.estimate;
                row.ci_halfwidth = s.outage.ci_halfwidth;
            }
        } catch (const std::exception& e) {
            // A bad sweep point (or an engine blow-up) poisons only its row.
            row.error = e.what();
            row.outage = std::numeric_limits<double>::quiet_NaN();
            row.ci_halfwidth.reset();
            row.quad_error.reset();
        }
        row.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return out;
}

std::string to_csv(const RunOutput& out) {
    std::string s = "sweep_value,scheme,alignment,engine,outage,ci_halfwidth,quad_error,wall_time_s\n";
    char buf[256];
    for (const ResultRow& r : out.rows) {
        std::snprintf(buf, sizeof(buf), "%.10g,%s,%s,%s,%.10g,", r.sweep_value,
                      scheme_name(r.scheme), alignment_name(r.alignment),
                      engine_name(r.engine), r.outage);
        s += buf;
        if (r.ci_halfwidth) {
            std::snprintf(buf, sizeof(buf), "%.6g", *r.ci_halfwidth);
            s += buf;
        }
        s += ',';
        if (r.quad_error) {
            std::snprintf(buf, sizeof(buf), "%.4g", *r.quad_error);
            s += buf;
        }
        s += ',';
        if (out.spec.record_timings) {
            std::snprintf(buf, sizeof(buf), "%.3f", r.wall_time_s);
            s += buf;
        }
        s += '\n';
    }
    return s;
}

// The manifest is a loadable experiment config (resolved network at the top
// level plus sweep/simulation/seed/engines) with provenance and result rows
// on top, so `sweep --config run.csv.manifest.json` reproduces the dataset.
std::string to_manifest_json(const RunOutput& out, const std::string& command) {
    const ExperimentSpec& spec = out.spec;
    json rows = json::array();
    for (const ResultRow& r : out.rows) {
        json jr{{"sweep_value", r.sweep_value},
                {"scheme", scheme_name(r.scheme)},
                {"alignment", alignment_name(r.alignment)},
                {"engine", engine_name(r.engine)},
                {"outage", r.outage},
                {"wall_time_s", r.wall_time_s}};
        if (r.ci_halfwidth) jr["ci_halfwidth"] = *r.ci_halfwidth;
        if (r.quad_error) jr["quad_error"] = *r.quad_error;
        if (!r.error.empty()) jr["error"] = r.error;
        rows.push_back(jr);
    }

    json schemes = json::array();
    for (AssociationScheme s : spec.schemes) schemes.push_back(scheme_name(s));
    json alignments = json::array();
    for (Alignment a : spec.alignments) alignments.push_back(alignment_name(a));
    json sweep{{"axis", axis_name(spec.axis)},
               {"schemes", schemes},
               {"alignments", alignments}};
    if (spec.axis != SweepAxis::None) sweep["values"] = spec.values;

    json engines = json::array();
    for (Engine e : spec.engines) engines.push_back(engine_name(e));

    json j = network_to_json_obj(spec.base);
    j["command"] = command;
    j["version"] = UAVNET_VERSION;
    j["seed"] = spec.seed;
    j["engines"] = engines;
    j["sweep"] = sweep;
    j["simulation"] =
        json{{"drops", spec.drops},
             {"window_radius_m", spec.window_radius},
             {"ranking", spec.ranking == RankingMode::Strict ? "strict" : "full_power"}};
    j["rows"] = rows;
    return j.dump(2);
}

bool ValidationReport::failed() const {
    for (const ValidationCheck& c : checks)
        if (c.status == ValidationCheck::Status::Fail) return true;
    return false;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (const ValidationCheck& c : checks) {
        const char* tag = c.status == ValidationCheck::Status::Pass ? "PASS"
                          : c.status == ValidationCheck::Status::Fail ? "FAIL"
                                                                      : "INCONCLUSIVE";
        os << "[" << tag << "] " << c.name << ": measured " << c.measured
           << " (tolerance " << c.tolerance << ")";
        if (!c.detail.empty()) os << " - " << c.detail;
        os << "\n";
    }
    return os.str();
}

ValidationReport run_validation(const NetworkConfig& net, const ValidateOptions& opt) {
    ValidationReport rep;
    const NetworkConfig& mc_net = opt.mc_network ? *opt.mc_network : net;

    auto add = [&](const std::string& name, double measured, double tol,
                   ValidationCheck::Status st, const std::string& detail = "") {
        rep.checks.push_back({name, st, measured, tol, detail});
    };

    // 1. Outage: analytical vs simulation, both schemes and alignments.
    for (AssociationScheme sch :
         {AssociationScheme::MaxPower, AssociationScheme::NearestDistance}) {
        for (Alignment al : {Alignment::Imperfect, Alignment::Perfect}) {
            NetworkConfig an = net;
            an.scheme = sch;
            NetworkConfig mn = mc_net;
            mn.scheme = sch;
            if (al == Alignment::Perfect) {
                an.misalignment = MisalignmentModel::perfect();
                mn.misalignment = MisalignmentModel::perfect();
            }
            const OutageResult a = al == Alignment::Perfect
                                       ? perfect_alignment_outage(an, opt.workers)
                                       : outage_probability(an, opt.workers);
            const SimulationSummary s =
                estimate_outage(mn, opt.drops, opt.window_radius, opt.seed,
                                RankingMode::Strict, opt.workers);
            const double diff = std::fabs(a.value - s.outage.estimate);
            const double ci = s.outage.ci_halfwidth;
            const double tol = 0.03;
            ValidationCheck::Status st;
            if (diff - ci > tol)
                st = ValidationCheck::Status::Fail;
            else if (diff <= tol && ci <= 0.5 * tol)
                st = ValidationCheck::Status::Pass;
            else
                st = ValidationCheck::Status::Inconclusive;
            char detail[160];
            std::snprintf(detail, sizeof(detail),
                          "analytical %.5f vs simulated %.5f (ci %.5f)", a.value,
                          s.outage.estimate, ci);
            add(std::string("outage ") + scheme_name(sch) + " " + alignment_name(al),
                diff, tol, st, detail);
        }
    }

    // 2. Serving-distance distribution: total variation on the simulation's
    // histogram bins (distribution is independent of alignment).
    for (AssociationScheme sch :
         {AssociationScheme::MaxPower, AssociationScheme::NearestDistance}) {
        NetworkConfig an = net;
        an.scheme = sch;
        NetworkConfig mn = mc_net;
        mn.scheme = sch;
        const SimulationSummary s = estimate_outage(
            mn, opt.drops, opt.window_radius, opt.seed + 17, RankingMode::Strict,
            opt.workers);
        const ServingDistanceModel model(an);

        const double width = (s.hist_hi - s.hist_lo) / kServingHistBins;
        double tv = 0.0, analytic_tail = 1.0;
        const double n_valid = static_cast<double>(s.outage.drops);
        for (int b = 0; b < kServingHistBins; ++b) {
            const double lo = s.hist_lo + b * width, hi = lo + width;
            double mass = 0.0;
            for (std::size_t k = 0; k < an.tiers.size(); ++k)
                for (LinkType lt : {LinkType::LoS, LinkType::NLoS})
                    mass += quad::integrate_finite(
                                [&](double r) { return model.serving_pdf(sch, k, lt, r); },
                                std::max(lo, an.tiers[k].height), hi, 1e-6, 1e-12)
                                .value;
            analytic_tail -= mass;
            tv += std::fabs(mass - s.serving_hist[static_cast<std::size_t>(b)] / n_valid);
        }
        tv += std::fabs(std::max(0.0, analytic_tail) -
                        static_cast<double>(s.hist_overflow) / n_valid);
        tv *= 0.5;

        const double tol = 0.02;
        const double allowance = 30.0 * std::sqrt(0.02 / static_cast<double>(opt.drops));
        ValidationCheck::Status st;
        if (tv <= tol)
            st = ValidationCheck::Status::Pass;
        else if (tv > tol + allowance)
            st = ValidationCheck::Status::Fail;
        else
            st = ValidationCheck::Status::Inconclusive;
        add(std::string("serving distance TV ") + scheme_name(sch), tv, tol, st);
    }

    // 3. Transform spot checks: exp(Q(s)) vs mean of exp(-s I) from the
    // conditional interference sampler.
    {
        const long n_samples = std::max<long>(5000, opt.drops / 5);
        for (std::size_t k = 0; k < std::min<std::size_t>(2, net.tiers.size()); ++k) {
            const double r = 2.0 * net.tiers[k].height;
            const ServingContext ctx =
                ServingContext::make(net, k, LinkType::LoS, r, 0.0);
            const AntennaPattern v = net.tier_pattern(k);
            const AntennaPattern u = net.ue_pattern();
            const double s_arg = net.sinr_threshold *
                                 std::pow(r, net.channel.alpha_los) /
                                 (net.tiers[k].tx_power * net.channel.atten_los *
                                  v.main_gain * u.main_gain);
            const double analytic = std::exp(log_laplace(s_arg, ctx, net, net.scheme));

            Rng rng(opt.seed + 1000 + k);
            double acc = 0.0, acc2 = 0.0;
            for (long i = 0; i < n_samples; ++i) {
                const double itf = sample_conditional_interference(
                    mc_net, k, LinkType::LoS, r, 0.0, opt.window_radius, rng);
                const double e = std::exp(-s_arg * itf);
                acc += e;
                acc2 += e * e;
            }
            const double mean = acc / n_samples;
            const double var = std::max(0.0, acc2 / n_samples - mean * mean);
            const double se = std::sqrt(var / n_samples);
            const double diff = std::fabs(analytic - mean);
            const double tol = 0.01;
            ValidationCheck::Status st;
            if (diff - 3.0 * se > tol)
                st = ValidationCheck::Status::Fail;
            else if (diff <= tol && 3.0 * se <= tol)
                st = ValidationCheck::Status::Pass;
            else
                st = ValidationCheck::Status::Inconclusive;
            char detail[128];
            std::snprintf(detail, sizeof(detail), "exp(Q) %.5f vs empirical %.5f",
                          analytic, mean);
            add("transform tier " + std::to_string(k), diff, tol, st, detail);
        }
    }

    // 4. Alignment-case frequencies against the closed-form probabilities.
    {
        const auto probs = case_probabilities(net.misalignment, net.tier_pattern(0),
                                              net.ue_pattern());
        Rng rng(opt.seed + 99);
        const long draws = 1000000;
        std::array<long, 4> counts{};
        const AntennaPattern v = net.tier_pattern(0);
        const AntennaPattern u = net.ue_pattern();
        for (long i = 0; i < draws; ++i) {
            const double va = net.misalignment.uav_azimuth.sample(rng);
            const double ve = net.misalignment.uav_elevation.sample(rng);
            const double ua = net.misalignment.ue_azimuth.sample(rng);
            const double ue = net.misalignment.ue_elevation.sample(rng);
            const bool tx = std::fabs(va) <= 0.5 * v.width_azimuth &&
                            std::fabs(ve) <= 0.5 * v.width_elevation;
            const bool rx = std::fabs(ua) <= 0.5 * u.width_azimuth &&
                            std::fabs(ue) <= 0.5 * u.width_elevation;
            counts[tx ? (rx ? 0 : 1) : (rx ? 2 : 3)] += 1;
        }
        double worst = 0.0;
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst,
                             std::fabs(static_cast<double>(counts[j]) / draws - probs[j]));
        add("alignment case frequencies", worst, 0.002,
            worst <= 0.002 ? ValidationCheck::Status::Pass
                           : ValidationCheck::Status::Fail);
    }

    return rep;
}

}  // namespace uavnet
