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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "uavnet/experiment.hpp"

using namespace uavnet;

namespace {
std::string write_temp(const std::string& text) {
    static int counter = 0;
    const std::string path =
        "/tmp/uavnet_test_cfg_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << text;
    return path;
}

const char* kMinimalConfig = R"({
  "tiers": [
    {"height_m": 150, "density_per_m2": 1e-5, "power_dbw": 0, "uav_antennas": 9},
    {"height_m": 200, "density_per_m2": 1e-5, "power_dbw": 2, "uav_antennas": 9}
  ],
  "ue_antennas": 4,
  "misalignment": {
    "uav_azimuth":   {"kind": "uniform", "min_rad": -0.4, "max_rad": 0.4},
    "uav_elevation": {"kind": "uniform", "min_rad": -0.4, "max_rad": 0.4},
    "ue_azimuth":    {"kind": "none"},
    "ue_elevation":  {"kind": "none"}
  },
  "threshold_db": 0,
  "scheme": "max_power"
})";

// Shipped configs, resolved against the source tree so the binary works
// from any working directory (ctest runs it from the build tree).
std::string shipped(const char* rel) {
#ifdef UAVNET_SOURCE_DIR
    return std::string(UAVNET_SOURCE_DIR "/") + rel;
#else
    return rel;
#endif
}
}  // namespace

TEST_CASE("reference config file parses to the documented defaults") {
    const NetworkConfig net = load_network_config(shipped("configs/reference.json"));
    REQUIRE(net.tiers.size() == 2);
    CHECK(net.tiers[0].height == 150.0);
    CHECK(net.tiers[1].height == 200.0);
    CHECK(net.tiers[0].density == 1e-5);
    CHECK(net.tiers[0].tx_power == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(net.tiers[1].tx_power ==
          doctest::Approx(std::pow(10.0, 0.2)).epsilon(1e-12));
    CHECK(net.tiers[0].uav_antennas == 9);
    CHECK(net.ue_antennas == 4);
    CHECK(net.sinr_threshold == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(net.scheme == AssociationScheme::MaxPower);
    CHECK(!net.misalignment.is_perfect());
    CHECK(net.misalignment.uav_azimuth.max() ==
          doctest::Approx(0.39269908169872414).epsilon(1e-15));
    CHECK(net.misalignment.ue_elevation.max() ==
          doctest::Approx(0.26179938779914946).epsilon(1e-15));
}

TEST_CASE("parse errors name the offending field") {
    // Omitted blocks fall back to library defaults; present-but-broken
    // fields must be named in the diagnostic.
    const NetworkConfig bare = load_network_config(write_temp(R"({"ue_antennas": 9})"));
    CHECK(bare.tiers.size() == 2);
    CHECK(bare.ue_antennas == 9);

    const std::string empty_tiers = write_temp(R"({"tiers": []})");
    CHECK_THROWS_WITH_AS(load_network_config(empty_tiers),
                         doctest::Contains("tiers"), std::invalid_argument);

    const std::string no_height = write_temp(
        R"({"tiers": [{"density_per_m2": 1e-5, "power_dbw": 0, "uav_antennas": 9}]})");
    CHECK_THROWS_WITH_AS(load_network_config(no_height),
                         doctest::Contains("tiers[0].height_m"),
                         std::invalid_argument);

    std::string bad = kMinimalConfig;
    bad.replace(bad.find("max_power"), 9, "furthest");
    CHECK_THROWS_WITH_AS(load_network_config(write_temp(bad)),
                         doctest::Contains("scheme"), std::invalid_argument);

    bad = kMinimalConfig;
    bad.replace(bad.find("\"height_m\": 150"), 15, "\"height_m\": -5");
    CHECK_THROWS_AS(load_network_config(write_temp(bad)), std::invalid_argument);

    CHECK_THROWS_WITH_AS(load_network_config("/tmp/uavnet_missing_file.json"),
                         doctest::Contains("cannot open"), std::invalid_argument);
}

TEST_CASE("sweep block validation") {
    std::string with_sweep = kMinimalConfig;
    with_sweep.insert(with_sweep.rfind('}'),
                      R"(, "sweep": {"axis": "threshold_db", "values": []})");
    CHECK_THROWS_WITH_AS(load_experiment_spec(write_temp(with_sweep)),
                         doctest::Contains("values"), std::invalid_argument);

    with_sweep = kMinimalConfig;
    with_sweep.insert(with_sweep.rfind('}'),
                      R"(, "sweep": {"axis": "sideways", "values": [1]})");
    CHECK_THROWS_WITH_AS(load_experiment_spec(write_temp(with_sweep)),
                         doctest::Contains("axis"), std::invalid_argument);

    const ExperimentSpec spec = load_experiment_spec(shipped("configs/antenna_sweep.json"));
    CHECK(spec.axis == SweepAxis::UavAntennas);
    CHECK(spec.values.size() == 8);
    CHECK(spec.schemes.size() == 2);
    CHECK(spec.alignments.size() == 2);
    CHECK(spec.drops == 20000);
    CHECK(spec.window_radius == kDefaultWindowRadius);
}

TEST_CASE("JSON round trip preserves every field") {
    const NetworkConfig net = load_network_config(shipped("configs/reference.json"));
    const NetworkConfig back =
        load_network_config(write_temp(network_config_to_json(net)));
    CHECK(back.tiers.size() == net.tiers.size());
    for (std::size_t k = 0; k < net.tiers.size(); ++k) {
        CHECK(back.tiers[k].height == net.tiers[k].height);
        CHECK(back.tiers[k].density == net.tiers[k].density);
        CHECK(back.tiers[k].tx_power ==
              doctest::Approx(net.tiers[k].tx_power).epsilon(1e-12));
        CHECK(back.tiers[k].uav_antennas == net.tiers[k].uav_antennas);
    }
    CHECK(back.channel.alpha_los == net.channel.alpha_los);
    CHECK(back.channel.atten_nlos == net.channel.atten_nlos);
    CHECK(back.channel.noise_power == net.channel.noise_power);
    CHECK(back.ue_antennas == net.ue_antennas);
    CHECK(back.sinr_threshold ==
          doctest::Approx(net.sinr_threshold).epsilon(1e-12));
    CHECK(back.scheme == net.scheme);
    CHECK(back.misalignment.uav_elevation.min() ==
          net.misalignment.uav_elevation.min());
    CHECK(back.misalignment.ue_azimuth.is_degenerate() ==
          net.misalignment.ue_azimuth.is_degenerate());
}

TEST_CASE("sweep axes rewrite the right fields") {
    const NetworkConfig base = load_network_config(shipped("configs/reference.json"));

    const NetworkConfig thr = apply_axis(base, SweepAxis::ThresholdDb, -5.0);
    CHECK(thr.sinr_threshold == doctest::Approx(std::pow(10.0, -0.5)).epsilon(1e-12));

    const NetworkConfig ant = apply_axis(base, SweepAxis::UavAntennas, 25.0);
    CHECK(ant.tiers[0].uav_antennas == 25);
    CHECK(ant.tiers[1].uav_antennas == 25);
    CHECK(ant.ue_antennas == 4);  // user side untouched

    const NetworkConfig den = apply_axis(base, SweepAxis::Density, 5e-5);
    CHECK(den.tiers[0].density == 5e-5);
    CHECK(den.tiers[1].density == 5e-5);

    // First-tier height moves, inter-tier offsets ride along.
    const NetworkConfig hgt = apply_axis(base, SweepAxis::Height, 180.0);
    CHECK(hgt.tiers[0].height == 180.0);
    CHECK(hgt.tiers[1].height == 230.0);

    // Transmitter-side error half-range; user-side distributions unchanged.
    const NetworkConfig mis =
        apply_axis(base, SweepAxis::MisalignmentRangeRad, 0.1);
    CHECK(mis.misalignment.uav_azimuth.max() == 0.1);
    CHECK(mis.misalignment.uav_elevation.min() == -0.1);
    CHECK(mis.misalignment.ue_elevation.max() ==
          base.misalignment.ue_elevation.max());
}

TEST_CASE("CSV layout is stable down to the byte") {
    RunOutput out;
    out.spec.record_timings = false;
    ResultRow a;
    a.sweep_value = 0.0;
    a.outage = 0.25;
    a.quad_error = 1.25e-6;
    a.wall_time_s = 3.25;
    ResultRow b;
    b.sweep_value = -2.5;
    b.scheme = AssociationScheme::NearestDistance;
    b.alignment = Alignment::Perfect;
    b.engine = Engine::MonteCarlo;
    b.outage = 0.0123456789;
    b.ci_halfwidth = 0.00274;
    out.rows = {a, b};
    CHECK(to_csv(out) ==
          "sweep_value,scheme,alignment,engine,outage,ci_halfwidth,quad_error,"
          "wall_time_s\n"
          "0,max_power,imperfect,analytical,0.25,,1.25e-06,\n"
          "-2.5,nearest,perfect,mc,0.0123456789,0.00274,,\n");

    out.spec.record_timings = true;
    CHECK(to_csv(out) ==
          "sweep_value,scheme,alignment,engine,outage,ci_halfwidth,quad_error,"
          "wall_time_s\n"
          "0,max_power,imperfect,analytical,0.25,,1.25e-06,3.250\n"
          "-2.5,nearest,perfect,mc,0.0123456789,0.00274,,0.000\n");
}

TEST_CASE("experiment grid is complete, ordered, and reproducible") {
    ExperimentSpec spec;
    spec.base = load_network_config(shipped("configs/reference.json"));
    spec.axis = SweepAxis::ThresholdDb;
    spec.values = {-5.0, 0.0};
    spec.schemes = {AssociationScheme::MaxPower, AssociationScheme::NearestDistance};
    spec.alignments = {Alignment::Imperfect, Alignment::Perfect};
    spec.engines = {Engine::MonteCarlo};
    spec.drops = 400;
    spec.window_radius = 2500.0;
    spec.seed = 7;

    const RunOutput first = run_experiment(spec, 1);
    REQUIRE(first.rows.size() == 8);
    // value-major order, then scheme, alignment, engine
    CHECK(first.rows[0].sweep_value == -5.0);
    CHECK(first.rows[4].sweep_value == 0.0);
    CHECK(first.rows[0].scheme == AssociationScheme::MaxPower);
    CHECK(first.rows[2].scheme == AssociationScheme::NearestDistance);
    CHECK(first.rows[0].alignment == Alignment::Imperfect);
    CHECK(first.rows[1].alignment == Alignment::Perfect);
    for (const ResultRow& r : first.rows) {
        CHECK(r.engine == Engine::MonteCarlo);
        CHECK(r.ci_halfwidth.has_value());
        CHECK(!r.quad_error.has_value());
        CHECK(r.wall_time_s > 0.0);
    }

    const RunOutput again = run_experiment(spec, 1);
    const RunOutput parallel = run_experiment(spec, 8);
    CHECK(to_csv(first) == to_csv(again));
    CHECK(to_csv(first) == to_csv(parallel));
}

TEST_CASE("manifest carries the provenance fields") {
    ExperimentSpec spec;
    spec.base = load_network_config(shipped("configs/reference.json"));
    spec.engines = {Engine::MonteCarlo};
    spec.drops = 200;
    spec.window_radius = 2000.0;
    spec.seed = 99;
    const RunOutput out = run_experiment(spec, 1);
    const std::string manifest = to_manifest_json(out, "uavnet simulate --x");
    CHECK(manifest.find("uavnet simulate --x") != std::string::npos);
    CHECK(manifest.find("\"seed\": 99") != std::string::npos);
    CHECK(manifest.find("\"drops\": 200") != std::string::npos);
    CHECK(manifest.find("wall_time_s") != std::string::npos);
    CHECK(manifest.find("height_m") != std::string::npos);
    CHECK(manifest.find("\"ranking\": \"strict\"") != std::string::npos);
    CHECK(manifest.find("\"version\"") != std::string::npos);
    CHECK(manifest.find("\"engines\"") != std::string::npos);
    CHECK(manifest.find("\"axis\"") != std::string::npos);
}

TEST_CASE("validation flags an injected model fault") {
    NetworkConfig net = load_network_config(shipped("configs/reference.json"));
    net.tiers.resize(1);  // single tier keeps the analytical side cheap
    NetworkConfig faulty = net;
    // Simulation silently drops the steering-error model: the imperfect
    // cross-checks must notice the two engines no longer answer the same
    // question.
    faulty.misalignment = MisalignmentModel::perfect();

    ValidateOptions opt;
    opt.drops = 400;
    opt.window_radius = 2500.0;
    opt.seed = 3;
    opt.mc_network = &faulty;
    const ValidationReport rep = run_validation(net, opt);
    CHECK(rep.failed());
    bool any_fail = false;
    for (const ValidationCheck& c : rep.checks)
        if (c.status == ValidationCheck::Status::Fail) any_fail = true;
    CHECK(any_fail);
    CHECK(rep.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("starved validation goes inconclusive instead of failing") {
    NetworkConfig net = load_network_config(shipped("configs/reference.json"));
    net.tiers.resize(1);
    ValidateOptions opt;
    opt.drops = 100;
    opt.window_radius = 2500.0;
    opt.seed = 4;
    const ValidationReport rep = run_validation(net, opt);
    CHECK(!rep.failed());
    bool any_inconclusive = false;
    for (const ValidationCheck& c : rep.checks)
        if (c.status == ValidationCheck::Status::Inconclusive)
            any_inconclusive = true;
    CHECK(any_inconclusive);
}

// Perfect alignment keeps the analytical rows cheap enough for a full
// config -> run -> manifest -> run comparison.
const char* kRoundTripConfig = R"({
  "misalignment": {
    "uav_azimuth":   {"kind": "none"},
    "uav_elevation": {"kind": "none"},
    "ue_azimuth":    {"kind": "none"},
    "ue_elevation":  {"kind": "none"}
  },
  "sweep": {"axis": "threshold_db", "values": [-5, 0],
            "schemes": ["max_power"], "alignments": ["perfect"]},
  "simulation": {"drops": 300, "window_radius_m": 1500},
  "seed": 42,
  "engines": ["analytical", "mc"]
})";

TEST_CASE("manifest round-trips: reloading it reproduces the dataset") {
    const ExperimentSpec spec = load_experiment_spec(write_temp(kRoundTripConfig));
    CHECK(spec.seed == 42);
    CHECK(spec.drops == 300);
    REQUIRE(spec.engines_listed);
    REQUIRE(spec.engines.size() == 2);
    CHECK(spec.engines[0] == Engine::Analytical);
    CHECK(spec.engines[1] == Engine::MonteCarlo);

    const RunOutput first = run_experiment(spec, 1);
    const std::string manifest = to_manifest_json(first, "uavnet sweep --x");
    const ExperimentSpec reloaded = load_experiment_spec(write_temp(manifest));
    CHECK(reloaded.seed == spec.seed);
    CHECK(reloaded.drops == spec.drops);
    CHECK(reloaded.window_radius == spec.window_radius);
    CHECK(reloaded.axis == spec.axis);
    CHECK(reloaded.values == spec.values);
    CHECK(to_csv(run_experiment(reloaded, 1)) == to_csv(first));
}

TEST_CASE("a failing sweep point marks its row and the run continues") {
    ExperimentSpec spec;
    spec.base = NetworkConfig::defaults();
    spec.base.misalignment = MisalignmentModel::perfect();
    spec.alignments = {Alignment::Perfect};
    spec.engines = {Engine::MonteCarlo};
    spec.axis = SweepAxis::Density;
    spec.values = {1e-5, -1.0};  // the second point cannot be a density
    spec.drops = 100;
    spec.window_radius = 1000.0;

    const RunOutput out = run_experiment(spec, 1);
    REQUIRE(out.rows.size() == 2);
    CHECK(out.rows[0].error.empty());
    CHECK(std::isfinite(out.rows[0].outage));
    CHECK(!out.rows[1].error.empty());
    CHECK(out.rows[1].error.find("density") != std::string::npos);
    CHECK(std::isnan(out.rows[1].outage));
    CHECK(!out.rows[1].ci_halfwidth.has_value());

    const std::string csv = to_csv(out);
    CHECK(csv.find("nan") != std::string::npos);
    CHECK(to_manifest_json(out, "x").find("\"error\"") != std::string::npos);
}

TEST_CASE("sweep block may pin schemes without naming an axis") {
    const ExperimentSpec spec = load_experiment_spec(write_temp(R"({
      "sweep": {"schemes": ["max_power", "nearest"], "alignments": ["imperfect"]}
    })"));
    CHECK(spec.axis == SweepAxis::None);
    CHECK(spec.values.empty());
    REQUIRE(spec.schemes.size() == 2);
    CHECK(spec.schemes[1] == AssociationScheme::NearestDistance);
    CHECK(!spec.engines_listed);

    CHECK_THROWS_AS(load_experiment_spec(write_temp(R"({"engines": ["warp"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_experiment_spec(write_temp(R"({"seed": -3})")),
                    std::invalid_argument);
}
