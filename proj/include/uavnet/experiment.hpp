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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavnet/config.hpp"
#include "uavnet/montecarlo.hpp"

namespace uavnet {

enum class Engine { Analytical, MonteCarlo };
enum class Alignment { Imperfect, Perfect };

enum class SweepAxis {
    None,                  // single evaluation at the configured operating point
    ThresholdDb,
    UavAntennas,
    Density,
    Height,                // first-tier height; inter-tier offsets preserved
    MisalignmentRangeRad,  // uav-side symmetric error half-range
};

struct ExperimentSpec {
    NetworkConfig base;                    // misalignment = the imperfect model
    std::vector<AssociationScheme> schemes = {AssociationScheme::MaxPower};
    std::vector<Alignment> alignments = {Alignment::Imperfect};
    std::vector<Engine> engines = {Engine::Analytical};
    SweepAxis axis = SweepAxis::None;
    std::vector<double> values;            // sweep points; ignored for None
    long drops = 20000;
    double window_radius = kDefaultWindowRadius;
    RankingMode ranking = RankingMode::Strict;
    std::uint64_t seed = 1;
    bool record_timings = false;           // keep wall_time_s empty by default
                                           // so reruns stay byte-identical
    bool engines_listed = false;           // the loaded file pinned `engines`
};

// Load just the network portion of a config file (JSON with unit-suffixed
// keys); throws std::invalid_argument naming the offending field.
NetworkConfig load_network_config(const std::string& path);
ExperimentSpec load_experiment_spec(const std::string& path);

std::string network_config_to_json(const NetworkConfig& net);

// Returns the config with one sweep-axis value applied.
NetworkConfig apply_axis(const NetworkConfig& base, SweepAxis axis, double value);

struct ResultRow {
    double sweep_value = 0.0;
    AssociationScheme scheme = AssociationScheme::MaxPower;
    Alignment alignment = Alignment::Imperfect;
    Engine engine = Engine::Analytical;
    double outage = 0.0;
    std::optional<double> ci_halfwidth;  // Monte Carlo only
    std::optional<double> quad_error;    // analytical only
    double wall_time_s = 0.0;            // always recorded in the manifest
    std::string error;                   // non-empty: this row failed (outage
                                         // is NaN) but the run carried on
};

struct RunOutput {
    std::vector<ResultRow> rows;
    ExperimentSpec spec;
};

// Evaluates every (sweep value, scheme, alignment, engine) combination.
// Row order is fixed by the ExperimentSpec, and all estimator internals are
// keyed so the numbers are independent of `workers`.
RunOutput run_experiment(const ExperimentSpec& spec, int workers = 1);

std::string to_csv(const RunOutput& out);
std::string to_manifest_json(const RunOutput& out, const std::string& command);

const char* scheme_name(AssociationScheme s);
const char* alignment_name(Alignment a);
const char* engine_name(Engine e);

// Cross-validation battery: analytical vs simulated outage, serving-distance
// distributions, transform spot checks, and alignment-case frequencies.
struct ValidationCheck {
    std::string name;
    enum class Status { Pass, Fail, Inconclusive } status;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool failed() const;
    std::string to_text() const;
};

struct ValidateOptions {
    long drops = 100000;
    double window_radius = kDefaultWindowRadius;
    std::uint64_t seed = 1;
    int workers = 1;
    // Test hook: run the simulation side with different parameters (fault
    // injection); the analytical side always uses the given network.
    const NetworkConfig* mc_network = nullptr;
};

ValidationReport run_validation(const NetworkConfig& net, const ValidateOptions& opt);

}  // namespace uavnet
