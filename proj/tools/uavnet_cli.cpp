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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "uavnet/experiment.hpp"

namespace {

int default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

// CSV to --out (plus a .manifest.json sidecar) or to stdout.
void emit(const uavnet::RunOutput& out, const std::string& out_path,
          const std::string& command) {
    const std::string csv = uavnet::to_csv(out);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_file(out_path, csv);
        write_file(out_path + ".manifest.json",
                   uavnet::to_manifest_json(out, command) + "\n");
        std::cout << "wrote " << out.rows.size() << " rows to " << out_path << "\n";
    }
    for (const uavnet::ResultRow& r : out.rows)
        if (!r.error.empty())
            std::cerr << "row " << r.sweep_value << "/" << uavnet::engine_name(r.engine)
                      << " failed: " << r.error << "\n";
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<uavnet::Engine> engines_from_flag(const std::string& flag) {
    if (flag == "analytical") return {uavnet::Engine::Analytical};
    if (flag == "mc") return {uavnet::Engine::MonteCarlo};
    return {uavnet::Engine::Analytical, uavnet::Engine::MonteCarlo};
}

}  // namespace

int main(int argc, char** argv) {
    using uavnet::Engine;
    using uavnet::ExperimentSpec;

    CLI::App app{"Downlink outage for layered aerial networks with beam misalignment"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::string engine_flag = "both";
    std::uint64_t seed = 1;
    long drops = 20000;
    double window_radius = uavnet::kDefaultWindowRadius;
    int jobs = default_jobs();
    bool timings = false;
    bool full_power_ranking = false;

    auto add_common = [&](CLI::App* sub, bool with_engine) {
        sub->add_option("--config", config_path, "JSON configuration file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "CSV output path (stdout if omitted)");
        sub->add_option("--seed", seed, "base RNG seed");
        sub->add_option("--jobs", jobs, "worker threads (never changes results)");
        sub->add_flag("--timings", timings, "fill the wall_time_s CSV column");
        if (with_engine)
            sub->add_option("--engine", engine_flag, "analytical, mc, or both")
                ->check(CLI::IsMember({"analytical", "mc", "both"}));
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Analytical outage at the configured operating point");
    add_common(analyze, false);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo outage at the configured operating point");
    add_common(simulate, false);
    simulate->add_option("--drops", drops, "network realizations");
    simulate->add_option("--window", window_radius, "deployment disk radius (m)");
    simulate->add_flag("--full-power-ranking", full_power_ranking,
                       "rank candidate cells by instantaneous received power");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Evaluate the configured sweep over schemes/alignments/engines");
    add_common(sweep, true);
    sweep->add_option("--drops", drops, "network realizations per Monte Carlo row");
    sweep->add_option("--window", window_radius, "deployment disk radius (m)");

    CLI::App* validate = app.add_subcommand(
        "validate", "Cross-validate the analytical engine against simulation");
    add_common(validate, false);
    validate->add_option("--drops", drops, "network realizations per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // non-zero parse outcomes are usage errors
    }

    try {
        ExperimentSpec spec = uavnet::load_experiment_spec(config_path);
        // Flags beat file values only when actually given, so a run manifest
        // used as --config keeps its recorded seed/drops/engines.
        CLI::App* sub = analyze->parsed()    ? analyze
                        : simulate->parsed() ? simulate
                        : sweep->parsed()    ? sweep
                                             : validate;
        if (sub->count("--seed") != 0) spec.seed = seed;
        spec.record_timings = timings;
        const std::string command = join_args(argc, argv);

        if (analyze->parsed() || simulate->parsed()) {
            // Operating point only: ignore any sweep block in the config.
            spec.axis = uavnet::SweepAxis::None;
            spec.values.clear();
            spec.schemes = {spec.base.scheme};
            spec.alignments = {spec.base.misalignment.is_perfect()
                                   ? uavnet::Alignment::Perfect
                                   : uavnet::Alignment::Imperfect};
            spec.engines = {analyze->parsed() ? Engine::Analytical
                                              : Engine::MonteCarlo};
            if (simulate->parsed()) {
                if (simulate->count("--drops") != 0) spec.drops = drops;
                if (simulate->count("--window") != 0) spec.window_radius = window_radius;
                if (full_power_ranking) spec.ranking = uavnet::RankingMode::FullPower;
            }
            emit(uavnet::run_experiment(spec, jobs), out_path, command);
            return 0;
        }
        if (sweep->parsed()) {
            if (sweep->count("--engine") != 0 || !spec.engines_listed)
                spec.engines = engines_from_flag(engine_flag);
            if (sweep->count("--drops") != 0) spec.drops = drops;
            if (sweep->count("--window") != 0) spec.window_radius = window_radius;
            emit(uavnet::run_experiment(spec, jobs), out_path, command);
            return 0;
        }
        // validate
        uavnet::ValidateOptions opt;
        if (validate->count("--drops") != 0) opt.drops = drops;
        opt.seed = spec.seed;
        opt.workers = jobs;
        const uavnet::ValidationReport rep = uavnet::run_validation(spec.base, opt);
        const std::string text = rep.to_text();
        std::cout << text;
        if (!out_path.empty()) write_file(out_path, text);
        return rep.failed() ? 1 : 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
