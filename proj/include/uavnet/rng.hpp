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

#include <cmath>
#include <cstdint>
#include <random>

namespace uavnet {

// Thin wrapper over mt19937_64 with hand-rolled variate transforms. The
// std::* distributions are implementation-defined, so using them would tie
// simulation output to a particular standard library; everything here is
// specified exactly and therefore reproducible anywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for a keyed substream (e.g. one per Monte Carlo
    // drop). splitmix64 decorrelates consecutive keys.
    static Rng substream(std::uint64_t seed, std::uint64_t key) {
        std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (key + 1);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return Rng(x);
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Exponential with unit mean; argument of log is in (0, 1].
    double exponential() { return -std::log(1.0 - uniform()); }

    // Gamma with integer shape m and scale 1/m (unit mean): sum of m
    // exponentials. Exact, rejection-free, so the stream position after the
    // call depends only on m.
    double gamma_unit_mean(int m) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) sum += exponential();
        return sum / static_cast<double>(m);
    }

    // Poisson count by summing unit-rate exponential arrivals until `mean`
    // is exceeded. O(mean) draws, exact for any mean that fits a double.
    long poisson(double mean) {
        long n = 0;
        double acc = exponential();
        while (acc <= mean) {
            ++n;
            acc += exponential();
        }
        return n;
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace uavnet
