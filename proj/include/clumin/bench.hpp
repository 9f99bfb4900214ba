// Copyright 2026 The clumin authors
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
#include <string>
#include <vector>

#include "clumin/solvers.hpp"

namespace clumin {

struct BenchRow {
    int selection_size = 0;
    int vertex_count = 0;
    int trials = 0;
    double median_wall_seconds = 0.0;
    std::uint64_t median_nodes = 0;
    int censored = 0;  // trials that ran out of budget

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::vector<BenchRow> rows;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

/// Solves seeded random UDG-reduced cluster instances at each selection size
/// and records median wall time and explored node count. Site counts follow
/// ceil(site_density * size^site_exponent). Measurements only; no
/// asymptotic claim is made or checked here.
BenchReport bench_scaling(const std::vector<int>& sizes, const SolverConfig& config,
                          std::uint64_t seed, int trials_per_size = 3,
                          double site_density = 2.0, int site_exponent = 1);

std::string bench_report_text(const BenchReport& report);

}  // namespace clumin
