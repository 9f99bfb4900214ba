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

#include "clumin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "clumin/errors.hpp"
#include "clumin/generate.hpp"
#include "clumin/reductions.hpp"
#include "clumin/rng.hpp"

namespace clumin {

namespace {

template <typename T>
T lower_median(std::vector<T> values) {
    if (values.empty()) return T{};
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

}  // namespace

BenchReport bench_scaling(const std::vector<int>& sizes, const SolverConfig& config,
                          std::uint64_t seed, int trials_per_size, double site_density,
                          int site_exponent) {
    if (trials_per_size < 1) throw InputError("trials_per_size must be >= 1");
    BenchReport report;
    report.algorithm = algorithm_name(config.algorithm);
    report.seed = seed;

    SplitMix64 stream(seed);
    for (int size : sizes) {
        GeneratorSpec spec;
        spec.kind = GeneratorKind::random_points;
        spec.selection_size = size;
        spec.resolution = 4;
        spec.site_scaling_exponent = site_exponent;
        spec.scaling_density = site_density;

        BenchRow row;
        row.selection_size = size;
        row.trials = trials_per_size;
        std::vector<double> times;
        std::vector<std::uint64_t> nodes;
        for (int trial = 0; trial < trials_per_size; ++trial) {
            spec.seed = stream.fork_seed();
            auto instance = std::get<UdgInstance>(generate(spec));
            row.vertex_count = instance.centers().size();
            auto [cluster, receipt] = udg_to_cluster(instance);
            const auto start = std::chrono::steady_clock::now();
            try {
                Solution solution = solve_cluster_min(cluster, config);
                times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                              start)
                                    .count());
                nodes.push_back(solution.nodes_explored);
            } catch (const BudgetError&) {
                ++row.censored;
            }
        }
        row.median_wall_seconds = lower_median(times);
        row.median_nodes = lower_median(nodes);
        report.rows.push_back(row);
    }
    return report;
}

std::string bench_report_text(const BenchReport& report) {
    std::string out = "algorithm " + report.algorithm + ", seed " + std::to_string(report.seed) +
                      "\nsize  sites  trials  censored  median_nodes  median_seconds\n";
    char line[160];
    for (const BenchRow& row : report.rows) {
        std::snprintf(line, sizeof(line), "%4d  %5d  %6d  %8d  %12llu  %14.6f\n",
                      row.selection_size, row.vertex_count, row.trials, row.censored,
                      static_cast<unsigned long long>(row.median_nodes),
                      row.median_wall_seconds);
        out += line;
    }
    return out;
}

}  // namespace clumin
