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

#include "clumin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "clumin/errors.hpp"
#include "clumin/reductions.hpp"
#include "clumin/rng.hpp"

namespace clumin {

namespace {

// Local copy on purpose: the oracle side of the harness must not lean on
// solver internals.
bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool selection_matches(const std::vector<int>& selected, int required_size, int universe) {
    if (static_cast<int>(selected.size()) != required_size) return false;
    for (int index : selected) {
        if (index < 0 || index >= universe) {
            throw InputError("solution index " + std::to_string(index) + " out of range [0, " +
                             std::to_string(universe) + ")");
        }
    }
    std::vector<int> sorted = selected;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool graph_has_clique(const Graph& graph, int size) {
    const int n = graph.vertex_count();
    if (size > n) return false;
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        bool clique = true;
        for (std::size_t i = 0; i < comb.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < comb.size() && clique; ++j) {
                clique = graph.has_edge(comb[i], comb[j]);
            }
        }
        if (clique) return true;
    } while (next_combination(comb, n));
    return false;
}

PointSet random_centers(SplitMix64& rng, int count, std::int64_t resolution) {
    // box side ~ sqrt(count) geometric units keeps the expected disk degree
    // roughly constant, so YES and NO answers stay mixed
    const auto box =
        static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(count)))) * resolution;
    std::vector<std::vector<std::int64_t>> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        points.push_back({rng.next_int(0, box), rng.next_int(0, box)});
    }
    return PointSet(2, resolution, std::move(points));
}

std::int64_t count_conflicts(const UdgInstance& instance, const std::vector<int>& selection) {
    std::int64_t conflicts = 0;
    for (std::size_t i = 0; i < selection.size(); ++i) {
        for (std::size_t j = i + 1; j < selection.size(); ++j) {
            if (squared_distance(instance.centers(), selection[i], selection[j]) <=
                instance.conflict_threshold()) {
                ++conflicts;
            }
        }
    }
    return conflicts;
}

void validate_oracle_range(int max_size, const char* what) {
    if (max_size < 2) throw InputError(std::string(what) + " must be at least 2");
    if (max_size > 16) {
        throw InputError(std::string(what) + " beyond 16 is out of exhaustive-oracle range");
    }
}

}  // namespace

bool check_solution(const Instance& instance, const Solution& solution) {
    struct Checker {
        const Solution& solution;

        bool operator()(const WeightedEdgeInstance& inst) const {
            if (!selection_matches(solution.selected, inst.selection_size(),
                                   inst.vertex_count())) {
                return false;
            }
            Rational total(0);
            for (std::size_t i = 0; i < solution.selected.size(); ++i) {
                for (std::size_t j = i + 1; j < solution.selected.size(); ++j) {
                    total += inst.weight(solution.selected[i], solution.selected[j]);
                }
            }
            return total == solution.objective;
        }

        bool operator()(const ClusterMinInstance& inst) const {
            if (!selection_matches(solution.selected, inst.particle_count(),
                                   inst.sites().size())) {
                return false;
            }
            return energy(inst, solution.selected).value == solution.objective;
        }

        bool operator()(const UdgInstance& inst) const {
            if (!selection_matches(solution.selected, inst.target_size(),
                                   inst.centers().size())) {
                return false;
            }
            return Rational(count_conflicts(inst, solution.selected)) == solution.objective;
        }
    };
    return std::visit(Checker{solution}, instance);
}

HarnessReport run_iff_harness_udg(std::uint64_t trials, int max_centers, std::uint64_t seed,
                                  const SolverConfig& reduction_config) {
    validate_oracle_range(max_centers, "max_centers");
    const auto start = std::chrono::steady_clock::now();
    HarnessReport report;
    report.trials = trials;

    SplitMix64 stream(seed);
    SolverConfig oracle_config;
    oracle_config.algorithm = Algorithm::exhaustive;
    oracle_config.node_budget = reduction_config.node_budget;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = stream.fork_seed();
        SplitMix64 rng(trial_seed);
        const int n = static_cast<int>(rng.next_int(2, max_centers));
        const std::int64_t resolution = 4;
        PointSet centers = random_centers(rng, n, resolution);
        const std::int64_t threshold = resolution * resolution;  // geometric distance 1

        bool agreed = true;
        bool inconclusive = false;
        for (int k = 1; k < n && agreed; ++k) {
            UdgInstance instance(centers, threshold, k);
            try {
                Solution oracle = solve_udg_independent_set(instance, oracle_config);
                const bool oracle_yes = oracle.objective.is_zero();

                auto [cluster, receipt] = udg_to_cluster(instance);
                Solution reduced = solve_cluster_min(cluster, reduction_config);
                const bool reduction_yes = interpret_udg_answer(reduced, receipt).yes;

                if (oracle_yes != reduction_yes) {
                    agreed = false;
                    report.disagreements.push_back(
                        {trial, trial_seed,
                         "udg n=" + std::to_string(n) + " K=" + std::to_string(k) +
                             " threshold=" + std::to_string(threshold) +
                             " resolution=" + std::to_string(resolution),
                         oracle_yes, reduction_yes});
                }
            } catch (const BudgetError&) {
                inconclusive = true;
                break;
            }
        }
        if (inconclusive) {
            ++report.inconclusive;
        } else if (agreed) {
            ++report.agreements;
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

HarnessReport run_iff_harness_clique(std::uint64_t trials, int max_vertices, std::uint64_t seed,
                                     const SolverConfig& reduction_config) {
    validate_oracle_range(max_vertices, "max_vertices");
    const auto start = std::chrono::steady_clock::now();
    HarnessReport report;
    report.trials = trials;

    SplitMix64 stream(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = stream.fork_seed();
        SplitMix64 rng(trial_seed);
        const int n = static_cast<int>(rng.next_int(2, max_vertices));
        const double edge_probability = rng.next_double();
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.next_double() < edge_probability) edges.emplace_back(i, j);
            }
        }
        Graph graph(n, std::move(edges));

        bool agreed = true;
        bool inconclusive = false;
        for (int size = 1; size < n && agreed; ++size) {
            try {
                const bool oracle_yes = graph_has_clique(graph, size);

                auto [weighted, receipt] = clique_to_weighted_edge(graph, size);
                Solution reduced = solve_weighted_edge(weighted, reduction_config);
                if (!reduced.proven_optimal) {
                    throw ContractError("clique harness needs a proven-optimal solver");
                }
                const bool reduction_yes = reduced.objective == receipt.decision_threshold;

                if (oracle_yes != reduction_yes) {
                    agreed = false;
                    report.disagreements.push_back(
                        {trial, trial_seed,
                         "clique n=" + std::to_string(n) + " N=" + std::to_string(size) +
                             " |E|=" + std::to_string(graph.edge_count()),
                         oracle_yes, reduction_yes});
                }
            } catch (const BudgetError&) {
                inconclusive = true;
                break;
            }
        }
        if (inconclusive) {
            ++report.inconclusive;
        } else if (agreed) {
            ++report.agreements;
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool excess_equals_conflicts(const UdgInstance& instance, const std::vector<int>& selection) {
    auto [cluster, receipt] = udg_to_cluster(instance);
    Rational total = energy(cluster, selection).value;
    const Rational excess = total - receipt.decision_threshold;
    return excess == Rational(count_conflicts(instance, selection));
}

}  // namespace clumin
