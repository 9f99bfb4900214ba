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

// Acceptance suite: every check below is an exact, seeded, end-to-end gate
// over the public toolkit surface. One line per criterion, nonzero exit if
// any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "clumin/bench.hpp"
#include "clumin/generate.hpp"
#include "clumin/io.hpp"
#include "clumin/reductions.hpp"
#include "clumin/rng.hpp"
#include "clumin/solvers.hpp"
#include "clumin/verify.hpp"
#include "../test_oracles.hpp"

using namespace clumin;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

UdgInstance random_udg(SplitMix64& rng, int count, int target) {
    std::vector<std::vector<std::int64_t>> points;
    const std::int64_t box =
        4 * static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(count))));
    for (int i = 0; i < count; ++i) points.push_back({rng.next_int(0, box), rng.next_int(0, box)});
    return UdgInstance(PointSet(2, 4, points), 16, target);
}

std::vector<int> random_selection(SplitMix64& rng, int universe, int size) {
    std::vector<int> all(universe);
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(rng.next_below(universe - i));
        std::swap(all[i], all[j]);
    }
    std::vector<int> selection(all.begin(), all.begin() + size);
    std::sort(selection.begin(), selection.end());
    return selection;
}

Graph random_graph(SplitMix64& rng, int count, double edge_probability) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (rng.next_double() < edge_probability) edges.emplace_back(i, j);
        }
    }
    return Graph(count, std::move(edges));
}

double fitted_exponent(const std::vector<int>& sizes, const std::vector<std::uint64_t>& steps) {
    const std::size_t count = sizes.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mean_x += std::log(static_cast<double>(sizes[i]));
        mean_y += std::log(static_cast<double>(steps[i]));
    }
    mean_x /= static_cast<double>(count);
    mean_y /= static_cast<double>(count);
    double covariance = 0.0, variance = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dx = std::log(static_cast<double>(sizes[i])) - mean_x;
        const double dy = std::log(static_cast<double>(steps[i])) - mean_y;
        covariance += dx * dy;
        variance += dx * dx;
    }
    return covariance / variance;
}

// 1. zero disagreements between the native independent-set oracle and the
//    reduce-then-solve path, 500 seeded trials, centers <= 12, every K
bool criterion_iff_udg(std::string& detail) {
    HarnessReport report = run_iff_harness_udg(500, 12, 20260001);
    detail = std::to_string(report.trials) + " trials, " +
             std::to_string(report.disagreements.size()) + " disagreements, " +
             std::to_string(report.inconclusive) + " inconclusive";
    return report.trials == 500 && report.agreements == 500 && report.clean();
}

// 2. same for the clique reduction against the weighted-edge threshold test
bool criterion_iff_clique(std::string& detail) {
    HarnessReport report = run_iff_harness_clique(500, 12, 20260002);
    detail = std::to_string(report.trials) + " trials, " +
             std::to_string(report.disagreements.size()) + " disagreements, " +
             std::to_string(report.inconclusive) + " inconclusive";
    return report.trials == 500 && report.agreements == 500 && report.clean();
}

// 3. energy minus K(K-1)/2 equals the conflicting-pair count, exactly,
//    over 1000 random (instance, selection) pairs
bool criterion_excess_identity(std::string& detail) {
    SplitMix64 rng(20260003);
    int checked = 0;
    for (int round = 0; round < 1000; ++round) {
        const int n = 4 + static_cast<int>(rng.next_below(9));
        const int k = 1 + static_cast<int>(rng.next_below(n - 1));
        UdgInstance instance = random_udg(rng, n, k);
        const std::vector<int> selection = random_selection(rng, n, k);
        if (!excess_equals_conflicts(instance, selection)) {
            detail = "violated at round " + std::to_string(round);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " selections, zero violations";
    return checked == 1000;
}

// 4. branch-and-bound == exhaustive enumeration (objective and tie-broken
//    subset) on 200 instances; identical results for 1, 2 and 4 workers
bool criterion_solver_equivalence(std::string& detail) {
    SplitMix64 rng(20260004);
    for (int round = 0; round < 200; ++round) {
        const int n = 4 + static_cast<int>(rng.next_below(9));  // up to 12 vertices
        std::vector<Rational> weights;
        for (int i = 0; i < n * (n - 1) / 2; ++i) {
            weights.emplace_back(rng.next_int(-9, 9), rng.next_int(1, 4));
        }
        const int selection = 1 + static_cast<int>(rng.next_below(n - 1));
        WeightedEdgeInstance instance(n, std::move(weights), selection);

        SolverConfig config;
        config.algorithm = Algorithm::exhaustive;
        const Solution exhaustive = solve_weighted_edge(instance, config);

        config.algorithm = Algorithm::branch_and_bound;
        Solution reference;
        for (int workers : {1, 2, 4}) {
            config.parallel_workers = workers;
            const Solution bnb = solve_weighted_edge(instance, config);
            if (bnb.objective != exhaustive.objective || bnb.selected != exhaustive.selected) {
                detail = "objective/subset mismatch at round " + std::to_string(round);
                return false;
            }
            if (workers == 1) {
                reference = bnb;
            } else if (!(bnb == reference)) {
                detail = "worker-count dependence at round " + std::to_string(round);
                return false;
            }
        }
    }
    detail = "200 instances, exhaustive == branch_and_bound, workers {1,2,4} identical";
    return true;
}

// 5. energy evaluation performs exactly N(N-1)/2 potential lookups
bool criterion_pair_count(std::string& detail) {
    const std::vector<int> sizes{1, 2, 5, 10, 50};
    const std::vector<std::uint64_t> expected{0, 1, 10, 45, 1225};
    std::vector<std::vector<std::int64_t>> points;
    for (int i = 0; i < 60; ++i) points.push_back({3 * (i % 8), 3 * (i / 8)});
    const PointSet sites(2, 1, points);
    detail.clear();
    for (std::size_t case_index = 0; case_index < sizes.size(); ++case_index) {
        const int n = sizes[case_index];
        ClusterMinInstance instance(sites, n, RadialPotential::step(1));
        std::vector<int> selection(n);
        std::iota(selection.begin(), selection.end(), 0);
        const EnergyResult result = energy(instance, selection);
        if (!detail.empty()) detail += ", ";
        detail += "N=" + std::to_string(n) + ":" + std::to_string(result.pair_evaluations);
        if (result.pair_evaluations != expected[case_index]) return false;
    }
    return true;
}

// 6. construction step counters of both reductions fit a log-log slope <= 2.2
//    over source sizes {10, 20, 40, 80}
bool criterion_polynomial_construction(std::string& detail) {
    const std::vector<int> sizes{10, 20, 40, 80};
    std::vector<std::uint64_t> clique_steps, udg_steps;
    SplitMix64 rng(20260006);
    for (int n : sizes) {
        Graph graph = random_graph(rng, n, 0.5);
        clique_steps.push_back(clique_to_weighted_edge(graph, n / 2).second.construction_steps);
        UdgInstance udg = random_udg(rng, n, n / 2);
        udg_steps.push_back(udg_to_cluster(udg).second.construction_steps);
    }
    const double clique_exponent = fitted_exponent(sizes, clique_steps);
    const double udg_exponent = fitted_exponent(sizes, udg_steps);
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer), "fitted exponents: clique %.3f, udg %.3f",
                  clique_exponent, udg_exponent);
    detail = buffer;
    return clique_exponent <= 2.2 && udg_exponent <= 2.2;
}

// 7. grids with spacing strictly beyond the threshold always answer YES at
//    exactly K(K-1)/2, for 50 seeded (grid, K) combinations
bool criterion_grid_sanity(std::string& detail) {
    SplitMix64 rng(20260007);
    for (int round = 0; round < 50; ++round) {
        GeneratorSpec spec;
        spec.kind = GeneratorKind::grid_points;
        spec.grid_side = 3 + static_cast<int>(rng.next_below(4));  // 3..6
        spec.resolution = 1;
        spec.grid_spacing = 2 + static_cast<int>(rng.next_below(3));  // spacing^2 > 1
        const int count = spec.grid_side * spec.grid_side;
        spec.selection_size =
            2 + static_cast<int>(rng.next_below(std::min(9, count - 2)));
        spec.seed = rng.fork_seed();
        const auto instance = std::get<UdgInstance>(generate(spec));
        auto [cluster, receipt] = udg_to_cluster(instance);
        const Solution solution = solve_cluster_min(cluster, {});
        const InterpretedAnswer answer = interpret_udg_answer(solution, receipt);
        const int k = instance.target_size();
        if (!answer.yes || solution.objective != Rational(k * (k - 1) / 2)) {
            detail = "grid answered NO at round " + std::to_string(round);
            return false;
        }
        if (!excess_equals_conflicts(instance, *answer.certificate)) {
            detail = "excess identity broke at round " + std::to_string(round);
            return false;
        }
    }
    detail = "50 grid/K combinations, all YES at K(K-1)/2";
    return true;
}

// 8. serialize/deserialize identity across 100 generated artifacts of every
//    kind: instances, solutions, receipts, reports
bool criterion_round_trip(std::string& detail) {
    SplitMix64 rng(20260008);
    int artifacts = 0;
    auto check_instance = [&artifacts](const AnyInstance& instance) {
        ++artifacts;
        return instance_from_json(instance_to_json(instance)) == instance;
    };
    for (int round = 0; round < 12; ++round) {
        const int n = 4 + static_cast<int>(rng.next_below(7));

        Graph graph = random_graph(rng, n, 0.3 + 0.4 * rng.next_double());
        if (!check_instance(AnyInstance(graph))) return false;

        UdgInstance udg = random_udg(rng, n, 2);
        if (!check_instance(AnyInstance(udg))) return false;

        auto [weighted, weighted_receipt] = clique_to_weighted_edge(graph, std::max(1, n / 2));
        if (!check_instance(AnyInstance(weighted))) return false;

        auto [cluster, cluster_receipt] = udg_to_cluster(udg);
        if (!check_instance(AnyInstance(cluster))) return false;

        const Solution solution = solve_weighted_edge(weighted, {});
        ++artifacts;
        if (solution_from_json(solution_to_json(solution)) != solution) return false;

        ++artifacts;
        if (receipt_from_json(receipt_to_json(cluster_receipt)) != cluster_receipt) return false;

        HarnessReport harness = run_iff_harness_udg(2, 6, rng.fork_seed());
        ++artifacts;
        if (harness_report_from_json(harness_report_to_json(harness)) != harness) return false;

        BenchReport bench = bench_scaling({3}, {}, rng.fork_seed(), 1);
        ++artifacts;
        if (bench_report_from_json(bench_report_to_json(bench)) != bench) return false;
    }
    // extra disk instances round out the hundred
    while (artifacts < 100) {
        UdgInstance udg = random_udg(rng, 5, 2);
        ++artifacts;
        if (instance_from_json(instance_to_json(AnyInstance(udg))) != AnyInstance(udg)) {
            return false;
        }
    }
    detail = std::to_string(artifacts) + " artifacts round-tripped bit-exactly";
    return artifacts >= 100;
}

// 9. exhaustive bench node counts equal C(|V|, N) exactly, up to ~10^6
bool criterion_scaling_report(std::string& detail) {
    SolverConfig config;
    config.algorithm = Algorithm::exhaustive;
    const std::vector<int> sizes{6, 8, 10, 11};
    BenchReport report = bench_scaling(sizes, config, 20260009, 3, 2.0, 1);
    if (report.rows.size() != sizes.size()) {
        detail = "missing rows";
        return false;
    }
    detail.clear();
    for (const BenchRow& row : report.rows) {
        const std::uint64_t expected = testing::binomial(row.vertex_count, row.selection_size);
        if (!detail.empty()) detail += ", ";
        detail += "C(" + std::to_string(row.vertex_count) + "," +
                  std::to_string(row.selection_size) + ")=" + std::to_string(row.median_nodes);
        if (row.censored != 0 || row.median_nodes != expected) return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"iff-theorem-udg", criterion_iff_udg},
        {"iff-theorem-clique", criterion_iff_clique},
        {"excess-identity", criterion_excess_identity},
        {"solver-equivalence", criterion_solver_equivalence},
        {"pair-count-contract", criterion_pair_count},
        {"polynomial-construction", criterion_polynomial_construction},
        {"grid-sanity", criterion_grid_sanity},
        {"round-trip", criterion_round_trip},
        {"scaling-report", criterion_scaling_report},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool passed = false;
        try {
            passed = criteria[i].run(detail);
        } catch (const std::exception& error) {
            detail = std::string("exception: ") + error.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%zu/%zu] %s  %-24s %s (%.2fs)\n", i + 1, criteria.size(),
                    passed ? "PASS" : "FAIL", criteria[i].name.c_str(), detail.c_str(), elapsed);
        std::fflush(stdout);
        if (!passed) ++failures;
    }
    if (failures == 0) {
        std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size(), criteria.size());
        return 0;
    }
    std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return 1;
}
