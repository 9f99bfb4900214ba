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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "clumin/errors.hpp"
#include "clumin/reductions.hpp"
#include "clumin/rng.hpp"
#include "clumin/solvers.hpp"
#include "test_oracles.hpp"

using namespace clumin;

namespace {

WeightedEdgeInstance random_weighted_instance(SplitMix64& rng, int max_vertices) {
    const int n = 4 + static_cast<int>(rng.next_below(max_vertices - 3));
    std::vector<Rational> weights;
    for (int i = 0; i < n * (n - 1) / 2; ++i) {
        weights.emplace_back(rng.next_int(-9, 9), rng.next_int(1, 4));
    }
    const int selection = 1 + static_cast<int>(rng.next_below(n - 1));
    return WeightedEdgeInstance(n, std::move(weights), selection);
}

UdgInstance random_udg_instance(SplitMix64& rng, int count, int target) {
    std::vector<std::vector<std::int64_t>> points;
    const std::int64_t box = 4 * static_cast<std::int64_t>(
                                     std::max<int>(2, static_cast<int>(std::sqrt(count)) + 1));
    for (int i = 0; i < count; ++i) points.push_back({rng.next_int(0, box), rng.next_int(0, box)});
    return UdgInstance(PointSet(2, 4, points), 16, target);
}

const SolverConfig kExhaustive{Algorithm::exhaustive, std::nullopt, 1};
const SolverConfig kBranchAndBound{Algorithm::branch_and_bound, std::nullopt, 1};
const SolverConfig kGreedy{Algorithm::greedy, std::nullopt, 1};

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("all-ones complete instance attains the pair-count threshold") {
    // K4-reduced: every weight 1, three vertices wanted
    Graph complete(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto [instance, receipt] = clique_to_weighted_edge(complete, 3);
    for (const SolverConfig& config : {kExhaustive, kBranchAndBound}) {
        Solution solution = solve_weighted_edge(instance, config);
        CHECK(solution.selected == std::vector<int>{0, 1, 2});
        CHECK(solution.objective == Rational(3));
        CHECK(solution.objective == receipt.decision_threshold);
        CHECK(solution.proven_optimal);
    }
}

TEST_CASE("four-vertex instance with an enumerated optimum") {
    // w(0,1)=5 w(0,2)=1 w(0,3)=2 w(1,2)=4 w(1,3)=3 w(2,3)=6
    WeightedEdgeInstance instance(
        4, {Rational(5), Rational(1), Rational(2), Rational(4), Rational(3), Rational(6)}, 2);
    auto [oracle_value, oracle_subset] = testing::enumerate_weighted_minimum(instance);
    CHECK(oracle_value == Rational(1));
    CHECK(oracle_subset == std::vector<int>{0, 2});
    for (const SolverConfig& config : {kExhaustive, kBranchAndBound}) {
        Solution solution = solve_weighted_edge(instance, config);
        CHECK(solution.objective == oracle_value);
        CHECK(solution.selected == oracle_subset);
    }
}

TEST_CASE("symmetric ties break to the lexicographically smallest subset") {
    const int n = 6;
    std::vector<Rational> weights(n * (n - 1) / 2, Rational(1));
    WeightedEdgeInstance instance(n, weights, n - 1);
    for (const SolverConfig& config : {kExhaustive, kBranchAndBound}) {
        Solution solution = solve_weighted_edge(instance, config);
        CHECK(solution.selected == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(solution.objective == Rational((n - 1) * (n - 2) / 2));
    }
}

TEST_CASE("branch-and-bound matches exhaustive enumeration, subset included") {
    SplitMix64 rng(31);
    for (int round = 0; round < 60; ++round) {
        WeightedEdgeInstance instance = random_weighted_instance(rng, 12);
        Solution exhaustive = solve_weighted_edge(instance, kExhaustive);
        Solution bnb = solve_weighted_edge(instance, kBranchAndBound);
        CHECK(exhaustive.objective == bnb.objective);
        CHECK(exhaustive.selected == bnb.selected);
        CHECK(exhaustive.proven_optimal);
        CHECK(bnb.proven_optimal);
        CHECK(exhaustive.nodes_explored ==
              testing::binomial(instance.vertex_count(), instance.selection_size()));
    }
}

TEST_CASE("solutions are identical for any worker count") {
    SplitMix64 rng(32);
    for (int round = 0; round < 25; ++round) {
        WeightedEdgeInstance instance = random_weighted_instance(rng, 12);
        SolverConfig config = kBranchAndBound;
        Solution reference = solve_weighted_edge(instance, config);
        for (int workers : {2, 3, 4}) {
            config.parallel_workers = workers;
            Solution parallel = solve_weighted_edge(instance, config);
            CHECK(parallel == reference);  // bitwise, counters included
        }
    }
}

TEST_CASE("greedy is an upper bound and exact under full symmetry") {
    SplitMix64 rng(33);
    for (int round = 0; round < 40; ++round) {
        WeightedEdgeInstance instance = random_weighted_instance(rng, 10);
        Solution greedy = greedy_upper_bound(instance);
        auto [optimum, subset] = testing::enumerate_weighted_minimum(instance);
        CHECK(greedy.objective >= optimum);
        CHECK_FALSE(greedy.proven_optimal);
        CHECK(static_cast<int>(greedy.selected.size()) == instance.selection_size());
    }

    // all weights equal: N(N-1)/2 * w is forced
    std::vector<Rational> weights(10 * 9 / 2, Rational(3, 2));
    WeightedEdgeInstance symmetric(10, weights, 4);
    Solution greedy = greedy_upper_bound(symmetric);
    CHECK(greedy.objective == Rational(4 * 3 / 2) * Rational(3, 2));
    CHECK(greedy.objective == testing::enumerate_weighted_minimum(symmetric).first);

    // the 4-vertex enumerated instance: greedy happens to land on the optimum
    WeightedEdgeInstance four(
        4, {Rational(5), Rational(1), Rational(2), Rational(4), Rational(3), Rational(6)}, 2);
    CHECK(greedy_upper_bound(four).objective == Rational(1));

    // all-ones K4 reduction with three slots
    Graph complete(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(greedy_upper_bound(clique_to_weighted_edge(complete, 3).first).objective == Rational(3));
}

TEST_CASE("a poor greedy seed cannot displace the true optimum") {
    // greedy always starts at vertex 0, which is expensive here
    WeightedEdgeInstance instance(
        4, {Rational(100), Rational(100), Rational(100), Rational(5), Rational(5), Rational(5)},
        2);
    CHECK(greedy_upper_bound(instance).objective == Rational(100));
    for (int workers : {1, 2, 4}) {
        SolverConfig config = kBranchAndBound;
        config.parallel_workers = workers;
        Solution solution = solve_weighted_edge(instance, config);
        CHECK(solution.objective == Rational(5));
        CHECK(solution.selected == std::vector<int>{1, 2});
    }
}

TEST_CASE("budget exhaustion also surfaces under parallel workers") {
    const int n = 12;
    std::vector<Rational> weights;
    SplitMix64 rng(39);
    for (int i = 0; i < n * (n - 1) / 2; ++i) weights.emplace_back(rng.next_int(1, 99));
    WeightedEdgeInstance instance(n, weights, 6);
    SolverConfig config = kBranchAndBound;
    config.parallel_workers = 4;
    config.node_budget = 5;
    CHECK_THROWS_AS(solve_weighted_edge(instance, config), BudgetError);
}

TEST_CASE("solve_weighted_edge with greedy algorithm reports a heuristic") {
    SplitMix64 rng(34);
    WeightedEdgeInstance instance = random_weighted_instance(rng, 9);
    Solution solution = solve_weighted_edge(instance, kGreedy);
    CHECK_FALSE(solution.proven_optimal);
    CHECK(solution == greedy_upper_bound(instance));
}

TEST_CASE("node budget exhaustion carries the incumbent") {
    const int n = 10;
    std::vector<Rational> weights;
    SplitMix64 rng(35);
    for (int i = 0; i < n * (n - 1) / 2; ++i) weights.emplace_back(rng.next_int(1, 50));
    WeightedEdgeInstance instance(n, weights, 5);

    SolverConfig tight = kExhaustive;
    tight.node_budget = 10;
    CHECK_THROWS_AS(solve_weighted_edge(instance, tight), BudgetError);
    try {
        solve_weighted_edge(instance, tight);
    } catch (const BudgetError& error) {
        CHECK_FALSE(error.incumbent().proven_optimal);
        CHECK(error.incumbent().selected.size() == 5);
        CHECK(error.incumbent().nodes_explored == 10);
    }

    tight.algorithm = Algorithm::branch_and_bound;
    tight.node_budget = 3;
    CHECK_THROWS_AS(solve_weighted_edge(instance, tight), BudgetError);

    // a budget wide enough to finish changes nothing
    SolverConfig enough = kExhaustive;
    enough.node_budget = testing::binomial(n, 5);
    CHECK(solve_weighted_edge(instance, enough) == solve_weighted_edge(instance, kExhaustive));

    SolverConfig zero = kExhaustive;
    zero.node_budget = 0;
    CHECK_THROWS_AS(solve_weighted_edge(instance, zero), InputError);
}

TEST_CASE("bound soundness: node bounds never exceed the best completion") {
    SplitMix64 rng(36);
    for (int round = 0; round < 40; ++round) {
        const int n = 5 + static_cast<int>(rng.next_below(4));
        std::vector<Rational> weights;
        for (int i = 0; i < n * (n - 1) / 2; ++i) {
            weights.emplace_back(rng.next_int(-6, 9), rng.next_int(1, 3));
        }
        const int selection = 2 + static_cast<int>(rng.next_below(n - 2));
        WeightedEdgeInstance instance(n, weights, selection);

        // random feasible partial state: chosen ⊆ {0..v-1}, pool {v..n-1}
        const int v = 1 + static_cast<int>(rng.next_below(n - 1));
        std::vector<int> chosen;
        for (int u = 0; u < v && static_cast<int>(chosen.size()) < selection; ++u) {
            if (rng.next_below(2) == 0) chosen.push_back(u);
        }
        const int missing = selection - static_cast<int>(chosen.size());
        if (missing > n - v) continue;  // infeasible state, nothing to bound

        const Rational bound = detail::completion_lower_bound(instance, chosen, v);

        // exhaustively complete the state and take the true minimum
        Rational best;
        bool have = false;
        std::vector<int> extension(missing);
        if (missing == 0) {
            Rational total(0);
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                for (std::size_t j = i + 1; j < chosen.size(); ++j) {
                    total += instance.weight(chosen[i], chosen[j]);
                }
            }
            best = total;
            have = true;
        } else {
            for (int i = 0; i < missing; ++i) extension[i] = v + i;
            do {
                std::vector<int> full = chosen;
                full.insert(full.end(), extension.begin(), extension.end());
                Rational total(0);
                for (std::size_t i = 0; i < full.size(); ++i) {
                    for (std::size_t j = i + 1; j < full.size(); ++j) {
                        total += instance.weight(full[i], full[j]);
                    }
                }
                if (!have || total < best) {
                    best = total;
                    have = true;
                }
                // shift the extension into pool coordinates and advance
            } while ([&] {
                std::vector<int> offset(extension.size());
                for (std::size_t i = 0; i < extension.size(); ++i) offset[i] = extension[i] - v;
                const bool more = testing::next_combination(offset, n - v);
                for (std::size_t i = 0; i < extension.size(); ++i) extension[i] = offset[i] + v;
                return more;
            }());
        }
        REQUIRE(have);
        CHECK(bound <= best);
    }
}

TEST_CASE("cluster solving equals weighted solving of the materialization") {
    // three far-apart sites: any pair takes the outside value
    PointSet far(2, 1, {{0, 0}, {10, 0}, {0, 10}});
    ClusterMinInstance spread(far, 2, RadialPotential::step(1));
    Solution solution = solve_cluster_min(spread, kBranchAndBound);
    CHECK(solution.objective == Rational(1));

    // unit-side square: a diagonal pair is strictly beyond the threshold
    PointSet square(2, 1, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    ClusterMinInstance corners(square, 2, RadialPotential::step(1));
    Solution corner_solution = solve_cluster_min(corners, kExhaustive);
    CHECK(corner_solution.objective == Rational(1));
    CHECK(corner_solution.selected == std::vector<int>{0, 3});

    SplitMix64 rng(37);
    for (int round = 0; round < 20; ++round) {
        UdgInstance udg = random_udg_instance(rng, 6, 3);
        ClusterMinInstance cluster = udg_to_cluster(udg).first;
        Solution via_cluster = solve_cluster_min(cluster, kExhaustive);
        auto [oracle_value, oracle_subset] = testing::enumerate_cluster_minimum(cluster);
        CHECK(via_cluster.objective == oracle_value);
        CHECK(via_cluster.selected == oracle_subset);
        CHECK(via_cluster ==
              solve_weighted_edge(cluster_to_weighted_edge(cluster), kExhaustive));
    }
}

TEST_CASE("native independent-set search") {
    UdgInstance spread(PointSet(2, 1, {{0, 0}, {5, 0}, {0, 5}, {9, 9}}), 1, 3);
    Solution yes = solve_udg_independent_set(spread, kBranchAndBound);
    CHECK(yes.objective == Rational(0));
    CHECK(yes.proven_optimal);
    CHECK(yes.selected == std::vector<int>{0, 1, 2});

    // mutually conflicting triple: any pair collides
    UdgInstance crowded(PointSet(2, 1, {{0, 0}, {1, 0}, {0, 1}}), 2, 2);
    for (const SolverConfig& config : {kExhaustive, kBranchAndBound}) {
        Solution no = solve_udg_independent_set(crowded, config);
        CHECK(no.objective == Rational(1));
        CHECK(no.proven_optimal);
    }

    Solution heuristic = solve_udg_independent_set(crowded, kGreedy);
    CHECK_FALSE(heuristic.proven_optimal);
    CHECK(heuristic.objective >= Rational(1));

    SplitMix64 rng(38);
    for (int round = 0; round < 20; ++round) {
        UdgInstance instance = random_udg_instance(rng, 10, 4);
        Solution exhaustive = solve_udg_independent_set(instance, kExhaustive);
        Solution bnb = solve_udg_independent_set(instance, kBranchAndBound);
        CHECK(exhaustive.objective == bnb.objective);
        CHECK(exhaustive.selected == bnb.selected);
        CHECK(exhaustive.nodes_explored == testing::binomial(10, 4));
        CHECK((exhaustive.objective == Rational(0)) == testing::has_independent_set(instance));
    }
}

TEST_CASE("energy: line example, empty sum, and the outside-branch count") {
    // geometric sites 0, 0.5, 5 on a line at resolution 2, step at distance 1
    PointSet line(2, 2, {{0, 0}, {1, 0}, {10, 0}, {30, 0}});
    ClusterMinInstance instance(line, 3, RadialPotential::step(4));
    EnergyResult result = energy(instance, {0, 1, 2});
    CHECK(result.value == Rational(4));  // 2 + 1 + 1
    CHECK(result.pair_evaluations == 3);

    ClusterMinInstance single(line, 1, RadialPotential::step(4));
    EnergyResult empty = energy(single, {2});
    CHECK(empty.value == Rational(0));
    CHECK(empty.pair_evaluations == 0);

    // four selected sites, all pairs in the outside branch: 4*3/2 = 6
    PointSet spread(2, 1, {{0, 0}, {10, 0}, {0, 10}, {10, 10}, {40, 40}});
    ClusterMinInstance far(spread, 4, RadialPotential::step(1));
    EnergyResult outside = energy(far, {0, 1, 2, 3});
    CHECK(outside.value == Rational(6));
    CHECK(outside.pair_evaluations == 6);
}

TEST_CASE("energy input validation and permutation invariance") {
    PointSet sites(2, 1, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {9, 9}});
    ClusterMinInstance instance(sites, 3, RadialPotential::step(2));
    CHECK_THROWS_AS(energy(instance, {0, 1, 1}), InputError);
    CHECK_THROWS_AS(energy(instance, {0, 1, 5}), InputError);
    CHECK_THROWS_AS(energy(instance, {0, 1, -1}), InputError);
    CHECK_THROWS_AS(energy(instance, {0, 1}), InputError);  // wrong cardinality

    std::vector<int> selection{0, 2, 3};
    const Rational reference = energy(instance, selection).value;
    std::sort(selection.begin(), selection.end());
    do {
        CHECK(energy(instance, selection).value == reference);
    } while (std::next_permutation(selection.begin(), selection.end()));
}

TEST_CASE("energy performs exactly N(N-1)/2 potential lookups") {
    std::vector<std::vector<std::int64_t>> points;
    for (int i = 0; i < 60; ++i) points.push_back({i % 8, i / 8});
    ClusterMinInstance instance(PointSet(2, 1, points), 50, RadialPotential::step(1));
    std::vector<int> selection(50);
    for (int i = 0; i < 50; ++i) selection[i] = i;
    CHECK(energy(instance, selection).pair_evaluations == 1225);
}

}  // TEST_SUITE
