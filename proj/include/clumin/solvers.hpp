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
#include <optional>
#include <stdexcept>
#include <vector>

#include "clumin/model.hpp"

namespace clumin {

enum class Algorithm { exhaustive, branch_and_bound, greedy };

const char* algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);

struct SolverConfig {
    Algorithm algorithm = Algorithm::branch_and_bound;
    /// Maximum number of decision nodes; exhaustion is an explicit error
    /// carrying the incumbent, never a silent downgrade of proven_optimal.
    std::optional<std::uint64_t> node_budget;
    int parallel_workers = 1;
};

/// Raised when the node budget runs out. Carries the best feasible solution
/// seen so far (proven_optimal = false).
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, Solution incumbent)
        : std::runtime_error(what), incumbent_(std::move(incumbent)) {}

    const Solution& incumbent() const { return incumbent_; }

private:
    Solution incumbent_;
};

/// Minimum-weight selection of selection_size vertices. Exhaustive and
/// branch-and-bound results are proven optimal, with ties broken to the
/// lexicographically smallest sorted index subset; the returned solution is
/// identical for any worker count.
Solution solve_weighted_edge(const WeightedEdgeInstance& instance, const SolverConfig& config = {});

/// Minimum-energy selection of particle_count sites. Equivalent, in both
/// subset and objective, to solving the weight materialization of the
/// instance.
Solution solve_cluster_min(const ClusterMinInstance& instance, const SolverConfig& config = {});

/// Direct combinatorial search for a target_size selection with the fewest
/// conflicting pairs; the objective is that conflict count, so the instance
/// answer is YES iff it is zero. Deliberately shares no machinery with the
/// weight-materialization route so the two can cross-check each other.
Solution solve_udg_independent_set(const UdgInstance& instance, const SolverConfig& config = {});

/// Feasible selection built by iterative cheapest-marginal-cost insertion.
/// Never below the optimum is all it promises: proven_optimal is false.
Solution greedy_upper_bound(const WeightedEdgeInstance& instance);

struct EnergyResult {
    Rational value;
    std::uint64_t pair_evaluations = 0;  // exactly N(N-1)/2
};

/// Total pairwise potential energy of the selected sites, evaluated with one
/// potential lookup per unordered pair.
EnergyResult energy(const ClusterMinInstance& instance, const std::vector<int>& selection);

namespace detail {

/// Admissible bound used at branch-and-bound nodes: the cost of the chosen
/// prefix plus the sum of the k cheapest optimistic marginal costs among the
/// remaining pool, where a vertex's marginal is its weight to the prefix
/// plus half its k-1 smallest weights to anywhere else. Exposed so tests can
/// spot-check soundness against exhaustive completion.
Rational completion_lower_bound(const WeightedEdgeInstance& instance,
                                const std::vector<int>& chosen, int next_vertex);

}  // namespace detail

}  // namespace clumin
