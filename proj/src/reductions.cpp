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

#include "clumin/reductions.hpp"

#include <string>

#include "clumin/errors.hpp"

namespace clumin {

namespace {

Rational pair_count(int n) {
    return Rational(static_cast<std::int64_t>(n) * (n - 1) / 2);
}

}  // namespace

const char* problem_kind_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::clique: return "clique";
        case ProblemKind::weighted_edge: return "weighted_edge";
        case ProblemKind::udg_is: return "udg_is";
        case ProblemKind::cluster_min: return "cluster_min";
    }
    return "unknown";
}

std::pair<WeightedEdgeInstance, ReductionReceipt> clique_to_weighted_edge(const Graph& graph,
                                                                          int clique_size) {
    const int n = graph.vertex_count();
    if (clique_size <= 0 || clique_size >= n) {
        throw InputError("clique size " + std::to_string(clique_size) + " not in (0, " +
                         std::to_string(n) + ")");
    }
    std::uint64_t steps = 0;
    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            weights.emplace_back(graph.has_edge(i, j) ? 1 : 2);
            ++steps;
        }
    }
    ReductionReceipt receipt{ProblemKind::clique, ProblemKind::weighted_edge,
                             pair_count(clique_size), steps};
    return {WeightedEdgeInstance(n, std::move(weights), clique_size), receipt};
}

std::pair<ClusterMinInstance, ReductionReceipt> udg_to_cluster(const UdgInstance& instance) {
    std::uint64_t steps = 0;
    std::vector<std::vector<std::int64_t>> sites;
    sites.reserve(instance.centers().size());
    for (int i = 0; i < instance.centers().size(); ++i) {
        sites.push_back({instance.centers().coord(i, 0), instance.centers().coord(i, 1), 0});
        ++steps;
    }
    PointSet plane(3, instance.centers().resolution(), std::move(sites));
    RadialPotential gadget = RadialPotential::step(instance.conflict_threshold());
    ++steps;
    ReductionReceipt receipt{ProblemKind::udg_is, ProblemKind::cluster_min,
                             pair_count(instance.target_size()), steps};
    return {ClusterMinInstance(std::move(plane), instance.target_size(), std::move(gadget)),
            receipt};
}

WeightedEdgeInstance cluster_to_weighted_edge(const ClusterMinInstance& instance) {
    const int n = instance.sites().size();
    std::vector<Rational> weights;
    weights.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            weights.push_back(
                potential_value(instance.potential(), squared_distance(instance.sites(), i, j)));
        }
    }
    return WeightedEdgeInstance(n, std::move(weights), instance.particle_count());
}

InterpretedAnswer interpret_udg_answer(const Solution& solution,
                                       const ReductionReceipt& receipt) {
    if (!solution.proven_optimal) {
        throw ContractError("cannot interpret a heuristic solution: a non-optimal objective "
                            "above the threshold does not certify NO");
    }
    if (solution.objective < receipt.decision_threshold) {
        throw InputError("objective " + solution.objective.str() +
                         " below the certificate threshold " + receipt.decision_threshold.str() +
                         "; solution does not belong to this reduction");
    }
    InterpretedAnswer answer;
    answer.yes = solution.objective == receipt.decision_threshold;
    if (answer.yes) answer.certificate = solution.selected;
    return answer;
}

}  // namespace clumin
