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
#include <utility>
#include <vector>

#include "clumin/model.hpp"

namespace clumin {

enum class ProblemKind { clique, weighted_edge, udg_is, cluster_min };

const char* problem_kind_name(ProblemKind kind);

/// Records what a transformation produced: the decision certificate value
/// (the energy/weight an optimal solution attains exactly when the source
/// answer is YES) and how many elementary construction steps it took. The
/// step counter is how the polynomial-time claim is checked empirically.
struct ReductionReceipt {
    ProblemKind source_kind;
    ProblemKind target_kind;
    Rational decision_threshold;          // N(N-1)/2 for both hardness reductions
    std::uint64_t construction_steps = 0; // bounded by a quadratic in the source size

    friend bool operator==(const ReductionReceipt&, const ReductionReceipt&) = default;
};

/// CLIQUE -> WEIGHTED EDGE. Complete instance on the same vertices with
/// weight 1 where the source graph has an edge and 2 otherwise; an optimal
/// selection of clique_size vertices has total weight
/// clique_size*(clique_size-1)/2 iff the graph contains a clique of that
/// size.
std::pair<WeightedEdgeInstance, ReductionReceipt> clique_to_weighted_edge(const Graph& graph,
                                                                          int clique_size);

/// UDG INDEPENDENT SET -> CLUSTER MINIMIZATION. Sites coincide with the disk
/// centers (zero-padded to 3-D); the potential is the step gadget with the
/// instance's conflict threshold, taking 2 at or below it and 1 beyond. The
/// cluster optimum equals K(K-1)/2 iff an independent set of size K exists.
std::pair<ClusterMinInstance, ReductionReceipt> udg_to_cluster(const UdgInstance& instance);

/// Materializes pair potentials as edge weights; the optimum and the
/// tie-broken optimal subset of the produced instance coincide with the
/// source's.
WeightedEdgeInstance cluster_to_weighted_edge(const ClusterMinInstance& instance);

struct InterpretedAnswer {
    bool yes = false;
    /// The selected indices, as an independent-set certificate, on YES.
    std::optional<std::vector<int>> certificate;

    friend bool operator==(const InterpretedAnswer&, const InterpretedAnswer&) = default;
};

/// Reads a proven-optimal solution of the reduced instance back as the
/// source decision answer: YES iff the objective equals the receipt's
/// threshold. Throws ContractError on a heuristic solution, which could
/// certify YES but never NO.
InterpretedAnswer interpret_udg_answer(const Solution& solution, const ReductionReceipt& receipt);

}  // namespace clumin
