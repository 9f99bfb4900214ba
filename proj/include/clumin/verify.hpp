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
#include <variant>
#include <vector>

#include "clumin/model.hpp"
#include "clumin/solvers.hpp"

namespace clumin {

using Instance = std::variant<WeightedEdgeInstance, ClusterMinInstance, UdgInstance>;

struct HarnessDisagreement {
    std::uint64_t trial = 0;
    std::uint64_t trial_seed = 0;
    std::string instance_summary;
    bool oracle_yes = false;
    bool reduction_yes = false;

    friend bool operator==(const HarnessDisagreement&, const HarnessDisagreement&) = default;
};

/// Outcome of an iff-theorem harness run. A correct implementation yields
/// zero disagreements; budget-exhausted trials are reported separately as
/// inconclusive, never counted as agreement.
struct HarnessReport {
    std::uint64_t trials = 0;
    std::uint64_t agreements = 0;
    std::vector<HarnessDisagreement> disagreements;
    std::uint64_t inconclusive = 0;
    double elapsed_seconds = 0.0;

    bool clean() const { return disagreements.empty() && inconclusive == 0; }

    friend bool operator==(const HarnessReport&, const HarnessReport&) = default;
};

/// True iff the selection has the required size and its re-evaluated
/// objective equals the solution's objective exactly.
bool check_solution(const Instance& instance, const Solution& solution);

/// Per trial: a seeded random disk arrangement, answered for every target
/// size by (a) the native exhaustive independent-set search and (b)
/// reduce-to-cluster, solve exactly, read the certificate back. The two
/// paths share nothing beyond the model types.
HarnessReport run_iff_harness_udg(std::uint64_t trials, int max_centers, std::uint64_t seed,
                                  const SolverConfig& reduction_config = {});

/// Same scheme for the clique reduction, with seeded Erdos-Renyi graphs and
/// an exhaustive clique oracle against the weighted-edge threshold test.
HarnessReport run_iff_harness_clique(std::uint64_t trials, int max_vertices, std::uint64_t seed,
                                     const SolverConfig& reduction_config = {});

/// The step-potential accounting identity: for any selection of size K,
/// energy under the reduced instance minus K(K-1)/2 equals the number of
/// conflicting selected pairs.
bool excess_equals_conflicts(const UdgInstance& instance, const std::vector<int>& selection);

}  // namespace clumin
