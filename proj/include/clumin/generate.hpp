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
#include <string>
#include <variant>

#include "clumin/model.hpp"

namespace clumin {

enum class GeneratorKind { random_points, grid_points, random_graph };

const char* generator_kind_name(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& name);

/// Everything a generated instance depends on. Identical spec, identical
/// instance, bit for bit.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::random_points;
    /// Sites or vertices. Ignored when site_scaling_exponent is set.
    int count = 0;
    /// Target/selection size K for point instances; 0 picks max(1, count/3).
    int selection_size = 0;
    std::int64_t resolution = 1;
    /// Box side in geometric units; 0 scales with sqrt(count) to keep the
    /// expected disk degree roughly constant.
    std::int64_t box_extent = 0;
    /// grid_points: side length; 0 derives the smallest square that fits.
    int grid_side = 0;
    /// grid_points: lattice spacing in scaled units; 0 means one geometric unit.
    std::int64_t grid_spacing = 0;
    /// random_graph: independent edge probability.
    double edge_probability = 0.5;
    /// Squared center distance at or below which disks conflict; 0 means
    /// geometric distance 1 (resolution squared).
    std::int64_t conflict_threshold = 0;
    std::uint64_t seed = 0;
    /// When set, the site count is ceil(scaling_density * K^p) so spatial
    /// resolution stays comparable across selection sizes.
    std::optional<int> site_scaling_exponent;
    double scaling_density = 2.0;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

using GeneratedInstance = std::variant<Graph, UdgInstance>;

/// Deterministic in the spec; throws InputError on infeasible parameters
/// (grid too small for the requested count, and the like).
GeneratedInstance generate(const GeneratorSpec& spec);

}  // namespace clumin
