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

#include "clumin/generate.hpp"

#include <cmath>

#include "clumin/errors.hpp"
#include "clumin/rng.hpp"

namespace clumin {

namespace {

int effective_count(const GeneratorSpec& spec) {
    if (spec.site_scaling_exponent) {
        const int exponent = *spec.site_scaling_exponent;
        if (exponent < 1) throw InputError("site scaling exponent must be >= 1");
        if (spec.selection_size < 1) {
            throw InputError("site scaling needs an explicit selection size");
        }
        if (spec.scaling_density <= 0) throw InputError("scaling density must be positive");
        const double scaled =
            spec.scaling_density * std::pow(static_cast<double>(spec.selection_size), exponent);
        const int count = static_cast<int>(std::ceil(scaled));
        if (count <= spec.selection_size) {
            throw InputError("site scaling yields only " + std::to_string(count) +
                             " sites for selection size " + std::to_string(spec.selection_size));
        }
        return count;
    }
    return spec.count;
}

int effective_selection(const GeneratorSpec& spec, int count) {
    const int selection = spec.selection_size > 0 ? spec.selection_size
                                                  : std::max(1, count / 3);
    if (selection <= 0 || selection >= count) {
        throw InputError("selection size " + std::to_string(selection) + " not in (0, " +
                         std::to_string(count) + ")");
    }
    return selection;
}

std::int64_t effective_threshold(const GeneratorSpec& spec) {
    if (spec.conflict_threshold < 0) throw InputError("conflict threshold must be positive");
    return spec.conflict_threshold > 0 ? spec.conflict_threshold
                                       : spec.resolution * spec.resolution;
}

UdgInstance generate_random_points(const GeneratorSpec& spec) {
    const int count = effective_count(spec);
    if (count < 2) throw InputError("random_points needs at least 2 points");
    const int selection = effective_selection(spec, count);
    const std::int64_t box_units =
        spec.box_extent > 0
            ? spec.box_extent
            : static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(count))));
    const std::int64_t box = box_units * spec.resolution;

    SplitMix64 rng(spec.seed);
    std::vector<std::vector<std::int64_t>> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        points.push_back({rng.next_int(0, box), rng.next_int(0, box)});
    }
    return UdgInstance(PointSet(2, spec.resolution, std::move(points)),
                       effective_threshold(spec), selection);
}

UdgInstance generate_grid_points(const GeneratorSpec& spec) {
    int count = effective_count(spec);
    int side = spec.grid_side;
    if (side <= 0) {
        if (count < 2) throw InputError("grid_points needs a grid side or a point count");
        side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
    }
    if (count <= 0) count = side * side;
    if (count > side * side) {
        throw InputError("grid of side " + std::to_string(side) + " too small for " +
                         std::to_string(count) + " points");
    }
    if (count < 2) throw InputError("grid_points needs at least 2 points");
    const std::int64_t spacing =
        spec.grid_spacing > 0 ? spec.grid_spacing : spec.resolution;
    const int selection = effective_selection(spec, count);

    std::vector<std::vector<std::int64_t>> points;
    points.reserve(count);
    for (int index = 0; index < count; ++index) {
        const std::int64_t x = index % side;
        const std::int64_t y = index / side;
        points.push_back({x * spacing, y * spacing});
    }
    return UdgInstance(PointSet(2, spec.resolution, std::move(points)),
                       effective_threshold(spec), selection);
}

Graph generate_random_graph(const GeneratorSpec& spec) {
    const int count = effective_count(spec);
    if (count < 1) throw InputError("random_graph needs at least 1 vertex");
    if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0) {
        throw InputError("edge probability must be within [0, 1]");
    }
    SplitMix64 rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (rng.next_double() < spec.edge_probability) edges.emplace_back(i, j);
        }
    }
    return Graph(count, std::move(edges));
}

}  // namespace

const char* generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::random_points: return "random_points";
        case GeneratorKind::grid_points: return "grid_points";
        case GeneratorKind::random_graph: return "random_graph";
    }
    return "unknown";
}

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "random_points") return GeneratorKind::random_points;
    if (name == "grid_points") return GeneratorKind::grid_points;
    if (name == "random_graph") return GeneratorKind::random_graph;
    throw InputError("unknown generator kind '" + name + "'");
}

GeneratedInstance generate(const GeneratorSpec& spec) {
    if (spec.resolution <= 0) throw InputError("resolution must be positive");
    switch (spec.kind) {
        case GeneratorKind::random_points: return generate_random_points(spec);
        case GeneratorKind::grid_points: return generate_grid_points(spec);
        case GeneratorKind::random_graph: return generate_random_graph(spec);
    }
    throw InputError("unknown generator kind");
}

}  // namespace clumin
