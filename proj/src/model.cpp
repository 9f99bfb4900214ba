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

#include "clumin/model.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "clumin/errors.hpp"

namespace clumin {

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

void check_point_index(const PointSet& points, int i, const char* what) {
    if (i < 0 || i >= points.size()) {
        throw InputError(std::string(what) + " index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(points.size()) + ")");
    }
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw InputError("negative vertex count");
    for (auto& [i, j] : edges_) {
        if (i == j) throw InputError("self-loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= vertex_count_) {
            throw InputError("edge " + pair_str(i, j) + " references a vertex >= " +
                             std::to_string(vertex_count_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw InputError("duplicate edge " + pair_str(dup->first, dup->second));
    }
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

PointSet::PointSet(int dimension, std::int64_t resolution,
                   std::vector<std::vector<std::int64_t>> points)
    : dimension_(dimension), resolution_(resolution) {
    if (dimension_ != 2 && dimension_ != 3) {
        throw InputError("dimension must be 2 or 3, got " + std::to_string(dimension_));
    }
    if (resolution_ <= 0) throw InputError("resolution must be positive");
    coords_.reserve(points.size() * dimension_);
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (static_cast<int>(points[p].size()) != dimension_) {
            throw InputError("point " + std::to_string(p) + " has " +
                             std::to_string(points[p].size()) + " coordinates, expected " +
                             std::to_string(dimension_));
        }
        coords_.insert(coords_.end(), points[p].begin(), points[p].end());
    }
}

std::vector<std::int64_t> PointSet::point(int index) const {
    std::vector<std::int64_t> out(dimension_);
    for (int k = 0; k < dimension_; ++k) out[k] = coord(index, k);
    return out;
}

std::vector<std::vector<std::int64_t>> PointSet::points() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(size());
    for (int i = 0; i < size(); ++i) out.push_back(point(i));
    return out;
}

PointSet PointSet::embedded_3d() const {
    if (dimension_ == 3) return *this;
    std::vector<std::vector<std::int64_t>> padded;
    padded.reserve(size());
    for (int i = 0; i < size(); ++i) {
        padded.push_back({coord(i, 0), coord(i, 1), 0});
    }
    return PointSet(3, resolution_, std::move(padded));
}

RadialPotential::RadialPotential(std::vector<std::int64_t> breakpoints,
                                 std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breakpoints_.size() + 1) {
        throw InputError("potential needs exactly one more value than breakpoints");
    }
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
        if (breakpoints_[k] < 0) throw InputError("negative potential breakpoint");
        if (k > 0 && breakpoints_[k] <= breakpoints_[k - 1]) {
            throw InputError("potential breakpoints must be strictly increasing");
        }
    }
}

RadialPotential RadialPotential::step(std::int64_t threshold_sq, Rational inside,
                                      Rational outside) {
    return RadialPotential({threshold_sq}, {std::move(inside), std::move(outside)});
}

WeightedEdgeInstance::WeightedEdgeInstance(int vertex_count, std::vector<Rational> weights,
                                           int selection_size)
    : vertex_count_(vertex_count), selection_size_(selection_size), weights_(std::move(weights)) {
    if (vertex_count_ < 2) throw InputError("weighted-edge instance needs at least 2 vertices");
    std::size_t expected =
        static_cast<std::size_t>(vertex_count_) * (vertex_count_ - 1) / 2;
    if (weights_.size() != expected) {
        throw InputError("expected " + std::to_string(expected) + " pair weights, got " +
                         std::to_string(weights_.size()));
    }
    if (selection_size_ <= 0 || selection_size_ >= vertex_count_) {
        throw InputError("selection size " + std::to_string(selection_size_) +
                         " not in (0, " + std::to_string(vertex_count_) + ")");
    }
}

std::size_t WeightedEdgeInstance::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= vertex_count_ || i == j) {
        throw InputError("invalid vertex pair " + pair_str(i, j));
    }
    auto n = static_cast<std::size_t>(vertex_count_);
    auto ii = static_cast<std::size_t>(i);
    return ii * n - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

ClusterMinInstance::ClusterMinInstance(PointSet sites, int particle_count,
                                       RadialPotential potential)
    : sites_(std::move(sites)), particle_count_(particle_count), potential_(std::move(potential)) {
    if (particle_count_ <= 0 || particle_count_ >= sites_.size()) {
        throw InputError("particle count " + std::to_string(particle_count_) +
                         " not in (0, " + std::to_string(sites_.size()) + ")");
    }
}

UdgInstance::UdgInstance(PointSet centers, std::int64_t conflict_threshold, int target_size)
    : centers_(std::move(centers)),
      conflict_threshold_(conflict_threshold),
      target_size_(target_size) {
    if (centers_.dimension() != 2) throw InputError("disk centers must be 2-D");
    if (conflict_threshold_ <= 0) throw InputError("conflict threshold must be positive");
    if (target_size_ <= 0 || target_size_ >= centers_.size()) {
        throw InputError("target size " + std::to_string(target_size_) + " not in (0, " +
                         std::to_string(centers_.size()) + ")");
    }
}

bool UdgInstance::conflicts(int i, int j) const {
    return squared_distance(centers_, i, j) <= conflict_threshold_;
}

std::int64_t squared_distance(const PointSet& points, int i, int j) {
    check_point_index(points, i, "point");
    check_point_index(points, j, "point");
    __int128 sum = 0;
    for (int k = 0; k < points.dimension(); ++k) {
        __int128 d = static_cast<__int128>(points.coord(i, k)) - points.coord(j, k);
        sum += d * d;
    }
    if (sum > std::numeric_limits<std::int64_t>::max()) {
        throw OverflowError("squared distance exceeds 64 bits");
    }
    return static_cast<std::int64_t>(sum);
}

const Rational& potential_value(const RadialPotential& potential, std::int64_t squared_r) {
    if (squared_r < 0) throw InputError("negative squared distance");
    const auto& bp = potential.breakpoints();
    // first breakpoint >= squared_r, i.e. smallest k with squared_r <= bp[k]
    auto it = std::lower_bound(bp.begin(), bp.end(), squared_r);
    return potential.values()[static_cast<std::size_t>(it - bp.begin())];
}

Graph unit_disk_graph(const UdgInstance& instance) {
    const int n = instance.centers().size();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (instance.conflicts(i, j)) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace clumin
