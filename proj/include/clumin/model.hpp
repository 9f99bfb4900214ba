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
#include <utility>
#include <vector>

#include "clumin/rational.hpp"

namespace clumin {

/// Undirected simple graph over integer vertex ids 0..n-1.
///
/// Edges are stored as sorted (i, j) pairs with i < j; construction rejects
/// self-loops, duplicates and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int i, int j) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// Finite set of 2-D or 3-D points with exact integer-scaled coordinates.
///
/// Coordinates are integers in units of 1/resolution of a geometric unit, so
/// every squared distance is an exact integer and the geometric squared
/// distance is that integer divided by resolution^2. Duplicate points are
/// permitted (two coincident sites are simply in conflict).
class PointSet {
public:
    PointSet() = default;
    PointSet(int dimension, std::int64_t resolution, std::vector<std::vector<std::int64_t>> points);

    int dimension() const { return dimension_; }
    std::int64_t resolution() const { return resolution_; }
    int size() const { return static_cast<int>(coords_.size() / dimension_); }

    std::int64_t coord(int point, int axis) const {
        return coords_[static_cast<std::size_t>(point) * dimension_ + axis];
    }
    std::vector<std::int64_t> point(int index) const;
    std::vector<std::vector<std::int64_t>> points() const;

    /// Same points re-embedded in 3-D by zero-padding the z axis.
    PointSet embedded_3d() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    int dimension_ = 2;
    std::int64_t resolution_ = 1;
    std::vector<std::int64_t> coords_;  // row-major, dimension_ per point
};

/// Piecewise-constant function of squared distance.
///
/// value(r2) = values[k] for the smallest k with r2 <= breakpoints[k], and
/// values.back() beyond the last breakpoint. Intervals are closed on the
/// right: a squared distance exactly at a breakpoint takes the inside value.
class RadialPotential {
public:
    RadialPotential() : values_{Rational(0)} {}
    RadialPotential(std::vector<std::int64_t> breakpoints, std::vector<Rational> values);

    const std::vector<std::int64_t>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    /// The proof gadget: inside value at or below the threshold, outside
    /// value beyond it.
    static RadialPotential step(std::int64_t threshold_sq, Rational inside = Rational(2),
                                Rational outside = Rational(1));

    friend bool operator==(const RadialPotential&, const RadialPotential&) = default;

private:
    std::vector<std::int64_t> breakpoints_;  // strictly increasing, >= 0
    std::vector<Rational> values_;           // breakpoints_.size() + 1 entries
};

/// Choose selection_size vertices of a complete edge-weighted graph so that
/// the induced edge-weight sum is minimal.
class WeightedEdgeInstance {
public:
    WeightedEdgeInstance() = default;
    /// weights is the upper triangle in row-major order:
    /// w(0,1), w(0,2), ..., w(0,n-1), w(1,2), ...
    WeightedEdgeInstance(int vertex_count, std::vector<Rational> weights, int selection_size);

    int vertex_count() const { return vertex_count_; }
    int selection_size() const { return selection_size_; }
    const std::vector<Rational>& weights() const { return weights_; }

    std::size_t pair_index(int i, int j) const;  // requires i != j
    const Rational& weight(int i, int j) const { return weights_[pair_index(i, j)]; }

    friend bool operator==(const WeightedEdgeInstance&, const WeightedEdgeInstance&) = default;

private:
    int vertex_count_ = 0;
    int selection_size_ = 0;
    std::vector<Rational> weights_;
};

/// Choose particle_count sites from a finite point set so that the pairwise
/// sum of a radial potential of inter-site distances is minimal.
class ClusterMinInstance {
public:
    ClusterMinInstance() = default;
    ClusterMinInstance(PointSet sites, int particle_count, RadialPotential potential);

    const PointSet& sites() const { return sites_; }
    int particle_count() const { return particle_count_; }
    const RadialPotential& potential() const { return potential_; }

    friend bool operator==(const ClusterMinInstance&, const ClusterMinInstance&) = default;

private:
    PointSet sites_;
    int particle_count_ = 0;
    RadialPotential potential_;
};

/// Does a set of equal disks in the plane contain target_size mutually
/// non-overlapping disks? Two disks conflict iff the squared distance of
/// their centers is <= conflict_threshold (closed condition, so exact
/// contact counts as overlap).
class UdgInstance {
public:
    UdgInstance() = default;
    UdgInstance(PointSet centers, std::int64_t conflict_threshold, int target_size);

    const PointSet& centers() const { return centers_; }
    std::int64_t conflict_threshold() const { return conflict_threshold_; }
    int target_size() const { return target_size_; }

    bool conflicts(int i, int j) const;

    friend bool operator==(const UdgInstance&, const UdgInstance&) = default;

private:
    PointSet centers_;
    std::int64_t conflict_threshold_ = 1;
    int target_size_ = 0;
};

/// A selected index subset with its exact objective value.
struct Solution {
    std::vector<int> selected;  // sorted, distinct
    Rational objective;
    bool proven_optimal = false;
    std::uint64_t pair_evaluations = 0;  // weight/potential lookups performed
    std::uint64_t nodes_explored = 0;    // search nodes (subsets, for exhaustive)

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Exact integer squared distance between points i and j, in scaled units.
std::int64_t squared_distance(const PointSet& points, int i, int j);

/// Piecewise lookup under the closed-right interval rule.
const Rational& potential_value(const RadialPotential& potential, std::int64_t squared_r);

/// Intersection graph of the instance: one vertex per center, an edge
/// wherever two disks conflict.
Graph unit_disk_graph(const UdgInstance& instance);

}  // namespace clumin
