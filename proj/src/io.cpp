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

#include "clumin/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clumin/errors.hpp"
#include "clumin/rng.hpp"

namespace clumin {

namespace {

using nlohmann::json;

// --- field access with diagnostics ---

const json& require(const json& j, const char* field, const char* context) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw ParseError(std::string(context) + ": missing field '" + field + "'");
    }
    return *it;
}

std::int64_t require_int(const json& j, const char* field, const char* context) {
    const json& value = require(j, field, context);
    if (!value.is_number_integer()) {
        throw ParseError(std::string(context) + ": field '" + field + "' must be an integer");
    }
    return value.get<std::int64_t>();
}

std::uint64_t require_uint(const json& j, const char* field, const char* context) {
    const json& value = require(j, field, context);
    if (!value.is_number_unsigned() &&
        !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw ParseError(std::string(context) + ": field '" + field +
                         "' must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

// json type errors from get<>() become ParseError with the caller's context
template <typename Fn>
auto with_parse_context(const char* context, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& error) {
        throw ParseError(std::string(context) + ": " + error.what());
    }
}

std::string require_string(const json& j, const char* field, const char* context) {
    const json& value = require(j, field, context);
    if (!value.is_string()) {
        throw ParseError(std::string(context) + ": field '" + field + "' must be a string");
    }
    return value.get<std::string>();
}

Rational rational_from_json(const json& value, const char* context) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (!value.is_string()) {
        throw ParseError(std::string(context) + ": rationals must be \"p/q\" strings");
    }
    return Rational::parse(value.get<std::string>());
}

json points_to_json(const PointSet& points) {
    json list = json::array();
    for (int i = 0; i < points.size(); ++i) list.push_back(points.point(i));
    return list;
}

PointSet points_from_json(const json& j, const char* context) {
    const int dimension = static_cast<int>(require_int(j, "dimension", context));
    const std::int64_t resolution = require_int(j, "resolution", context);
    const json& list = require(j, "points", context);
    if (!list.is_array()) throw ParseError(std::string(context) + ": 'points' must be an array");
    std::vector<std::vector<std::int64_t>> points;
    points.reserve(list.size());
    for (const json& entry : list) {
        if (!entry.is_array()) {
            throw ParseError(std::string(context) + ": each point must be a coordinate array");
        }
        points.push_back(entry.get<std::vector<std::int64_t>>());
    }
    try {
        return PointSet(dimension, resolution, std::move(points));
    } catch (const InputError& error) {
        throw ParseError(std::string(context) + ": " + error.what());
    }
}

json potential_to_json(const RadialPotential& potential) {
    json values = json::array();
    for (const Rational& value : potential.values()) values.push_back(value.str());
    return json{{"breakpoints", potential.breakpoints()}, {"values", values}};
}

RadialPotential potential_from_json(const json& j, const char* context) {
    const json& breakpoints = require(j, "breakpoints", context);
    const json& values = require(j, "values", context);
    if (!breakpoints.is_array() || !values.is_array()) {
        throw ParseError(std::string(context) + ": potential needs breakpoint and value arrays");
    }
    std::vector<Rational> parsed;
    parsed.reserve(values.size());
    for (const json& value : values) parsed.push_back(rational_from_json(value, context));
    try {
        return RadialPotential(breakpoints.get<std::vector<std::int64_t>>(), std::move(parsed));
    } catch (const InputError& error) {
        throw ParseError(std::string(context) + ": " + error.what());
    }
}

// --- per-kind instance codecs ---

json graph_to_json(const Graph& graph) {
    json edges = json::array();
    for (const auto& [i, j] : graph.edges()) edges.push_back(json::array({i, j}));
    return json{{"kind", "graph"}, {"vertex_count", graph.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    constexpr const char* context = "graph";
    const int n = static_cast<int>(require_int(j, "vertex_count", context));
    const json& list = require(j, "edges", context);
    if (!list.is_array()) throw ParseError("graph: 'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(list.size());
    for (const json& entry : list) {
        if (!entry.is_array() || entry.size() != 2) {
            throw ParseError("graph: each edge must be a pair [i, j]");
        }
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InputError& error) {
        throw ParseError(std::string("graph: ") + error.what());
    }
}

json weighted_to_json(const WeightedEdgeInstance& instance) {
    json weights = json::array();
    for (const Rational& w : instance.weights()) weights.push_back(w.str());
    return json{{"kind", "weighted_edge"},
                {"vertex_count", instance.vertex_count()},
                {"selection_size", instance.selection_size()},
                {"weights", weights}};
}

WeightedEdgeInstance weighted_from_json(const json& j) {
    constexpr const char* context = "weighted_edge";
    const int n = static_cast<int>(require_int(j, "vertex_count", context));
    const int selection = static_cast<int>(require_int(j, "selection_size", context));
    const json& list = require(j, "weights", context);
    if (!list.is_array()) throw ParseError("weighted_edge: 'weights' must be an array");

    std::vector<Rational> weights;
    if (!list.empty() && list.front().is_array()) {
        // full n x n matrix: validate symmetry and an all-zero diagonal
        if (static_cast<int>(list.size()) != n) {
            throw ParseError("weighted_edge: weight matrix must have vertex_count rows");
        }
        std::vector<std::vector<Rational>> matrix(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(list[i].size()) != n) {
                throw ParseError("weighted_edge: weight matrix row " + std::to_string(i) +
                                 " must have vertex_count entries");
            }
            for (const json& cell : list[i]) matrix[i].push_back(rational_from_json(cell, context));
        }
        for (int i = 0; i < n; ++i) {
            if (!matrix[i][i].is_zero()) {
                throw ParseError("weighted_edge: nonzero diagonal weight at (" +
                                 std::to_string(i) + ", " + std::to_string(i) + ")");
            }
            for (int k = i + 1; k < n; ++k) {
                if (matrix[i][k] != matrix[k][i]) {
                    throw ParseError("weighted_edge: asymmetric weight at (" + std::to_string(i) +
                                     ", " + std::to_string(k) + ")");
                }
                weights.push_back(matrix[i][k]);
            }
        }
    } else {
        weights.reserve(list.size());
        for (const json& cell : list) weights.push_back(rational_from_json(cell, context));
    }
    try {
        return WeightedEdgeInstance(n, std::move(weights), selection);
    } catch (const InputError& error) {
        throw ParseError(std::string("weighted_edge: ") + error.what());
    }
}

json cluster_to_json(const ClusterMinInstance& instance) {
    return json{{"kind", "cluster_min"},
                {"dimension", instance.sites().dimension()},
                {"resolution", instance.sites().resolution()},
                {"points", points_to_json(instance.sites())},
                {"selection_size", instance.particle_count()},
                {"potential", potential_to_json(instance.potential())}};
}

ClusterMinInstance cluster_from_json(const json& j) {
    constexpr const char* context = "cluster_min";
    PointSet sites = points_from_json(j, context);
    const int particles = static_cast<int>(require_int(j, "selection_size", context));
    RadialPotential potential = potential_from_json(require(j, "potential", context), context);
    try {
        return ClusterMinInstance(std::move(sites), particles, std::move(potential));
    } catch (const InputError& error) {
        throw ParseError(std::string("cluster_min: ") + error.what());
    }
}

json udg_to_json(const UdgInstance& instance) {
    return json{{"kind", "udg_is"},
                {"dimension", 2},
                {"resolution", instance.centers().resolution()},
                {"points", points_to_json(instance.centers())},
                {"conflict_threshold", instance.conflict_threshold()},
                {"target_size", instance.target_size()}};
}

UdgInstance udg_from_json(const json& j) {
    constexpr const char* context = "udg_is";
    PointSet centers = points_from_json(j, context);
    const std::int64_t threshold = require_int(j, "conflict_threshold", context);
    const int target = static_cast<int>(require_int(j, "target_size", context));
    try {
        return UdgInstance(std::move(centers), threshold, target);
    } catch (const InputError& error) {
        throw ParseError(std::string("udg_is: ") + error.what());
    }
}

json instance_to_json_value(const AnyInstance& instance) {
    return std::visit(
        [](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Graph>) return graph_to_json(value);
            if constexpr (std::is_same_v<T, WeightedEdgeInstance>) return weighted_to_json(value);
            if constexpr (std::is_same_v<T, ClusterMinInstance>) return cluster_to_json(value);
            if constexpr (std::is_same_v<T, UdgInstance>) return udg_to_json(value);
        },
        instance);
}

json parse_document(const std::string& text, const char* context) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& error) {
        throw ParseError(std::string(context) + ": " + error.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ProblemKind problem_kind_from_name(const std::string& name) {
    if (name == "clique") return ProblemKind::clique;
    if (name == "weighted_edge") return ProblemKind::weighted_edge;
    if (name == "udg_is") return ProblemKind::udg_is;
    if (name == "cluster_min") return ProblemKind::cluster_min;
    throw ParseError("unknown problem kind '" + name + "'");
}

json generator_spec_to_json(const GeneratorSpec& spec) {
    json j{{"prng", SplitMix64::kName},
           {"kind", generator_kind_name(spec.kind)},
           {"count", spec.count},
           {"selection_size", spec.selection_size},
           {"resolution", spec.resolution},
           {"box_extent", spec.box_extent},
           {"grid_side", spec.grid_side},
           {"grid_spacing", spec.grid_spacing},
           {"edge_probability", spec.edge_probability},
           {"conflict_threshold", spec.conflict_threshold},
           {"seed", spec.seed},
           {"scaling_density", spec.scaling_density}};
    if (spec.site_scaling_exponent) j["site_scaling_exponent"] = *spec.site_scaling_exponent;
    return j;
}

}  // namespace

const char* instance_kind_name(const AnyInstance& instance) {
    return std::visit(
        [](const auto& value) -> const char* {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Graph>) return "graph";
            if constexpr (std::is_same_v<T, WeightedEdgeInstance>) return "weighted_edge";
            if constexpr (std::is_same_v<T, ClusterMinInstance>) return "cluster_min";
            if constexpr (std::is_same_v<T, UdgInstance>) return "udg_is";
        },
        instance);
}

std::string instance_to_json(const AnyInstance& instance) {
    return dump(instance_to_json_value(instance));
}

AnyInstance instance_from_json(const std::string& text) {
    const json j = parse_document(text, "instance");
    const std::string kind = require_string(j, "kind", "instance");
    return with_parse_context("instance", [&]() -> AnyInstance {
        if (kind == "graph") return graph_from_json(j);
        if (kind == "weighted_edge") return weighted_from_json(j);
        if (kind == "cluster_min") return cluster_from_json(j);
        if (kind == "udg_is") return udg_from_json(j);
        throw ParseError("instance: unknown kind '" + kind + "'");
    });
}

std::string solution_to_json(const Solution& solution) {
    return dump(json{{"kind", "solution"},
                     {"selected", solution.selected},
                     {"objective", solution.objective.str()},
                     {"proven_optimal", solution.proven_optimal},
                     {"pair_evaluations", solution.pair_evaluations},
                     {"nodes_explored", solution.nodes_explored}});
}

Solution solution_from_json(const std::string& text) {
    constexpr const char* context = "solution";
    const json j = parse_document(text, context);
    return with_parse_context(context, [&] {
        Solution solution;
        solution.selected = require(j, "selected", context).get<std::vector<int>>();
        solution.objective = rational_from_json(require(j, "objective", context), context);
        solution.proven_optimal = require(j, "proven_optimal", context).get<bool>();
        solution.pair_evaluations = require_uint(j, "pair_evaluations", context);
        solution.nodes_explored = require_uint(j, "nodes_explored", context);
        return solution;
    });
}

std::string receipt_to_json(const ReductionReceipt& receipt) {
    return dump(json{{"kind", "reduction_receipt"},
                     {"source_kind", problem_kind_name(receipt.source_kind)},
                     {"target_kind", problem_kind_name(receipt.target_kind)},
                     {"decision_threshold", receipt.decision_threshold.str()},
                     {"construction_steps", receipt.construction_steps}});
}

ReductionReceipt receipt_from_json(const std::string& text) {
    constexpr const char* context = "reduction_receipt";
    const json j = parse_document(text, context);
    return with_parse_context(context, [&] {
        return ReductionReceipt{
            problem_kind_from_name(require_string(j, "source_kind", context)),
            problem_kind_from_name(require_string(j, "target_kind", context)),
            rational_from_json(require(j, "decision_threshold", context), context),
            require_uint(j, "construction_steps", context)};
    });
}

std::string harness_report_to_json(const HarnessReport& report) {
    json disagreements = json::array();
    for (const HarnessDisagreement& d : report.disagreements) {
        disagreements.push_back(json{{"trial", d.trial},
                                     {"trial_seed", d.trial_seed},
                                     {"instance", d.instance_summary},
                                     {"oracle_yes", d.oracle_yes},
                                     {"reduction_yes", d.reduction_yes}});
    }
    return dump(json{{"kind", "harness_report"},
                     {"trials", report.trials},
                     {"agreements", report.agreements},
                     {"disagreements", disagreements},
                     {"inconclusive", report.inconclusive},
                     {"elapsed_seconds", report.elapsed_seconds}});
}

HarnessReport harness_report_from_json(const std::string& text) {
    constexpr const char* context = "harness_report";
    const json j = parse_document(text, context);
    return with_parse_context(context, [&] {
        HarnessReport report;
        report.trials = require_uint(j, "trials", context);
        report.agreements = require_uint(j, "agreements", context);
        report.inconclusive = require_uint(j, "inconclusive", context);
        report.elapsed_seconds = require(j, "elapsed_seconds", context).get<double>();
        for (const json& d : require(j, "disagreements", context)) {
            report.disagreements.push_back({require_uint(d, "trial", context),
                                            require_uint(d, "trial_seed", context),
                                            require_string(d, "instance", context),
                                            require(d, "oracle_yes", context).get<bool>(),
                                            require(d, "reduction_yes", context).get<bool>()});
        }
        return report;
    });
}

std::string bench_report_to_json(const BenchReport& report) {
    json rows = json::array();
    for (const BenchRow& row : report.rows) {
        rows.push_back(json{{"selection_size", row.selection_size},
                            {"vertex_count", row.vertex_count},
                            {"trials", row.trials},
                            {"median_wall_seconds", row.median_wall_seconds},
                            {"median_nodes", row.median_nodes},
                            {"censored", row.censored}});
    }
    return dump(json{{"kind", "bench_report"},
                     {"algorithm", report.algorithm},
                     {"seed", report.seed},
                     {"rows", rows}});
}

BenchReport bench_report_from_json(const std::string& text) {
    constexpr const char* context = "bench_report";
    const json j = parse_document(text, context);
    return with_parse_context(context, [&] {
        BenchReport report;
        report.algorithm = require_string(j, "algorithm", context);
        report.seed = require_uint(j, "seed", context);
        for (const json& r : require(j, "rows", context)) {
            BenchRow row;
            row.selection_size = static_cast<int>(require_int(r, "selection_size", context));
            row.vertex_count = static_cast<int>(require_int(r, "vertex_count", context));
            row.trials = static_cast<int>(require_int(r, "trials", context));
            row.median_wall_seconds = require(r, "median_wall_seconds", context).get<double>();
            row.median_nodes = require_uint(r, "median_nodes", context);
            row.censored = static_cast<int>(require_int(r, "censored", context));
            report.rows.push_back(row);
        }
        return report;
    });
}

std::string generated_instance_to_json(const AnyInstance& instance, const GeneratorSpec& spec) {
    json j = instance_to_json_value(instance);
    j["generator"] = generator_spec_to_json(spec);
    return dump(j);
}

void write_instance(const AnyInstance& instance, const std::filesystem::path& path) {
    write_text_file(instance_to_json(instance), path);
}

AnyInstance read_instance(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return instance_from_json(text);
    std::istringstream stream(text);
    return parse_dimacs(stream);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_number = 0;
    int vertex_count = -1;
    long declared_edges = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag)) continue;  // blank line
        const std::string at_line = " at line " + std::to_string(line_number);
        if (tag == "c") continue;
        if (tag == "p") {
            if (vertex_count >= 0) throw ParseError("dimacs: duplicate 'p' header" + at_line);
            std::string format;
            if (!(tokens >> format >> vertex_count >> declared_edges) || format != "edge" ||
                vertex_count < 0 || declared_edges < 0) {
                throw ParseError("dimacs: malformed header, expected 'p edge n m'" + at_line);
            }
            continue;
        }
        if (tag == "e") {
            if (vertex_count < 0) {
                throw ParseError("dimacs: edge before 'p edge' header" + at_line);
            }
            int i = 0, j = 0;
            if (!(tokens >> i >> j)) {
                throw ParseError("dimacs: malformed edge line, expected 'e i j'" + at_line);
            }
            if (i < 1 || j < 1 || i > vertex_count || j > vertex_count) {
                throw ParseError("dimacs: vertex out of range [1, " +
                                 std::to_string(vertex_count) + "]" + at_line);
            }
            if (i == j) throw ParseError("dimacs: self-loop" + at_line);
            edges.emplace_back(i - 1, j - 1);  // to 0-indexed
            continue;
        }
        throw ParseError("dimacs: unknown line type '" + tag + "'" + at_line);
    }
    if (vertex_count < 0) throw ParseError("dimacs: missing 'p edge' header");
    if (declared_edges != static_cast<long>(edges.size())) {
        throw ParseError("dimacs: header declares " + std::to_string(declared_edges) +
                         " edges, found " + std::to_string(edges.size()));
    }
    try {
        return Graph(vertex_count, std::move(edges));
    } catch (const InputError& error) {
        throw ParseError(std::string("dimacs: ") + error.what());
    }
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw InputError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace clumin
