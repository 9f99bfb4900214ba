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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clumin/bench.hpp"
#include "clumin/errors.hpp"
#include "clumin/generate.hpp"
#include "clumin/io.hpp"
#include "clumin/model.hpp"
#include "clumin/reductions.hpp"
#include "clumin/solvers.hpp"
#include "clumin/svg.hpp"
#include "clumin/verify.hpp"

namespace {

using namespace clumin;

// exit codes: 0 success/YES, 1 valid NO, 2 usage or data error, 3 budget
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
    std::string algorithm = "branch_and_bound";
    int workers = 1;
    std::optional<std::uint64_t> node_budget;
    std::string out;
    std::string format = "text";
};

SolverConfig make_config(const CommonOptions& options) {
    SolverConfig config;
    config.algorithm = parse_algorithm(options.algorithm);
    config.parallel_workers = options.workers;
    config.node_budget = options.node_budget;
    return config;
}

void add_solver_options(CLI::App* cmd, CommonOptions& options, const char* default_algorithm) {
    options.algorithm = default_algorithm;
    cmd->add_option("--algorithm", options.algorithm, "exhaustive, branch_and_bound or greedy")
        ->capture_default_str();
    cmd->add_option("--workers", options.workers, "parallel workers")->capture_default_str();
    cmd->add_option("--node-budget", options.node_budget, "maximum decision nodes");
}

void add_output_options(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--out", options.out, "write the result to this file");
    cmd->add_option("--format", options.format, "stdout format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

void emit(const std::string& json_text, const std::string& text, const CommonOptions& options) {
    if (!options.out.empty()) write_text_file(json_text, options.out);
    std::cout << (options.format == "json" ? json_text : text);
}

std::string solution_text(const Solution& solution) {
    std::string out = "objective " + solution.objective.str() + "\nselected";
    for (int index : solution.selected) out += " " + std::to_string(index);
    out += "\nproven_optimal ";
    out += solution.proven_optimal ? "yes" : "no";
    out += "\npair_evaluations " + std::to_string(solution.pair_evaluations);
    out += "\nnodes_explored " + std::to_string(solution.nodes_explored);
    out += "\n";
    return out;
}

std::string harness_text(const HarnessReport& report) {
    std::string out = "trials " + std::to_string(report.trials) + "\nagreements " +
                      std::to_string(report.agreements) + "\ndisagreements " +
                      std::to_string(report.disagreements.size()) + "\ninconclusive " +
                      std::to_string(report.inconclusive) + "\nelapsed_seconds " +
                      std::to_string(report.elapsed_seconds) + "\n";
    for (const HarnessDisagreement& d : report.disagreements) {
        out += "disagreement trial=" + std::to_string(d.trial) + " seed=" +
               std::to_string(d.trial_seed) + " " + d.instance_summary + " oracle=" +
               (d.oracle_yes ? "YES" : "NO") + " reduction=" + (d.reduction_yes ? "YES" : "NO") +
               "\n";
    }
    return out;
}

// --- subcommand runners -------------------------------------------------

struct GenOptions {
    std::string kind;
    GeneratorSpec spec;
    std::optional<int> scaling_exponent;
    std::string out;
};

int run_gen(GenOptions& options) {
    options.spec.kind = parse_generator_kind(options.kind);
    options.spec.site_scaling_exponent = options.scaling_exponent;
    GeneratedInstance generated = generate(options.spec);
    AnyInstance instance = std::visit([](auto v) { return AnyInstance(std::move(v)); }, generated);
    const std::string json_text = generated_instance_to_json(instance, options.spec);
    if (!options.out.empty()) {
        write_text_file(json_text, options.out);
    } else {
        std::cout << json_text;
    }
    return kExitYes;
}

struct ReduceOptions {
    std::string in;
    std::string out;
    std::string receipt_path;
    int clique_size = 0;
};

int run_reduce(ReduceOptions& options) {
    AnyInstance source = read_instance(options.in);
    AnyInstance target;
    std::optional<ReductionReceipt> receipt;
    if (const Graph* graph = std::get_if<Graph>(&source)) {
        if (options.clique_size <= 0) {
            throw InputError("reducing a graph needs --clique-size");
        }
        auto [instance, r] = clique_to_weighted_edge(*graph, options.clique_size);
        target = std::move(instance);
        receipt = r;
    } else if (const UdgInstance* udg = std::get_if<UdgInstance>(&source)) {
        auto [instance, r] = udg_to_cluster(*udg);
        target = std::move(instance);
        receipt = r;
    } else if (const ClusterMinInstance* cluster = std::get_if<ClusterMinInstance>(&source)) {
        target = cluster_to_weighted_edge(*cluster);
        if (!options.receipt_path.empty()) {
            throw InputError("the cluster-to-weighted-edge materialization has no receipt");
        }
    } else {
        throw InputError("nothing to reduce: input is already a weighted_edge instance");
    }
    const std::string json_text = instance_to_json(target);
    if (!options.out.empty()) {
        write_text_file(json_text, options.out);
    } else {
        std::cout << json_text;
    }
    if (!options.receipt_path.empty()) write_text_file(receipt_to_json(*receipt), options.receipt_path);
    return kExitYes;
}

struct SolveOptions {
    std::string in;
    CommonOptions common;
};

int run_solve(SolveOptions& options) {
    AnyInstance instance = read_instance(options.in);
    const SolverConfig config = make_config(options.common);
    if (std::holds_alternative<Graph>(instance)) {
        throw InputError("a bare graph cannot be solved; 'reduce' it first");
    }
    Solution solution;
    bool is_decision = false;
    if (const auto* weighted = std::get_if<WeightedEdgeInstance>(&instance)) {
        solution = solve_weighted_edge(*weighted, config);
    } else if (const auto* cluster = std::get_if<ClusterMinInstance>(&instance)) {
        solution = solve_cluster_min(*cluster, config);
    } else {
        solution = solve_udg_independent_set(std::get<UdgInstance>(instance), config);
        is_decision = true;
    }
    std::string text = "kind " + std::string(instance_kind_name(instance)) + "\n" +
                       solution_text(solution);
    // a zero-conflict selection certifies YES even from a heuristic; a
    // nonzero heuristic count certifies nothing
    const bool yes = solution.objective.is_zero();
    const bool answerable = yes || solution.proven_optimal;
    if (is_decision) {
        text += std::string("answer ") + (!answerable ? "UNKNOWN" : yes ? "YES" : "NO") + "\n";
    }
    emit(solution_to_json(solution), text, options.common);
    if (!is_decision) return kExitYes;
    if (yes) return kExitYes;
    return answerable ? kExitNo : kExitBudget;
}

struct VerifyOptions {
    std::string instance_path;
    std::string solution_path;
};

int run_verify(VerifyOptions& options) {
    AnyInstance any = read_instance(options.instance_path);
    if (std::holds_alternative<Graph>(any)) {
        throw InputError("a bare graph has no solutions to verify");
    }
    const Solution solution = solution_from_json(read_text_file(options.solution_path));
    Instance instance = std::visit(
        [](auto&& value) -> Instance {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Graph>) {
                throw InputError("unreachable");
            } else {
                return Instance(std::forward<decltype(value)>(value));
            }
        },
        std::move(any));
    const bool valid = check_solution(instance, solution);
    std::cout << (valid ? "valid\n" : "invalid\n");
    return valid ? kExitYes : kExitNo;
}

struct HarnessOptions {
    std::string problem;
    std::uint64_t trials = 100;
    int max_size = 10;
    std::uint64_t seed = 0;
    CommonOptions common;
};

int run_harness(HarnessOptions& options) {
    const SolverConfig config = make_config(options.common);
    HarnessReport report;
    if (options.problem == "udg") {
        report = run_iff_harness_udg(options.trials, options.max_size, options.seed, config);
    } else if (options.problem == "clique") {
        report = run_iff_harness_clique(options.trials, options.max_size, options.seed, config);
    } else {
        throw InputError("unknown harness problem '" + options.problem + "'");
    }
    emit(harness_report_to_json(report), harness_text(report), options.common);
    if (!report.disagreements.empty()) return kExitNo;
    if (report.inconclusive > 0) return kExitBudget;
    return kExitYes;
}

struct BenchOptions {
    std::vector<int> sizes;
    std::uint64_t seed = 0;
    int trials = 3;
    double density = 2.0;
    int exponent = 1;
    CommonOptions common;
};

int run_bench(BenchOptions& options) {
    const SolverConfig config = make_config(options.common);
    BenchReport report = bench_scaling(options.sizes, config, options.seed, options.trials,
                                       options.density, options.exponent);
    emit(bench_report_to_json(report), bench_report_text(report), options.common);
    return kExitYes;
}

struct RenderOptions {
    std::string in;
    std::string out;
};

int run_render(RenderOptions& options) {
    AnyInstance instance = read_instance(options.in);
    const UdgInstance* udg = std::get_if<UdgInstance>(&instance);
    if (!udg) throw InputError("render needs a udg_is instance");
    render_udg_svg(*udg, options.out);
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for cluster ground-state selection, unit disk independent sets "
                 "and the reductions between them"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
    gen_cmd->add_option("--kind", gen.kind, "random_points, grid_points or random_graph")
        ->required();
    gen_cmd->add_option("--count", gen.spec.count, "points or vertices");
    gen_cmd->add_option("--selection-size", gen.spec.selection_size,
                        "target/selection size for point instances");
    gen_cmd->add_option("--resolution", gen.spec.resolution, "coordinate units per geometric unit")
        ->capture_default_str();
    gen_cmd->add_option("--box", gen.spec.box_extent, "box side, geometric units");
    gen_cmd->add_option("--grid-side", gen.spec.grid_side, "grid side length");
    gen_cmd->add_option("--spacing", gen.spec.grid_spacing, "grid spacing, scaled units");
    gen_cmd->add_option("--edge-prob", gen.spec.edge_probability, "edge probability")
        ->capture_default_str();
    gen_cmd->add_option("--threshold", gen.spec.conflict_threshold,
                        "conflict threshold, scaled squared units");
    gen_cmd->add_option("--seed", gen.spec.seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--scaling-exponent", gen.scaling_exponent,
                        "derive the site count as ceil(density * K^p)");
    gen_cmd->add_option("--density", gen.spec.scaling_density, "site scaling density")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    ReduceOptions reduce;
    CLI::App* reduce_cmd =
        app.add_subcommand("reduce", "transform an instance to the next problem down the chain");
    reduce_cmd->add_option("--in", reduce.in, "source instance (JSON or DIMACS)")->required();
    reduce_cmd->add_option("--out", reduce.out, "output file (default stdout)");
    reduce_cmd->add_option("--receipt", reduce.receipt_path, "write the reduction receipt here");
    reduce_cmd->add_option("--clique-size", reduce.clique_size, "clique size for graph inputs");

    SolveOptions solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance");
    solve_cmd->add_option("--in", solve.in, "instance file")->required();
    add_solver_options(solve_cmd, solve.common, "branch_and_bound");
    add_output_options(solve_cmd, solve.common);

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution certificate");
    verify_cmd->add_option("--instance", verify.instance_path, "instance file")->required();
    verify_cmd->add_option("--solution", verify.solution_path, "solution file")->required();

    HarnessOptions harness;
    CLI::App* harness_cmd =
        app.add_subcommand("harness", "run the iff-theorem oracle-equivalence harness");
    harness_cmd->add_option("--problem", harness.problem, "udg or clique")->required();
    harness_cmd->add_option("--trials", harness.trials, "number of trials")
        ->capture_default_str();
    harness_cmd->add_option("--max-size", harness.max_size, "maximum centers/vertices")
        ->capture_default_str();
    harness_cmd->add_option("--seed", harness.seed, "harness seed")->capture_default_str();
    add_solver_options(harness_cmd, harness.common, "branch_and_bound");
    add_output_options(harness_cmd, harness.common);

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "measure solver scaling");
    bench_cmd->add_option("--sizes", bench.sizes, "selection sizes, e.g. 6,8,10")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--seed", bench.seed, "bench seed")->capture_default_str();
    bench_cmd->add_option("--trials", bench.trials, "instances per size")->capture_default_str();
    bench_cmd->add_option("--density", bench.density, "site scaling density")
        ->capture_default_str();
    bench_cmd->add_option("--exponent", bench.exponent, "site scaling exponent")
        ->capture_default_str();
    add_solver_options(bench_cmd, bench.common, "exhaustive");
    add_output_options(bench_cmd, bench.common);

    RenderOptions render;
    CLI::App* render_cmd = app.add_subcommand("render", "draw a unit disk instance as SVG");
    render_cmd->add_option("--in", render.in, "udg_is instance file")->required();
    render_cmd->add_option("--out", render.out, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (reduce_cmd->parsed()) return run_reduce(reduce);
        if (solve_cmd->parsed()) return run_solve(solve);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (harness_cmd->parsed()) return run_harness(harness);
        if (bench_cmd->parsed()) return run_bench(bench);
        if (render_cmd->parsed()) return run_render(render);
    } catch (const BudgetError& error) {
        std::cerr << "error: " << error.what() << "\n";
        if (solve_cmd->parsed() && !solve.common.out.empty()) {
            write_text_file(solution_to_json(error.incumbent()), solve.common.out);
        }
        return kExitBudget;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
