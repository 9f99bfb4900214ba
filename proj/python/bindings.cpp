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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "clumin/bench.hpp"
#include "clumin/errors.hpp"
#include "clumin/generate.hpp"
#include "clumin/io.hpp"
#include "clumin/model.hpp"
#include "clumin/reductions.hpp"
#include "clumin/solvers.hpp"
#include "clumin/svg.hpp"
#include "clumin/verify.hpp"

namespace py = pybind11;
using namespace clumin;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact toolkit for cluster ground-state site selection, unit disk independent "
              "sets, and the polynomial reductions between them.";
    m.attr("__version__") = "0.1.0";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "ExactOverflowError", PyExc_OverflowError);
    static py::handle budget_error =
        py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError).release();
    // richer translation: keep the incumbent reachable from python
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetError& error) {
            py::object exc = py::reinterpret_borrow<py::object>(budget_error)(error.what());
            exc.attr("incumbent") = py::cast(error.incumbent());
            PyErr_SetObject(budget_error.ptr(), exc.ptr());
        }
    });

    py::class_<Rational>(m, "Rational")
        .def(py::init<std::int64_t>(), py::arg("value") = 0)
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("numerator"), py::arg("denominator"))
        .def_static("parse", &Rational::parse, py::arg("text"))
        .def_property_readonly("numerator", &Rational::numerator)
        .def_property_readonly("denominator", &Rational::denominator)
        .def("is_integer", &Rational::is_integer)
        .def("is_zero", &Rational::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__hash__",
             [](const Rational& r) {
                 return py::hash(py::make_tuple(r.numerator(), r.denominator()));
             })
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });
    py::implicitly_convertible<py::int_, Rational>();

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge, py::arg("i"), py::arg("j"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(vertex_count=" + std::to_string(g.vertex_count()) + ", edges=" +
                   std::to_string(g.edge_count()) + ")";
        });

    py::class_<PointSet>(m, "PointSet")
        .def(py::init<int, std::int64_t, std::vector<std::vector<std::int64_t>>>(),
             py::arg("dimension"), py::arg("resolution"), py::arg("points"))
        .def_property_readonly("dimension", &PointSet::dimension)
        .def_property_readonly("resolution", &PointSet::resolution)
        .def("__len__", &PointSet::size)
        .def("point", &PointSet::point, py::arg("index"))
        .def("points", &PointSet::points)
        .def("embedded_3d", &PointSet::embedded_3d)
        .def(py::self == py::self);

    py::class_<RadialPotential>(m, "RadialPotential")
        .def(py::init<std::vector<std::int64_t>, std::vector<Rational>>(),
             py::arg("breakpoints"), py::arg("values"))
        .def_static("step", &RadialPotential::step, py::arg("threshold_sq"),
                    py::arg("inside") = Rational(2), py::arg("outside") = Rational(1))
        .def_property_readonly("breakpoints", &RadialPotential::breakpoints)
        .def_property_readonly("values", &RadialPotential::values)
        .def(py::self == py::self);

    py::class_<WeightedEdgeInstance>(m, "WeightedEdgeInstance")
        .def(py::init<int, std::vector<Rational>, int>(), py::arg("vertex_count"),
             py::arg("weights"), py::arg("selection_size"))
        .def_property_readonly("vertex_count", &WeightedEdgeInstance::vertex_count)
        .def_property_readonly("selection_size", &WeightedEdgeInstance::selection_size)
        .def_property_readonly("weights", &WeightedEdgeInstance::weights)
        .def("weight", &WeightedEdgeInstance::weight, py::arg("i"), py::arg("j"),
             py::return_value_policy::copy)
        .def(py::self == py::self);

    py::class_<ClusterMinInstance>(m, "ClusterMinInstance")
        .def(py::init<PointSet, int, RadialPotential>(), py::arg("sites"),
             py::arg("particle_count"), py::arg("potential"))
        .def_property_readonly("sites", &ClusterMinInstance::sites)
        .def_property_readonly("particle_count", &ClusterMinInstance::particle_count)
        .def_property_readonly("potential", &ClusterMinInstance::potential)
        .def(py::self == py::self);

    py::class_<UdgInstance>(m, "UdgInstance")
        .def(py::init<PointSet, std::int64_t, int>(), py::arg("centers"),
             py::arg("conflict_threshold"), py::arg("target_size"))
        .def_property_readonly("centers", &UdgInstance::centers)
        .def_property_readonly("conflict_threshold", &UdgInstance::conflict_threshold)
        .def_property_readonly("target_size", &UdgInstance::target_size)
        .def("conflicts", &UdgInstance::conflicts, py::arg("i"), py::arg("j"))
        .def(py::self == py::self);

    py::class_<Solution>(m, "Solution")
        .def(py::init<>())
        .def_readwrite("selected", &Solution::selected)
        .def_readwrite("objective", &Solution::objective)
        .def_readwrite("proven_optimal", &Solution::proven_optimal)
        .def_readwrite("pair_evaluations", &Solution::pair_evaluations)
        .def_readwrite("nodes_explored", &Solution::nodes_explored)
        .def(py::self == py::self)
        .def("__repr__", [](const Solution& s) {
            std::ostringstream out;
            out << "Solution(objective='" << s.objective.str() << "', selected=[";
            for (std::size_t i = 0; i < s.selected.size(); ++i) {
                out << (i ? ", " : "") << s.selected[i];
            }
            out << "], proven_optimal=" << (s.proven_optimal ? "True" : "False") << ")";
            return out.str();
        });

    py::enum_<Algorithm>(m, "Algorithm")
        .value("exhaustive", Algorithm::exhaustive)
        .value("branch_and_bound", Algorithm::branch_and_bound)
        .value("greedy", Algorithm::greedy);

    py::enum_<ProblemKind>(m, "ProblemKind")
        .value("clique", ProblemKind::clique)
        .value("weighted_edge", ProblemKind::weighted_edge)
        .value("udg_is", ProblemKind::udg_is)
        .value("cluster_min", ProblemKind::cluster_min);

    py::enum_<GeneratorKind>(m, "GeneratorKind")
        .value("random_points", GeneratorKind::random_points)
        .value("grid_points", GeneratorKind::grid_points)
        .value("random_graph", GeneratorKind::random_graph);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init([](Algorithm algorithm, std::optional<std::uint64_t> node_budget,
                         int parallel_workers) {
                 SolverConfig config;
                 config.algorithm = algorithm;
                 config.node_budget = node_budget;
                 config.parallel_workers = parallel_workers;
                 return config;
             }),
             py::arg("algorithm") = Algorithm::branch_and_bound,
             py::arg("node_budget") = std::nullopt, py::arg("parallel_workers") = 1)
        .def_readwrite("algorithm", &SolverConfig::algorithm)
        .def_readwrite("node_budget", &SolverConfig::node_budget)
        .def_readwrite("parallel_workers", &SolverConfig::parallel_workers);

    py::class_<ReductionReceipt>(m, "ReductionReceipt")
        .def_readonly("source_kind", &ReductionReceipt::source_kind)
        .def_readonly("target_kind", &ReductionReceipt::target_kind)
        .def_readonly("decision_threshold", &ReductionReceipt::decision_threshold)
        .def_readonly("construction_steps", &ReductionReceipt::construction_steps)
        .def(py::self == py::self);

    py::class_<InterpretedAnswer>(m, "InterpretedAnswer")
        .def_readonly("yes", &InterpretedAnswer::yes)
        .def_readonly("certificate", &InterpretedAnswer::certificate)
        .def("__bool__", [](const InterpretedAnswer& a) { return a.yes; });

    py::class_<EnergyResult>(m, "EnergyResult")
        .def_readonly("value", &EnergyResult::value)
        .def_readonly("pair_evaluations", &EnergyResult::pair_evaluations);

    py::class_<HarnessDisagreement>(m, "HarnessDisagreement")
        .def_readonly("trial", &HarnessDisagreement::trial)
        .def_readonly("trial_seed", &HarnessDisagreement::trial_seed)
        .def_readonly("instance_summary", &HarnessDisagreement::instance_summary)
        .def_readonly("oracle_yes", &HarnessDisagreement::oracle_yes)
        .def_readonly("reduction_yes", &HarnessDisagreement::reduction_yes)
        .def(py::self == py::self);

    py::class_<HarnessReport>(m, "HarnessReport")
        .def_readonly("trials", &HarnessReport::trials)
        .def_readonly("agreements", &HarnessReport::agreements)
        .def_readonly("disagreements", &HarnessReport::disagreements)
        .def_readonly("inconclusive", &HarnessReport::inconclusive)
        .def_readonly("elapsed_seconds", &HarnessReport::elapsed_seconds)
        .def("clean", &HarnessReport::clean)
        .def(py::self == py::self);

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init([](GeneratorKind kind, int count, int selection_size,
                         std::int64_t resolution, std::int64_t box_extent, int grid_side,
                         std::int64_t grid_spacing, double edge_probability,
                         std::int64_t conflict_threshold, std::uint64_t seed,
                         std::optional<int> site_scaling_exponent, double scaling_density) {
                 GeneratorSpec spec;
                 spec.kind = kind;
                 spec.count = count;
                 spec.selection_size = selection_size;
                 spec.resolution = resolution;
                 spec.box_extent = box_extent;
                 spec.grid_side = grid_side;
                 spec.grid_spacing = grid_spacing;
                 spec.edge_probability = edge_probability;
                 spec.conflict_threshold = conflict_threshold;
                 spec.seed = seed;
                 spec.site_scaling_exponent = site_scaling_exponent;
                 spec.scaling_density = scaling_density;
                 return spec;
             }),
             py::arg("kind") = GeneratorKind::random_points, py::arg("count") = 0,
             py::arg("selection_size") = 0, py::arg("resolution") = 1,
             py::arg("box_extent") = 0, py::arg("grid_side") = 0, py::arg("grid_spacing") = 0,
             py::arg("edge_probability") = 0.5, py::arg("conflict_threshold") = 0,
             py::arg("seed") = 0, py::arg("site_scaling_exponent") = std::nullopt,
             py::arg("scaling_density") = 2.0)
        .def_readwrite("kind", &GeneratorSpec::kind)
        .def_readwrite("count", &GeneratorSpec::count)
        .def_readwrite("selection_size", &GeneratorSpec::selection_size)
        .def_readwrite("resolution", &GeneratorSpec::resolution)
        .def_readwrite("box_extent", &GeneratorSpec::box_extent)
        .def_readwrite("grid_side", &GeneratorSpec::grid_side)
        .def_readwrite("grid_spacing", &GeneratorSpec::grid_spacing)
        .def_readwrite("edge_probability", &GeneratorSpec::edge_probability)
        .def_readwrite("conflict_threshold", &GeneratorSpec::conflict_threshold)
        .def_readwrite("seed", &GeneratorSpec::seed)
        .def_readwrite("site_scaling_exponent", &GeneratorSpec::site_scaling_exponent)
        .def_readwrite("scaling_density", &GeneratorSpec::scaling_density)
        .def(py::self == py::self);

    py::class_<BenchRow>(m, "BenchRow")
        .def_readonly("selection_size", &BenchRow::selection_size)
        .def_readonly("vertex_count", &BenchRow::vertex_count)
        .def_readonly("trials", &BenchRow::trials)
        .def_readonly("median_wall_seconds", &BenchRow::median_wall_seconds)
        .def_readonly("median_nodes", &BenchRow::median_nodes)
        .def_readonly("censored", &BenchRow::censored)
        .def(py::self == py::self);

    py::class_<BenchReport>(m, "BenchReport")
        .def_readonly("algorithm", &BenchReport::algorithm)
        .def_readonly("seed", &BenchReport::seed)
        .def_readonly("rows", &BenchReport::rows)
        .def(py::self == py::self);

    // model operations
    m.def("squared_distance", &squared_distance, py::arg("points"), py::arg("i"), py::arg("j"));
    m.def("potential_value", &potential_value, py::arg("potential"), py::arg("squared_r"),
          py::return_value_policy::copy);
    m.def("unit_disk_graph", &unit_disk_graph, py::arg("instance"));

    // reductions
    m.def("clique_to_weighted_edge", &clique_to_weighted_edge, py::arg("graph"),
          py::arg("clique_size"));
    m.def("udg_to_cluster", &udg_to_cluster, py::arg("instance"));
    m.def("cluster_to_weighted_edge", &cluster_to_weighted_edge, py::arg("instance"));
    m.def("interpret_udg_answer", &interpret_udg_answer, py::arg("solution"),
          py::arg("receipt"));

    // solvers
    m.def("solve_weighted_edge", &solve_weighted_edge, py::arg("instance"),
          py::arg("config") = SolverConfig{}, py::call_guard<py::gil_scoped_release>());
    m.def("solve_cluster_min", &solve_cluster_min, py::arg("instance"),
          py::arg("config") = SolverConfig{}, py::call_guard<py::gil_scoped_release>());
    m.def("solve_udg_independent_set", &solve_udg_independent_set, py::arg("instance"),
          py::arg("config") = SolverConfig{}, py::call_guard<py::gil_scoped_release>());
    m.def("greedy_upper_bound", &greedy_upper_bound, py::arg("instance"));
    m.def("energy", &energy, py::arg("instance"), py::arg("selection"));

    // verification
    m.def("check_solution", &check_solution, py::arg("instance"), py::arg("solution"));
    m.def("run_iff_harness_udg", &run_iff_harness_udg, py::arg("trials"), py::arg("max_centers"),
          py::arg("seed"), py::arg("reduction_config") = SolverConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("run_iff_harness_clique", &run_iff_harness_clique, py::arg("trials"),
          py::arg("max_vertices"), py::arg("seed"), py::arg("reduction_config") = SolverConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("excess_equals_conflicts", &excess_equals_conflicts, py::arg("instance"),
          py::arg("selection"));

    // generation, serialization, rendering, benchmarks
    m.def("generate", &generate, py::arg("spec"));
    m.def("instance_to_json", &instance_to_json, py::arg("instance"));
    m.def("instance_from_json", &instance_from_json, py::arg("text"));
    m.def("generated_instance_to_json", &generated_instance_to_json, py::arg("instance"),
          py::arg("spec"));
    m.def("solution_to_json", &solution_to_json, py::arg("solution"));
    m.def("solution_from_json", &solution_from_json, py::arg("text"));
    m.def("receipt_to_json", &receipt_to_json, py::arg("receipt"));
    m.def("receipt_from_json", &receipt_from_json, py::arg("text"));
    m.def("harness_report_to_json", &harness_report_to_json, py::arg("report"));
    m.def("harness_report_from_json", &harness_report_from_json, py::arg("text"));
    m.def("bench_report_to_json", &bench_report_to_json, py::arg("report"));
    m.def("bench_report_from_json", &bench_report_from_json, py::arg("text"));
    m.def("write_instance", &write_instance, py::arg("instance"), py::arg("path"));
    m.def("read_instance", &read_instance, py::arg("path"));
    m.def(
        "parse_dimacs",
        [](const std::string& text) {
            std::istringstream stream(text);
            return parse_dimacs(stream);
        },
        py::arg("text"));
    m.def("render_udg_svg_string", &render_udg_svg_string, py::arg("instance"));
    m.def("render_udg_svg", &render_udg_svg, py::arg("instance"), py::arg("path"));
    m.def("bench_scaling", &bench_scaling, py::arg("sizes"), py::arg("config"), py::arg("seed"),
          py::arg("trials_per_size") = 3, py::arg("site_density") = 2.0,
          py::arg("site_exponent") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("bench_report_text", &bench_report_text, py::arg("report"));
}
