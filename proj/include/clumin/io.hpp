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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "clumin/bench.hpp"
#include "clumin/generate.hpp"
#include "clumin/model.hpp"
#include "clumin/reductions.hpp"
#include "clumin/verify.hpp"

namespace clumin {

/// Any instance kind the toolkit reads or writes, including bare graphs.
using AnyInstance = std::variant<Graph, WeightedEdgeInstance, ClusterMinInstance, UdgInstance>;

const char* instance_kind_name(const AnyInstance& instance);

// Single-document JSON serialization. Rationals travel as "p/q" strings so
// nothing is lost to floating point; read(write(x)) == x holds exactly.
std::string instance_to_json(const AnyInstance& instance);
AnyInstance instance_from_json(const std::string& text);

std::string solution_to_json(const Solution& solution);
Solution solution_from_json(const std::string& text);

std::string receipt_to_json(const ReductionReceipt& receipt);
ReductionReceipt receipt_from_json(const std::string& text);

std::string harness_report_to_json(const HarnessReport& report);
HarnessReport harness_report_from_json(const std::string& text);

std::string bench_report_to_json(const BenchReport& report);
BenchReport bench_report_from_json(const std::string& text);

/// Instance JSON plus a generator header recording the PRNG algorithm, the
/// seed and the full spec. read_instance ignores the header.
std::string generated_instance_to_json(const AnyInstance& instance, const GeneratorSpec& spec);

void write_instance(const AnyInstance& instance, const std::filesystem::path& path);

/// Reads a JSON instance document, or a DIMACS-style edge list ("p edge n m"
/// header with 1-indexed "e i j" lines) when the file does not start with
/// '{'. Malformed input raises ParseError with line/field diagnostics.
AnyInstance read_instance(const std::filesystem::path& path);

Graph parse_dimacs(std::istream& in);

void write_text_file(const std::string& text, const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace clumin
