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
#include <string>

#include "clumin/model.hpp"

namespace clumin {

/// SVG 1.1 drawing of the instance: one circle per disk, one line per
/// conflict edge. Disks are drawn at half the conflict distance so that a
/// pair exactly at the threshold shows as touching circles. Byte output is
/// deterministic for a fixed instance.
std::string render_udg_svg_string(const UdgInstance& instance);

void render_udg_svg(const UdgInstance& instance, const std::filesystem::path& path);

}  // namespace clumin
