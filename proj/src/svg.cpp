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

#include "clumin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "clumin/errors.hpp"

namespace clumin {

namespace {

std::string num(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", value);
    return buffer;
}

}  // namespace

std::string render_udg_svg_string(const UdgInstance& instance) {
    const PointSet& centers = instance.centers();
    const int n = centers.size();
    const double radius = std::sqrt(static_cast<double>(instance.conflict_threshold())) / 2.0;
    const double margin = radius + 2.0;

    std::int64_t min_x = centers.coord(0, 0), max_x = min_x;
    std::int64_t min_y = centers.coord(0, 1), max_y = min_y;
    for (int i = 1; i < n; ++i) {
        min_x = std::min(min_x, centers.coord(i, 0));
        max_x = std::max(max_x, centers.coord(i, 0));
        min_y = std::min(min_y, centers.coord(i, 1));
        max_y = std::max(max_y, centers.coord(i, 1));
    }
    const double width = static_cast<double>(max_x - min_x) + 2 * margin;
    const double height = static_cast<double>(max_y - min_y) + 2 * margin;
    // y flipped so the drawing matches the usual math orientation
    auto sx = [&](int i) { return static_cast<double>(centers.coord(i, 0) - min_x) + margin; };
    auto sy = [&](int i) { return static_cast<double>(max_y - centers.coord(i, 1)) + margin; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
           "\">\n";
    const Graph conflicts = unit_disk_graph(instance);
    for (const auto& [i, j] : conflicts.edges()) {
        svg += "  <line x1=\"" + num(sx(i)) + "\" y1=\"" + num(sy(i)) + "\" x2=\"" + num(sx(j)) +
               "\" y2=\"" + num(sy(j)) + "\" stroke=\"#c0392b\" stroke-width=\"" +
               num(radius / 6.0 + 0.5) + "\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        svg += "  <circle cx=\"" + num(sx(i)) + "\" cy=\"" + num(sy(i)) + "\" r=\"" +
               num(radius) + "\" fill=\"#3a7abd\" fill-opacity=\"0.35\" stroke=\"#1f4e79\" " +
               "stroke-width=\"" + num(radius / 12.0 + 0.25) + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void render_udg_svg(const UdgInstance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
    out << render_udg_svg_string(instance);
    if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace clumin
