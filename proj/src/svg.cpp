// Copyright 2026 The camplace Authors
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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "camplace/error.hpp"
#include "camplace/planner.hpp"

namespace camplace {
namespace {

// Coordinates are written in meters with y flipped so north is up.
class SvgWriter {
 public:
  explicit SvgWriter(const Box& box) : box_(box) {}

  std::string num(double v) const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
  }
  std::string x(const Point2& p) const { return num(p.x); }
  std::string y(const Point2& p) const { return num(box_.max.y + box_.min.y - p.y); }

  std::string points(const Ring& r) const {
    std::string out;
    for (const Point2& p : r) {
      if (!out.empty()) out += ' ';
      out += x(p) + "," + y(p);
    }
    return out;
  }

 private:
  Box box_;
};

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b",
                          "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#d62728"};

}  // namespace

std::string render_svg(const PlanReport& report) {
  Box box{{0, 0}, {1, 1}};
  if (!report.walls.empty() && !report.walls.front().empty()) {
    box = {report.walls.front().front(), report.walls.front().front()};
    for (const Point2& p : report.walls.front()) {
      box.min = {std::min(box.min.x, p.x), std::min(box.min.y, p.y)};
      box.max = {std::max(box.max.x, p.x), std::max(box.max.y, p.y)};
    }
  }
  const SvgWriter w(box);
  const double extent = std::max(box.max.x - box.min.x, box.max.y - box.min.y);
  const double margin = 0.05 * extent;
  const double stroke = 0.004 * extent;
  const double dot = 0.006 * extent;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << w.num(box.min.x - margin) << ' '
      << w.num(box.min.y - margin) << ' ' << w.num(box.max.x - box.min.x + 2 * margin) << ' '
      << w.num(box.max.y - box.min.y + 2 * margin) << "\" width=\"1000\">\n";
  svg << "<style>.walls{fill:none;stroke:#222;stroke-width:" << w.num(stroke)
      << "}.covered{fill:#2a9d3f}.missed{fill:#e02020;stroke:#600;stroke-width:"
      << w.num(stroke / 2) << "}.camera{fill:#000;stroke:#fff;stroke-width:" << w.num(stroke / 2)
      << "}.coverage{fill-opacity:0.18;stroke-opacity:0.5;stroke-width:" << w.num(stroke / 2)
      << "}</style>\n";

  for (std::size_t i = 0; i < report.coverage.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    svg << "<polygon class=\"coverage\" data-camera=\"" << report.coverage[i].candidate
        << "\" fill=\"" << color << "\" stroke=\"" << color << "\" points=\""
        << w.points(report.coverage[i].polygon) << "\"/>\n";
  }
  for (const Ring& r : report.walls) {
    svg << "<polygon class=\"walls\" points=\"" << w.points(r) << "\"/>\n";
  }

  std::vector<char> missed(report.boundary.size(), 0);
  for (Index b : report.cover.missed) missed[b] = 1;
  for (const BoundaryPoint& b : report.boundary) {
    const bool gap = missed[b.index];
    svg << "<circle class=\"boundary " << (gap ? "missed" : "covered") << "\" cx=\""
        << w.x(b.position) << "\" cy=\"" << w.y(b.position) << "\" r=\""
        << w.num(gap ? 1.8 * dot : dot) << "\"/>\n";
  }
  for (std::size_t i = 0; i < report.chosen_positions.size(); ++i) {
    const Point2 p = report.chosen_positions[i];
    svg << "<circle class=\"camera\" cx=\"" << w.x(p) << "\" cy=\"" << w.y(p) << "\" r=\""
        << w.num(2.5 * dot) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void export_report(const PlanReport& report, const ExportTargets& targets) {
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  };
  if (targets.solution) write(*targets.solution, solution_document(report).dump(2) + "\n");
  if (targets.svg) write(*targets.svg, render_svg(report));
}

}  // namespace camplace
