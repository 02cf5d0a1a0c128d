// Copyright 2026 The Authors.
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

#include "sector_cover/lawnmower.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sector_cover {
namespace {

// One sweep line: either trimmed intervals or point visits.
struct SweepSegment {
  double x0, x1;  // x0 == x1 marks a point visit
};

struct SweepLine {
  double y;
  std::vector<SweepSegment> segments;
};

std::vector<SweepLine> build_sweep_lines(const RegionSet& rotated,
                                         double tool_width) {
  Box box = bounding_box(rotated);
  double extent = box.height();
  const double half = tool_width / 2.0;

  std::vector<double> offsets;
  if (extent <= tool_width) {
    offsets.push_back(extent / 2.0);
  } else {
    int count = static_cast<int>(std::ceil(extent / tool_width - 1e-7));
    for (int i = 0; i < count; ++i)
      offsets.push_back(std::min(half + i * tool_width, extent - half));
  }

  std::vector<SweepLine> lines;
  for (double off : offsets) {
    SweepLine line;
    line.y = box.min.y + off;
    for (const Span& span : horizontal_spans(rotated, line.y)) {
      if (span.hi - span.lo >= tool_width) {
        line.segments.push_back({span.lo + half, span.hi - half});
      } else {
        double mid = 0.5 * (span.lo + span.hi);
        line.segments.push_back({mid, mid});
      }
    }
    if (!line.segments.empty()) lines.push_back(line);
  }
  return lines;
}

// Serpentine walk. `start_left` picks which end of the first line the path
// enters from; direction alternates per line.
std::vector<Point> serpentine(const std::vector<SweepLine>& lines,
                              bool start_left) {
  std::vector<Point> waypoints;
  auto push = [&waypoints](double x, double y) {
    Point p{x, y};
    if (waypoints.empty() || distance(waypoints.back(), p) > 1e-12)
      waypoints.push_back(p);
  };

  bool left_to_right = start_left;
  for (const SweepLine& line : lines) {
    if (left_to_right) {
      for (const SweepSegment& seg : line.segments) {
        push(seg.x0, line.y);
        push(seg.x1, line.y);
      }
    } else {
      for (auto it = line.segments.rbegin(); it != line.segments.rend();
           ++it) {
        push(it->x1, line.y);
        push(it->x0, line.y);
      }
    }
    left_to_right = !left_to_right;
  }
  return waypoints;
}

}  // namespace

std::string variant_name(PathVariant variant) {
  switch (variant) {
    case PathVariant::kAForward: return "a_forward";
    case PathVariant::kAReverse: return "a_reverse";
    case PathVariant::kBForward: return "b_forward";
    case PathVariant::kBReverse: return "b_reverse";
  }
  return "unknown";
}

double path_length(const std::vector<Point>& waypoints) {
  double total = 0.0;
  for (size_t i = 0; i + 1 < waypoints.size(); ++i)
    total += distance(waypoints[i], waypoints[i + 1]);
  return total;
}

std::array<LawnmowerPath, 4> generate_lawnmower(const CoverageRegion& region,
                                                double tool_width,
                                                int sector_index) {
  if (tool_width <= 0)
    throw std::invalid_argument("generate_lawnmower: non-positive tool width");
  if (region.shape.empty())
    throw std::invalid_argument("generate_lawnmower: empty region");

  RegionSet rotated = rotate(region.shape, -region.theta, Point{0, 0});
  std::vector<SweepLine> lines = build_sweep_lines(rotated, tool_width);

  std::vector<Point> a = serpentine(lines, /*start_left=*/true);
  std::vector<Point> b = serpentine(lines, /*start_left=*/false);
  if (a.empty()) {
    // No sweep line produced a segment; park at the bounding-box center.
    Box box = bounding_box(rotated);
    Point mid{0.5 * (box.min.x + box.max.x), 0.5 * (box.min.y + box.max.y)};
    a.push_back(mid);
    b.push_back(mid);
  }

  for (Point& p : a) p = rotate_point(p, region.theta, Point{0, 0});
  for (Point& p : b) p = rotate_point(p, region.theta, Point{0, 0});

  auto make = [&](std::vector<Point> pts, PathVariant variant) {
    LawnmowerPath path;
    path.length = path_length(pts);
    path.waypoints = std::move(pts);
    path.variant = variant;
    path.sector_index = sector_index;
    return path;
  };

  std::vector<Point> a_rev(a.rbegin(), a.rend());
  std::vector<Point> b_rev(b.rbegin(), b.rend());
  return {make(a, PathVariant::kAForward), make(a_rev, PathVariant::kAReverse),
          make(b, PathVariant::kBForward),
          make(b_rev, PathVariant::kBReverse)};
}

double lemma1_bound(double w, double h, double tool_width) {
  if (!(w >= h) || h <= 0 || tool_width <= 0)
    throw std::invalid_argument("lemma1_bound: requires w >= h > 0, l > 0");
  return w * std::ceil(h / tool_width - 1e-7);
}

double coverage_fraction(const LawnmowerPath& path, const RegionSet& shape,
                         double tool_width) {
  RegionSet target = erode(shape, tool_width / 2.0);
  if (target.empty()) return 1.0;

  Box box = bounding_box(target);
  const double step = tool_width / 4.0;
  const double reach = tool_width / 2.0 + 1e-9;

  long long total = 0, covered = 0;
  for (double y = box.min.y; y <= box.max.y + 1e-12; y += step) {
    for (double x = box.min.x; x <= box.max.x + 1e-12; x += step) {
      Point p{x, y};
      if (!contains_point(target, p)) continue;
      ++total;
      if (polyline_distance(path.waypoints, p) <= reach) ++covered;
    }
  }
  return total == 0 ? 1.0 : static_cast<double>(covered) / total;
}

}  // namespace sector_cover
