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

#ifndef SECTOR_COVER_LAWNMOWER_HPP
#define SECTOR_COVER_LAWNMOWER_HPP

#include <array>
#include <string>
#include <vector>

#include "sector_cover/geometry.hpp"
#include "sector_cover/gsect.hpp"

namespace sector_cover {

// The two serpentines (mirrored connection pattern) times two traversal
// directions give at most four directed paths per sector.
enum class PathVariant { kAForward, kAReverse, kBForward, kBReverse };

std::string variant_name(PathVariant variant);

struct LawnmowerPath {
  std::vector<Point> waypoints;
  PathVariant variant = PathVariant::kAForward;
  int sector_index = -1;
  double length = 0.0;

  const Point& entry() const { return waypoints.front(); }
  const Point& exit() const { return waypoints.back(); }
};

// Sweep lines parallel to the region's theta, spaced one tool width apart at
// offsets l/2, 3l/2, ... with the final line clamped to (extent - l/2).
// Lines are clipped to the region and inset l/2 along their direction;
// sub-tool leftovers degenerate to point visits. Regions thinner than the
// tool in both extents produce a single point-visit path.
std::array<LawnmowerPath, 4> generate_lawnmower(const CoverageRegion& region,
                                                double tool_width,
                                                int sector_index = -1);

// Lemma bound on the serpentine length of a w x h rectangle: w * ceil(h/l).
double lemma1_bound(double w, double h, double tool_width);

// Fraction of l/4-spaced samples of erode(shape, l/2) that lie within l/2 of
// the path. The generator targets >= 0.99.
double coverage_fraction(const LawnmowerPath& path, const RegionSet& shape,
                         double tool_width);

double path_length(const std::vector<Point>& waypoints);

}  // namespace sector_cover

#endif  // SECTOR_COVER_LAWNMOWER_HPP
