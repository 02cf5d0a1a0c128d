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

#include "sector_cover/rect_search.hpp"

#include <algorithm>
#include <cmath>

namespace sector_cover {
namespace {

constexpr double kLineEps = 1e-9;

bool spans_cover(const std::vector<Span>& spans, double x) {
  for (const Span& s : spans) {
    if (x < s.lo - kLineEps) return false;
    if (x <= s.hi + kLineEps) return true;
  }
  return false;
}

Sector axis_sector(double x0, double y0, double x1, double y1) {
  Sector s;
  s.center = Point{0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  double dx = x1 - x0, dy = y1 - y0;
  if (dx >= dy) {
    s.width = dx;
    s.height = dy;
    s.theta = 0.0;
  } else {
    s.width = dy;
    s.height = dx;
    s.theta = M_PI / 2.0;
  }
  return s;
}

double normalize_half_turn(double angle) {
  double a = std::fmod(angle, M_PI);
  if (a < 0) a += M_PI;
  if (a >= M_PI) a -= M_PI;
  return a;
}

}  // namespace

std::array<Point, 4> Sector::corners() const {
  double c = std::cos(theta), s = std::sin(theta);
  Point u{c * width / 2.0, s * width / 2.0};
  Point v{-s * height / 2.0, c * height / 2.0};
  return {Point{center.x - u.x - v.x, center.y - u.y - v.y},
          Point{center.x + u.x - v.x, center.y + u.y - v.y},
          Point{center.x + u.x + v.x, center.y + u.y + v.y},
          Point{center.x - u.x + v.x, center.y - u.y + v.y}};
}

Ring Sector::ring() const {
  auto c = corners();
  return Ring(c.begin(), c.end());
}

RegionSet Sector::region() const { return region_from_ring(ring()); }

RasterGrid rasterize_region(const RegionSet& region, double cell_size) {
  RasterGrid grid;
  grid.cell_size = cell_size;
  if (region.empty()) return grid;

  Box box = bounding_box(region);
  grid.origin = box.min;
  grid.cols = std::max(1, static_cast<int>(
                              std::ceil(box.width() / cell_size - 1e-9)));
  grid.rows = std::max(1, static_cast<int>(
                              std::ceil(box.height() / cell_size - 1e-9)));
  grid.occupancy.assign(static_cast<size_t>(grid.rows) * grid.cols, 0);

  std::vector<std::vector<Span>> border_lines(grid.rows + 1);
  std::vector<std::vector<Span>> center_lines(grid.rows);
  for (int r = 0; r <= grid.rows; ++r)
    border_lines[r] = horizontal_spans(region, grid.origin.y + r * cell_size);
  for (int r = 0; r < grid.rows; ++r)
    center_lines[r] =
        horizontal_spans(region, grid.origin.y + (r + 0.5) * cell_size);

  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      double x0 = grid.origin.x + c * cell_size;
      double x1 = x0 + cell_size;
      double xm = 0.5 * (x0 + x1);
      bool inside = spans_cover(center_lines[r], xm) &&
                    spans_cover(border_lines[r], x0) &&
                    spans_cover(border_lines[r], x1) &&
                    spans_cover(border_lines[r + 1], x0) &&
                    spans_cover(border_lines[r + 1], x1);
      if (inside) grid.occupancy[r * grid.cols + c] = 1;
    }
  }
  return grid;
}

CellRect largest_cell_rect(const RasterGrid& grid) {
  CellRect best;
  if (grid.rows == 0 || grid.cols == 0) return best;

  std::vector<int> heights(grid.cols, 0);
  std::vector<int> stack;
  stack.reserve(grid.cols + 1);

  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c)
      heights[c] = grid.at(r, c) ? heights[c] + 1 : 0;

    stack.clear();
    for (int c = 0; c <= grid.cols; ++c) {
      int h = (c < grid.cols) ? heights[c] : 0;
      while (!stack.empty() && heights[stack.back()] >= h) {
        int height = heights[stack.back()];
        stack.pop_back();
        int left = stack.empty() ? 0 : stack.back() + 1;
        long long area = static_cast<long long>(height) * (c - left);
        if (area > best.cell_count()) {
          best.row = r - height + 1;
          best.col = left;
          best.rows = height;
          best.cols = c - left;
        }
      }
      stack.push_back(c);
    }
  }
  return best;
}

CellRect brute_force_rect_oracle(const RasterGrid& grid) {
  CellRect best;
  const int R = grid.rows, C = grid.cols;
  if (R == 0 || C == 0) return best;

  // prefix[r][c] = number of occupied cells in rows [0,r) x cols [0,c)
  std::vector<std::vector<long long>> prefix(
      R + 1, std::vector<long long>(C + 1, 0));
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c)
      prefix[r + 1][c + 1] = prefix[r][c + 1] + prefix[r + 1][c] -
                             prefix[r][c] + (grid.at(r, c) ? 1 : 0);

  for (int r0 = 0; r0 < R; ++r0) {
    for (int r1 = r0; r1 < R; ++r1) {
      for (int c0 = 0; c0 < C; ++c0) {
        for (int c1 = c0; c1 < C; ++c1) {
          long long cells =
              static_cast<long long>(r1 - r0 + 1) * (c1 - c0 + 1);
          if (cells <= best.cell_count()) continue;
          long long filled = prefix[r1 + 1][c1 + 1] - prefix[r0][c1 + 1] -
                             prefix[r1 + 1][c0] + prefix[r0][c0];
          if (filled == cells)
            best = CellRect{r0, c0, r1 - r0 + 1, c1 - c0 + 1};
        }
      }
    }
  }
  return best;
}

bool sector_contained(const Sector& sector, const RegionSet& region) {
  if (sector.width <= 0 || sector.height <= 0) return false;
  RegionSet outside = region_difference(sector.region(), region);
  return area(outside) < 1e-6 * sector.area();
}

std::optional<Sector> largest_axis_rect(const RegionSet& region,
                                        double cell_size) {
  if (region.empty()) return std::nullopt;
  RasterGrid grid = rasterize_region(region, cell_size);
  CellRect cells = largest_cell_rect(grid);
  if (cells.empty()) return std::nullopt;

  double x0 = grid.origin.x + cells.col * cell_size;
  double x1 = grid.origin.x + (cells.col + cells.cols) * cell_size;
  double y0 = grid.origin.y + cells.row * cell_size;
  double y1 = grid.origin.y + (cells.row + cells.rows) * cell_size;

  // The raster answer is sampled; shrink one cell per side until the
  // continuous containment certificate holds.
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (x1 - x0 <= 0 || y1 - y0 <= 0) return std::nullopt;
    Sector candidate = axis_sector(x0, y0, x1, y1);
    if (sector_contained(candidate, region)) return candidate;
    x0 += cell_size;
    x1 -= cell_size;
    y0 += cell_size;
    y1 -= cell_size;
  }
  return std::nullopt;
}

std::optional<Sector> largest_rect_at(const RegionSet& region, double theta,
                                      double cell_size) {
  if (theta == 0.0) return largest_axis_rect(region, cell_size);
  RegionSet rotated = rotate(region, -theta, Point{0, 0});
  std::optional<Sector> found = largest_axis_rect(rotated, cell_size);
  if (!found) return std::nullopt;
  found->center = rotate_point(found->center, theta, Point{0, 0});
  found->theta = normalize_half_turn(found->theta + theta);
  return found;
}

}  // namespace sector_cover
