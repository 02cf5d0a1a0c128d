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

#ifndef SECTOR_COVER_RECT_SEARCH_HPP
#define SECTOR_COVER_RECT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sector_cover/geometry.hpp"

namespace sector_cover {

// Oriented rectangle; `theta` is the direction of the long side, in [0, pi).
struct Sector {
  Point center;
  double width = 0.0;   // long side
  double height = 0.0;  // short side
  double theta = 0.0;

  std::array<Point, 4> corners() const;
  Ring ring() const;
  RegionSet region() const;
  double area() const { return width * height; }
};

struct RasterGrid {
  Point origin;
  double cell_size = 0.0;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> occupancy;  // row-major, 1 = inside

  bool at(int row, int col) const { return occupancy[row * cols + col] != 0; }
  Point cell_min(int row, int col) const {
    return Point{origin.x + col * cell_size, origin.y + row * cell_size};
  }
};

// Axis-parallel rectangle of grid cells.
struct CellRect {
  int row = 0;
  int col = 0;
  int rows = 0;
  int cols = 0;
  long long cell_count() const {
    return static_cast<long long>(rows) * cols;
  }
  bool empty() const { return rows == 0 || cols == 0; }
};

// Occupancy by conservative sampling: a cell is inside when its center and
// all four corners are inside the region.
RasterGrid rasterize_region(const RegionSet& region, double cell_size);

// Maximum-area all-ones rectangle via the histogram-stack scan, O(cells).
CellRect largest_cell_rect(const RasterGrid& grid);

// Reference answer by exhaustive enumeration of all cell sub-rectangles
// (prefix sums). Exact but quadratic in the cell count; sized for the test
// grids it validates, not for production regions.
CellRect brute_force_rect_oracle(const RasterGrid& grid);

// Largest axis-parallel rectangle inscribed in the region, certified by a
// continuous containment check (area(rect \ region) < 1e-6 * area(rect)).
// Returns nullopt when no interior cell exists.
std::optional<Sector> largest_axis_rect(const RegionSet& region,
                                        double cell_size);

// Same search after rotating the region by -theta; the result is mapped back
// so its long side lies along theta or theta + pi/2 (mod pi).
std::optional<Sector> largest_rect_at(const RegionSet& region, double theta,
                                      double cell_size);

bool sector_contained(const Sector& sector, const RegionSet& region);

}  // namespace sector_cover

#endif  // SECTOR_COVER_RECT_SEARCH_HPP
