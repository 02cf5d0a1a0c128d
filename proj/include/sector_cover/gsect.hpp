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

#ifndef SECTOR_COVER_GSECT_HPP
#define SECTOR_COVER_GSECT_HPP

#include <optional>
#include <vector>

#include "sector_cover/geometry.hpp"
#include "sector_cover/orientations.hpp"
#include "sector_cover/rect_search.hpp"

namespace sector_cover {

struct DecompositionConfig {
  double gamma = 0.95;           // minimum coverage ratio
  double beta = 0.2;             // sector erosion radius, default l/4
  int max_sectors = 100;
  double min_sector_area = 0.64;  // l^2: anything thinner than the tool is
                                  // unusable
  double cell_size = 0.2;         // raster resolution, default l/4
};

// One sector of the decomposition. Rectangular straight out of the greedy
// loop; merging may fuse neighbours into non-rectangular shapes that are
// still covered by a single lawnmower sweep along `theta`.
struct CoverageRegion {
  RegionSet shape;
  double theta = 0.0;
  bool is_merged = false;

  double width() const { return extent_along(shape, theta); }
  double height() const { return extent_perpendicular(shape, theta); }
};

struct CoverageStats {
  double coverage_ratio = 0.0;
  double overlap_alpha = 0.0;
  double widest_width = 0.0;
  int sector_count = 0;
};

enum class DecompositionStatus { kReached, kTargetUnreached };

struct Decomposition {
  std::vector<CoverageRegion> sectors;
  RegionSet covered;  // union of sector shapes clipped to the environment
  CoverageStats stats;
  DecompositionStatus status = DecompositionStatus::kReached;
};

// Newly covered area the candidate would contribute:
// area((candidate ∩ W) \ covered).
double marginal_gain(const Decomposition& decomp, const Sector& candidate,
                     const Environment& env);

// Candidates generated and choice made at one greedy iteration; recorded for
// the greedy-dominance property checks.
struct GsectIteration {
  std::vector<Sector> candidates;
  std::vector<double> gains;
  int chosen = -1;
};

Decomposition gsect(const Environment& env, const OrientationSet& orientations,
                    const DecompositionConfig& cfg,
                    std::vector<GsectIteration>* trace = nullptr);

// Greedy set cover over an explicit finite candidate set; stops at
// gamma * |W|. Used by the approximation-factor experiments.
Decomposition greedy_cover_finite(const Environment& env,
                                  const std::vector<Sector>& candidates,
                                  double gamma);

// Coverage lines needed to sweep `shape` along `theta` with the given tool.
int line_count(const RegionSet& shape, double theta, double tool_width);

// Local merge pass: fuse a sector into an adjacent one when the union needs
// no more coverage lines than the two separately. Runs to a fixpoint.
Decomposition merge_sectors(const Decomposition& decomp, double tool_width,
                            const Environment& env);

// Recompute stats from the sector list (coverage, overlap, widest width).
CoverageStats compute_stats(const std::vector<CoverageRegion>& sectors,
                            const RegionSet& covered, const Environment& env);

}  // namespace sector_cover

#endif  // SECTOR_COVER_GSECT_HPP
