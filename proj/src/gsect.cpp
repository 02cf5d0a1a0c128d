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

#include "sector_cover/gsect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sector_cover {
namespace {

constexpr double kGainTie = 1e-9;

double clipped_gain(const RegionSet& covered, const RegionSet& candidate,
                    const RegionSet& world) {
  RegionSet in_world = region_intersection(candidate, world);
  if (covered.empty()) return area(in_world);
  return area(region_difference(in_world, covered));
}

// Deterministic candidate preference: higher gain, then smaller orientation,
// then lexicographically smaller center.
bool better_candidate(double gain_a, const Sector& a, double theta_a,
                      double gain_b, const Sector& b, double theta_b) {
  if (gain_a > gain_b + kGainTie) return true;
  if (gain_b > gain_a + kGainTie) return false;
  if (theta_a != theta_b) return theta_a < theta_b;
  if (a.center.x != b.center.x) return a.center.x < b.center.x;
  return a.center.y < b.center.y;
}

}  // namespace

double marginal_gain(const Decomposition& decomp, const Sector& candidate,
                     const Environment& env) {
  return clipped_gain(decomp.covered, candidate.region(), free_region(env));
}

CoverageStats compute_stats(const std::vector<CoverageRegion>& sectors,
                            const RegionSet& covered, const Environment& env) {
  CoverageStats stats;
  stats.sector_count = static_cast<int>(sectors.size());
  double world_area = area(free_region(env));
  double covered_area = area(covered);
  double sum_shape_areas = 0.0;
  for (const CoverageRegion& sector : sectors) {
    sum_shape_areas += area(sector.shape);
    stats.widest_width = std::max(stats.widest_width, sector.width());
  }
  if (world_area > 0) {
    stats.coverage_ratio = covered_area / world_area;
    stats.overlap_alpha =
        std::max(0.0, (sum_shape_areas - covered_area) / world_area);
  }
  return stats;
}

Decomposition gsect(const Environment& env, const OrientationSet& orientations,
                    const DecompositionConfig& cfg,
                    std::vector<GsectIteration>* trace) {
  if (orientations.empty())
    throw std::invalid_argument("gsect: empty orientation set");

  const RegionSet world = free_region(env);
  const double total = area(world);

  Decomposition out;
  RegionSet remaining = world;
  double covered_area = 0.0;

  while (static_cast<int>(out.sectors.size()) < cfg.max_sectors) {
    if (covered_area >= cfg.gamma * total - 1e-12) break;

    GsectIteration iter;
    for (double theta : orientations.angles) {
      std::optional<Sector> candidate =
          largest_rect_at(remaining, theta, cfg.cell_size);
      if (!candidate) continue;
      iter.candidates.push_back(*candidate);
      iter.gains.push_back(
          clipped_gain(out.covered, candidate->region(), world));
    }
    if (iter.candidates.empty()) break;

    int best = 0;
    for (size_t i = 1; i < iter.candidates.size(); ++i) {
      if (better_candidate(iter.gains[i], iter.candidates[i],
                           iter.candidates[i].theta, iter.gains[best],
                           iter.candidates[best], iter.candidates[best].theta))
        best = static_cast<int>(i);
    }
    iter.chosen = best;
    if (trace) trace->push_back(iter);

    if (iter.gains[best] < cfg.min_sector_area) break;

    const Sector& chosen = iter.candidates[best];
    RegionSet shape = chosen.region();
    out.sectors.push_back(CoverageRegion{shape, chosen.theta, false});
    out.covered =
        region_union(out.covered, region_intersection(shape, world));
    covered_area = area(out.covered);

    RegionSet eroded = erode(shape, cfg.beta);
    remaining = region_difference(remaining, eroded);
  }

  out.status = covered_area >= cfg.gamma * total - 1e-12
                   ? DecompositionStatus::kReached
                   : DecompositionStatus::kTargetUnreached;
  out.stats = compute_stats(out.sectors, out.covered, env);
  return out;
}

Decomposition greedy_cover_finite(const Environment& env,
                                  const std::vector<Sector>& candidates,
                                  double gamma) {
  const RegionSet world = free_region(env);
  const double total = area(world);

  Decomposition out;
  std::vector<bool> used(candidates.size(), false);
  double covered_area = 0.0;

  while (covered_area < gamma * total - 1e-12) {
    int best = -1;
    double best_gain = 0.0;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (used[i]) continue;
      double gain = clipped_gain(out.covered, candidates[i].region(), world);
      if (best < 0 || gain > best_gain + kGainTie) {
        best = static_cast<int>(i);
        best_gain = gain;
      }
    }
    if (best < 0 || best_gain <= 1e-12) break;
    used[best] = true;
    out.sectors.push_back(CoverageRegion{candidates[best].region(),
                                         candidates[best].theta, false});
    out.covered = region_union(
        out.covered, region_intersection(candidates[best].region(), world));
    covered_area = area(out.covered);
  }

  out.status = covered_area >= gamma * total - 1e-12
                   ? DecompositionStatus::kReached
                   : DecompositionStatus::kTargetUnreached;
  out.stats = compute_stats(out.sectors, out.covered, env);
  return out;
}

int line_count(const RegionSet& shape, double theta, double tool_width) {
  double extent = extent_perpendicular(shape, theta);
  if (extent <= tool_width) return 1;
  return static_cast<int>(std::ceil(extent / tool_width - 1e-7));
}

Decomposition merge_sectors(const Decomposition& decomp, double tool_width,
                            const Environment& env) {
  const double adjacency_tol = tool_width / 10.0;
  std::vector<CoverageRegion> sectors = decomp.sectors;

  bool merged_any = true;
  while (merged_any) {
    merged_any = false;

    std::vector<size_t> order(sectors.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return area(sectors[a].shape) < area(sectors[b].shape);
    });

    for (size_t idx : order) {
      const CoverageRegion& q = sectors[idx];
      int lines_q = line_count(q.shape, q.theta, tool_width);

      int best = -1;
      double best_area = 0.0;
      for (size_t j = 0; j < sectors.size(); ++j) {
        if (j == idx) continue;
        if (region_distance(q.shape, sectors[j].shape) > adjacency_tol)
          continue;
        const CoverageRegion& adj = sectors[j];
        RegionSet merged_shape = region_union(q.shape, adj.shape);
        int lines_merged = line_count(merged_shape, adj.theta, tool_width);
        int lines_adj = line_count(adj.shape, adj.theta, tool_width);
        if (lines_merged > lines_q + lines_adj) continue;
        double adj_area = area(adj.shape);
        if (best < 0 || adj_area > best_area) {
          best = static_cast<int>(j);
          best_area = adj_area;
        }
      }

      if (best >= 0) {
        CoverageRegion merged;
        merged.shape = region_union(q.shape, sectors[best].shape);
        merged.theta = sectors[best].theta;
        merged.is_merged = true;
        sectors[best] = std::move(merged);
        sectors.erase(sectors.begin() + static_cast<long>(idx));
        merged_any = true;
        break;  // areas changed; restart the pass
      }
    }
  }

  Decomposition out;
  out.sectors = std::move(sectors);
  const RegionSet world = free_region(env);
  for (const CoverageRegion& sector : out.sectors)
    out.covered =
        region_union(out.covered, region_intersection(sector.shape, world));
  out.status = decomp.status;
  out.stats = compute_stats(out.sectors, out.covered, env);
  return out;
}

}  // namespace sector_cover
