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

#ifndef SECTOR_COVER_TOURING_HPP
#define SECTOR_COVER_TOURING_HPP

#include <cstdint>
#include <vector>

#include "sector_cover/geometry.hpp"
#include "sector_cover/lawnmower.hpp"

namespace sector_cover {

struct RobotModel {
  double tool_width = 0.8;  // meters
  double v_max = 1.0;       // meters/second
  double accel = 0.5;       // meters/second^2, symmetric
};

// Rest-to-rest time over a straight segment under the trapezoidal profile:
// d >= v^2/a cruises at v_max, shorter distances peak below it.
double segment_time(double distance, const RobotModel& robot);

// Total time over a polyline, stopping at every interior vertex (each turn
// forces a stop).
double polyline_time(const std::vector<Point>& polyline,
                     const RobotModel& robot);

class UnreachableError : public std::runtime_error {
 public:
  UnreachableError(const Point& from, const Point& to);
  Point from;
  Point to;
};

// Shortest obstacle-free polyline between two points of the environment's
// free space; interior vertices are reflex vertices of the free space.
// Throws UnreachableError when the free space disconnects the endpoints.
std::vector<Point> visibility_path(const Environment& env, const Point& from,
                                   const Point& to);

struct GtspNode {
  int set_index = 0;
  int variant_index = 0;  // index into the sector's lawnmower variants
  Point entry;
  Point exit;
  double coverage_time = 0.0;
};

struct GtspInstance {
  std::vector<std::vector<GtspNode>> sets;
  // cost[u][v] for global node ids: transition time exit(u) -> entry(v)
  // plus coverage_time(v). Same-set entries are infinity (unused).
  std::vector<std::vector<double>> cost;
  std::vector<int> node_set;  // global node id -> set index
  std::vector<GtspNode> nodes;  // flattened, in set order

  int set_count() const { return static_cast<int>(sets.size()); }
};

GtspInstance build_gtsp(const std::vector<std::array<LawnmowerPath, 4>>& paths,
                        const Environment& env, const RobotModel& robot);

// Abstract tour: visiting order of sets and the node picked in each.
struct GtspSolution {
  std::vector<int> set_order;     // starts at set 0
  std::vector<int> node_choice;   // global node id per visited set
  double total_cost = 0.0;        // start coverage + sum of leg costs
};

// Open tour from set 0's cheapest-coverage node. Exact enumeration up to six
// sets, seeded nearest-neighbour + 2-opt + per-set node reselection beyond.
GtspSolution solve_gtsp_core(const GtspInstance& instance, uint64_t seed);

struct CoveragePlan {
  std::vector<int> order;                       // sector visiting order
  std::vector<PathVariant> chosen_variant;      // parallel to `order`
  std::vector<std::vector<Point>> transitions;  // between consecutive sectors
  double total_time = 0.0;
  double total_length = 0.0;
  double lawnmower_time = 0.0;
  double transition_time = 0.0;
};

// Rebuilds the chosen tour's geometry (lawnmower paths and transition
// polylines) and recomputes all totals from it.
CoveragePlan assemble_plan(const GtspSolution& solution,
                           const GtspInstance& instance,
                           const std::vector<std::array<LawnmowerPath, 4>>& paths,
                           const Environment& env, const RobotModel& robot);

CoveragePlan solve_gtsp(const GtspInstance& instance, uint64_t seed,
                        const std::vector<std::array<LawnmowerPath, 4>>& paths,
                        const Environment& env, const RobotModel& robot);

}  // namespace sector_cover

#endif  // SECTOR_COVER_TOURING_HPP
