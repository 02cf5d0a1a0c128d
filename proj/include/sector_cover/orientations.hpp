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

#ifndef SECTOR_COVER_ORIENTATIONS_HPP
#define SECTOR_COVER_ORIENTATIONS_HPP

#include <vector>

#include "sector_cover/geometry.hpp"

namespace sector_cover {

inline constexpr double kDefaultClusterTol = 0.0349;  // ~2 degrees
inline constexpr int kDefaultMaxOrientations = 8;

// Candidate coverage orientations, sorted ascending in [0, pi). The weight of
// an angle is the total boundary length voting for its cluster.
struct OrientationSet {
  std::vector<double> angles;
  std::vector<double> weights;
  bool empty() const { return angles.empty(); }
};

// Clusters the directions (mod pi) of all boundary and hole edges, weighted
// by edge length, and returns the strongest `max_count` cluster centroids.
// Clustering happens on the doubled angle so the 0/pi seam does not split a
// cluster.
OrientationSet extract_orientations(const Environment& env,
                                    double cluster_tol = kDefaultClusterTol,
                                    int max_count = kDefaultMaxOrientations);

}  // namespace sector_cover

#endif  // SECTOR_COVER_ORIENTATIONS_HPP
