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

#include "sector_cover/orientations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sector_cover {
namespace {

struct EdgeVote {
  double doubled;  // 2 * (edge angle mod pi), in [0, 2*pi)
  double weight;   // edge length
};

struct Cluster {
  double weight = 0.0;
  double sin_sum = 0.0;  // weighted, in doubled-angle space
  double cos_sum = 0.0;

  double centroid_half_angle() const {
    double a = 0.5 * std::atan2(sin_sum, cos_sum);
    if (a < 0) a += M_PI;
    if (a >= M_PI) a -= M_PI;
    return a;
  }
};

}  // namespace

OrientationSet extract_orientations(const Environment& env, double cluster_tol,
                                    int max_count) {
  std::vector<EdgeVote> votes;
  auto collect = [&votes](const Ring& ring) {
    for (size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      double len = distance(a, b);
      if (len < kGeomEps) continue;
      double angle = std::atan2(b.y - a.y, b.x - a.x);
      if (angle < 0) angle += M_PI;
      if (angle >= M_PI) angle -= M_PI;
      votes.push_back({2.0 * angle, len});
    }
  };
  collect(env.outer);
  for (const Ring& hole : env.holes) collect(hole);

  std::sort(votes.begin(), votes.end(),
            [](const EdgeVote& a, const EdgeVote& b) {
              return a.doubled < b.doubled;
            });

  // Single-link clustering on the circle: split where the angular gap between
  // consecutive votes exceeds the doubled tolerance.
  const double gap = 2.0 * cluster_tol;
  const size_t n = votes.size();
  std::vector<size_t> breaks;
  for (size_t i = 0; i < n; ++i) {
    double cur = votes[i].doubled;
    double next = (i + 1 < n) ? votes[i + 1].doubled : votes[0].doubled + 2 * M_PI;
    if (next - cur > gap) breaks.push_back(i + 1);
  }

  std::vector<Cluster> clusters;
  if (breaks.empty()) {
    // Everything within tolerance of its neighbor; one wraparound cluster.
    Cluster c;
    for (const EdgeVote& v : votes) {
      c.weight += v.weight;
      c.sin_sum += v.weight * std::sin(v.doubled);
      c.cos_sum += v.weight * std::cos(v.doubled);
    }
    clusters.push_back(c);
  } else {
    // Cluster k spans votes [breaks[k-1], breaks[k]) with wraparound from the
    // last break to the first.
    for (size_t k = 0; k < breaks.size(); ++k) {
      size_t begin = breaks[k];
      size_t end = (k + 1 < breaks.size()) ? breaks[k + 1] : breaks[0] + n;
      Cluster c;
      for (size_t i = begin; i < end; ++i) {
        const EdgeVote& v = votes[i % n];
        c.weight += v.weight;
        c.sin_sum += v.weight * std::sin(v.doubled);
        c.cos_sum += v.weight * std::cos(v.doubled);
      }
      clusters.push_back(c);
    }
  }

  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return a.centroid_half_angle() < b.centroid_half_angle();
            });
  if (static_cast<int>(clusters.size()) > max_count)
    clusters.resize(max_count);

  std::vector<std::pair<double, double>> result;
  for (const Cluster& c : clusters)
    result.emplace_back(c.centroid_half_angle(), c.weight);
  std::sort(result.begin(), result.end());

  OrientationSet out;
  for (const auto& [angle, weight] : result) {
    out.angles.push_back(angle);
    out.weights.push_back(weight);
  }
  return out;
}

}  // namespace sector_cover
