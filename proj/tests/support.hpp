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

#ifndef SECTOR_COVER_TESTS_SUPPORT_HPP
#define SECTOR_COVER_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "sector_cover/geometry.hpp"

namespace testutil {

// splitmix64-based generator so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

inline sector_cover::Ring rect_ring(double x0, double y0, double w, double h) {
  return {{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}};
}

// [(0,0),(4,0),(4,2),(2,2),(2,4),(0,4)] -- two 2x4 arms sharing a 2x2 corner.
inline sector_cover::Ring lshape_ring() {
  return {{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}};
}

}  // namespace testutil

#endif  // SECTOR_COVER_TESTS_SUPPORT_HPP
