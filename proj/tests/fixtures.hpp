// Copyright 2026 The halfguard Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Shared polygons for the unit tests.

#pragma once

#include <string>
#include <vector>

#include "halfguard/halfguard.hpp"

namespace hgtest {

using halfguard::Point;
using halfguard::Polygon;
using halfguard::Rat;

inline Point pt(long x, long y) { return {Rat(x), Rat(y)}; }
inline Point pt(const Rat& x, const Rat& y) { return {x, y}; }

inline Polygon poly(std::vector<Point> v) { return halfguard::validate_polygon(std::move(v)); }

inline Polygon sq() { return poly({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}); }
inline Polygon l6() { return poly({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)}); }
inline Polygon pent_r() { return poly({pt(0, 0), pt(4, 0), pt(4, 3), pt(2, 1), pt(0, 3)}); }
inline Polygon qd() { return poly({pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 1)}); }
inline Polygon convex_pentagon() {
  return poly({pt(0, 0), pt(4, 0), pt(6, 3), pt(3, 6), pt(-1, 3)});
}
inline Polygon adjacent_reflex_pentagon() {
  return poly({pt(-3, 0), pt(0, 0), pt(-2, 3), pt(Rat(-7, 4), Rat(2)), pt(Rat(-2), Rat(1, 2))});
}
inline Polygon convex_hexagon() {
  return poly({pt(2, 0), pt(4, 0), pt(6, 2), pt(4, 4), pt(2, 4), pt(0, 2)});
}
inline Polygon convex_heptagon() {
  return poly({pt(2, 0), pt(5, 0), pt(7, 2), pt(6, 5), pt(3, 6), pt(0, 5), pt(0, 2)});
}

inline std::string data(const std::string& name) { return std::string(HG_DATA_DIR) + "/" + name; }

inline Polygon ortho26() { return halfguard::load_instance(data("ortho26.json")); }

inline bool has_code(const auto& fn, halfguard::ErrorCode code) {
  try {
    fn();
  } catch (const halfguard::Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace hgtest
