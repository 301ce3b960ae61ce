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

// Seeded random polygons on integer grids.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "halfguard/geom.hpp"

namespace halfguard {

namespace detail {

struct IPt {
  std::int64_t x, y;
  friend bool operator==(const IPt&, const IPt&) = default;
  friend auto operator<=>(const IPt&, const IPt&) = default;
};

inline int iorient(const IPt& p, const IPt& q, const IPt& r) {
  const std::int64_t d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return (d > 0) - (d < 0);
}

inline bool ion_segment(const IPt& p, const IPt& a, const IPt& b) {
  return iorient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool isegments_meet(const IPt& a, const IPt& b, const IPt& c, const IPt& d) {
  const int o1 = iorient(a, b, c), o2 = iorient(a, b, d);
  const int o3 = iorient(c, d, a), o4 = iorient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return ion_segment(c, a, b) || ion_segment(d, a, b) || ion_segment(a, c, d) ||
         ion_segment(b, c, d);
}

inline std::vector<Point> to_points(const std::vector<IPt>& v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const IPt& p : v) out.push_back({Rat(p.x), Rat(p.y)});
  return out;
}

/// Distinct seeds per (n, seed) pair.
inline std::uint64_t mix_seed(std::uint64_t n, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), 0x68677531u};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

/// Repeatedly reverses the chain between two meeting non-adjacent sides.
inline bool untangle(std::vector<IPt>& v, std::size_t max_steps) {
  const std::size_t n = v.size();
  for (std::size_t step = 0; step < max_steps; ++step) {
    bool changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (isegments_meet(v[i], v[i + 1], v[j], v[(j + 1) % n])) {
          std::reverse(v.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       v.begin() + static_cast<std::ptrdiff_t>(j + 1));
          changed = true;
        }
      }
    }
    if (!changed) return true;
  }
  return false;
}

}  // namespace detail

/// Random simple polygon with n vertices on a 4n x 4n grid. The default
/// start is the radial order about the centroid; `shuffled_start` begins
/// from a random permutation instead, which yields non-star-shaped output.
inline Polygon gen_simple(std::size_t n, std::uint64_t seed, bool shuffled_start = false) {
  detail::check(n >= 3, ErrorCode::PreconditionViolated, "gen_simple needs n >= 3");
  std::mt19937_64 rng(detail::mix_seed(n, seed ^ (shuffled_start ? 0x5bd1e995ull : 0)));
  const std::int64_t grid = static_cast<std::int64_t>(4 * n);
  std::uniform_int_distribution<std::int64_t> coord(0, grid - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<detail::IPt> seen;
    std::vector<detail::IPt> pts;
    while (pts.size() < n) {
      detail::IPt p{coord(rng), coord(rng)};
      if (seen.insert(p).second) pts.push_back(p);
    }
    if (shuffled_start) {
      std::shuffle(pts.begin(), pts.end(), rng);
    } else {
      std::int64_t sx = 0, sy = 0;
      for (const auto& p : pts) {
        sx += p.x;
        sy += p.y;
      }
      const auto ni = static_cast<std::int64_t>(n);
      auto rel = [&](const detail::IPt& p) { return detail::IPt{ni * p.x - sx, ni * p.y - sy}; };
      auto half = [](const detail::IPt& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
      std::stable_sort(pts.begin(), pts.end(), [&](const detail::IPt& a, const detail::IPt& b) {
        const auto da = rel(a), db = rel(b);
        if (half(da) != half(db)) return half(da) < half(db);
        return da.x * db.y - da.y * db.x > 0;
      });
    }
    if (!detail::untangle(pts, 50 * n * n)) continue;
    try {
      return validate_polygon(detail::to_points(pts), false);
    } catch (const Error&) {
      continue;
    }
  }
  detail::fail(ErrorCode::GenerationFailed, "could not generate a simple polygon");
}

/// Random orthogonal polygon with n vertices, grown from a rectangle by
/// corner notches (+2 vertices) and edge notches or tabs (+4 vertices).
inline Polygon gen_orthogonal(std::size_t n, std::uint64_t seed) {
  detail::check(n >= 4 && n % 2 == 0, ErrorCode::PreconditionViolated,
                "gen_orthogonal needs an even n >= 4");
  std::mt19937_64 rng(detail::mix_seed(n, seed ^ 0x9e3779b97f4a7c15ull));
  auto uni = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const std::int64_t grid = static_cast<std::int64_t>(4 * n);
  std::vector<detail::IPt> v{{0, 0}, {uni(grid / 2, grid), 0}, {0, 0}, {0, 0}};
  const std::int64_t h = uni(grid / 2, grid);
  v[2] = {v[1].x, h};
  v[3] = {0, h};

  auto valid = [](const std::vector<detail::IPt>& w) {
    const std::vector<Point> pts = detail::to_points(w);
    if (sgn(signed_area2(pts)) <= 0) return false;
    try {
      return is_orthogonal(validate_polygon(pts, false));
    } catch (const Error&) {
      return false;
    }
  };
  auto sgn64 = [](std::int64_t x) { return static_cast<std::int64_t>((x > 0) - (x < 0)); };

  int failures = 0;
  for (int iter = 0; v.size() < n; ++iter) {
    detail::check(iter < 200000, ErrorCode::GenerationFailed,
                  "could not generate an orthogonal polygon");
    if (failures > 60) {
      for (auto& p : v) {
        p.x *= 2;
        p.y *= 2;
      }
      failures = 0;
    }
    const std::size_t m = v.size();
    const std::size_t remaining = n - m;
    const bool corner = remaining == 2 || uni(0, 1) == 0;
    std::vector<detail::IPt> w;
    if (corner) {
      const std::size_t i = static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(m) - 1));
      const detail::IPt& a = v[(i + m - 1) % m];
      const detail::IPt& c = v[i];
      const detail::IPt& b = v[(i + 1) % m];
      const std::int64_t la = std::max(std::abs(a.x - c.x), std::abs(a.y - c.y));
      const std::int64_t lb = std::max(std::abs(b.x - c.x), std::abs(b.y - c.y));
      if (la < 2 || lb < 2) {
        ++failures;
        continue;
      }
      const std::int64_t da = uni(1, la - 1), db = uni(1, lb - 1);
      const detail::IPt ua{sgn64(a.x - c.x), sgn64(a.y - c.y)};
      const detail::IPt ub{sgn64(b.x - c.x), sgn64(b.y - c.y)};
      const detail::IPt p1{c.x + da * ua.x, c.y + da * ua.y};
      const detail::IPt p2{c.x + db * ub.x, c.y + db * ub.y};
      const detail::IPt mid{p1.x + p2.x - c.x, p1.y + p2.y - c.y};
      w = v;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), {p1, mid, p2});
    } else {
      const std::size_t i = static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(m) - 1));
      const detail::IPt& a = v[i];
      const detail::IPt& b = v[(i + 1) % m];
      const std::int64_t len = std::max(std::abs(b.x - a.x), std::abs(b.y - a.y));
      if (len < 3) {
        ++failures;
        continue;
      }
      const std::int64_t t1 = uni(1, len - 2);
      const std::int64_t t2 = uni(t1 + 1, len - 1);
      const detail::IPt d{sgn64(b.x - a.x), sgn64(b.y - a.y)};
      // Left normal points into the CCW polygon; negative depth makes a tab.
      const detail::IPt nrm{-d.y, d.x};
      std::int64_t depth = uni(1, std::max<std::int64_t>(1, grid / 4));
      if (uni(0, 1) == 0) depth = -depth;
      const detail::IPt q1{a.x + t1 * d.x, a.y + t1 * d.y};
      const detail::IPt q2{a.x + t2 * d.x, a.y + t2 * d.y};
      const detail::IPt q1d{q1.x + depth * nrm.x, q1.y + depth * nrm.y};
      const detail::IPt q2d{q2.x + depth * nrm.x, q2.y + depth * nrm.y};
      w = v;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i + 1), {q1, q1d, q2d, q2});
    }
    if (valid(w)) {
      v = std::move(w);
      failures = 0;
    } else {
      ++failures;
    }
  }
  return validate_polygon(detail::to_points(v), false);
}

}  // namespace halfguard
