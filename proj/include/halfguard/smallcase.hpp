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

// Single-guard placements for convex polygons, quadrilaterals and pentagons.

#pragma once

#include <cstddef>
#include <vector>

#include "halfguard/geom.hpp"
#include "halfguard/guard.hpp"

namespace halfguard {

namespace detail {

/// A piece is covered by an entire guard at b when it is convex, or when it
/// is a quadrilateral whose vertex b and both neighbours of b are not reflex.
inline bool piece_ok(const Polygon& piece, const Point& b) {
  if (reflex_count(piece) == 0) return true;
  if (piece.size() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    if (piece[i] != b) continue;
    return !is_reflex(piece, i) && !is_reflex(piece, piece.prev(i)) &&
           !is_reflex(piece, piece.next(i));
  }
  return false;
}

/// Certificate for one entire guard: cutting from vertex v to the guard's
/// position leaves pieces that piece_ok accepts.
inline bool cut_certificate(const Polygon& p, const HalfGuard& g, std::size_t v) {
  if (!is_entire(p, g)) return false;
  if (g.pos == p[v]) return false;
  try {
    auto [a, b] = split_at_cut(p, chord_cut(p, v, g.pos));
    return piece_ok(a, g.pos) && piece_ok(b, g.pos);
  } catch (const Error&) {
    return false;
  }
}

inline std::vector<std::size_t> reflex_vertices(const Polygon& p) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_reflex(p, i)) r.push_back(i);
  }
  return r;
}

}  // namespace detail

inline HalfGuard convex_guard(const Polygon& p, const Point& pos) {
  detail::check(reflex_count(p) == 0, ErrorCode::PreconditionViolated,
                "polygon is not convex");
  return entire_at(p, pos);
}

/// One entire guard aligned with side s that monitors the quadrilateral.
inline HalfGuard quad_guard(const Polygon& q, std::size_t s) {
  detail::check(q.size() == 4, ErrorCode::InvalidSize, "quad_guard needs 4 sides");
  detail::check(s < 4, ErrorCode::PreconditionViolated, "bad side index");
  const Segment side = q.side(s);
  const auto reflex = detail::reflex_vertices(q);
  HalfGuard g = [&]() -> HalfGuard {
    if (reflex.empty()) return entire_at(q, midpoint(side.a, side.b));
    const std::size_t r = reflex.front();
    if (r == s || r == q.next(s)) {
      const std::size_t w = r == s ? q.next(s) : s;
      const RayHit hit = ray_first_hit(q, w, r);
      HalfGuard out = entire_at(q, hit.point);
      detail::check(detail::cut_certificate(q, out, r), ErrorCode::DegenerateConfiguration,
                    "quadrilateral cut does not split into triangles");
      return out;
    }
    // The reflex vertex is opposite one endpoint of s; guard that endpoint.
    const std::size_t b = (r == q.next(q.next(s))) ? s : q.next(s);
    HalfGuard out = entire_at(q, q[b], side);
    detail::check(detail::piece_ok(q, q[b]), ErrorCode::InternalError,
                  "quadrilateral endpoint guard is adjacent to the reflex vertex");
    return out;
  }();
  detail::check(is_aligned(q, g, side), ErrorCode::InternalError,
                "quadrilateral guard is not aligned with its side");
  return g;
}

/// One entire guard, never at a vertex, that monitors the pentagon.
inline HalfGuard pent_guard(const Polygon& p) {
  detail::check(p.size() == 5, ErrorCode::InvalidSize, "pent_guard needs 5 sides");
  const auto reflex = detail::reflex_vertices(p);
  auto at = [&](std::size_t i) { return i % 5; };

  if (reflex.empty()) return entire_at(p, midpoint(p[0], p[1]));

  // Shoots from v along (v - from); accepts the hit if it lands in the
  // relative interior of side `want` (any side when want is absent) and the
  // cut certificate holds.
  auto attempt = [&](std::size_t from, std::size_t v,
                     std::optional<std::size_t> want) -> std::optional<HalfGuard> {
    RayHit hit;
    try {
      hit = ray_first_hit(p, from, v);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateRay) return std::nullopt;
      throw;
    }
    if (hit.where.at_vertex()) return std::nullopt;
    if (want && hit.where.index != *want) return std::nullopt;
    HalfGuard g = entire_at(p, hit.point);
    if (!detail::cut_certificate(p, g, v)) return std::nullopt;
    return g;
  };

  if (reflex.size() == 1) {
    const std::size_t v = reflex[0];
    const std::size_t u = at(v + 4), w = at(v + 1);
    if (auto g = attempt(u, v, std::nullopt)) return *g;
    if (auto g = attempt(w, v, std::nullopt)) return *g;
    // Both extensions end at the two far vertices; cut to the midpoint of the
    // side between them instead.
    const RayHit h1 = ray_first_hit(p, u, v);
    const RayHit h2 = ray_first_hit(p, w, v);
    detail::check(h1.where.at_vertex() && h2.where.at_vertex(),
                  ErrorCode::DegenerateConfiguration, "unexpected pentagon ray hits");
    const std::size_t x = h1.where.index, y = h2.where.index;
    detail::check(p.next(x) == y || p.next(y) == x, ErrorCode::DegenerateConfiguration,
                  "extension hits are not adjacent");
    HalfGuard g = entire_at(p, midpoint(p[x], p[y]));
    detail::check(detail::cut_certificate(p, g, v), ErrorCode::DegenerateConfiguration,
                  "midpoint cut does not give two convex pieces");
    return g;
  }

  detail::check(reflex.size() == 2, ErrorCode::DegenerateConfiguration,
                "pentagon with more than two reflex vertices");
  const std::size_t r1 = reflex[0], r2 = reflex[1];
  std::optional<HalfGuard> g;
  if (at(r2 + 5 - r1) == 1 || at(r1 + 5 - r2) == 1) {
    // Adjacent reflex pair [u, v, w, x, y] with v, w reflex.
    const std::size_t v = at(r2 + 5 - r1) == 1 ? r1 : r2;
    const std::size_t u = at(v + 4), w = at(v + 1), x = at(v + 2), y = at(v + 3);
    g = attempt(u, v, x);
    if (!g) g = attempt(x, w, y);  // mirror image of the same construction
  } else {
    // Non-adjacent pair [u, v, w, x, y] with u, w reflex.
    const std::size_t u = at(r2 + 5 - r1) == 2 ? r1 : r2;
    const std::size_t v = at(u + 1), w = at(u + 2), x = at(u + 3);
    g = attempt(v, w, x);
    if (!g) g = attempt(v, u, x);
  }
  detail::check(g.has_value(), ErrorCode::DegenerateConfiguration,
                "pentagon extension ray does not land where expected");
  return *g;
}

}  // namespace halfguard
