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

// Recursive placement of cooperative half-guard sets: floor(n/2) - 1 guards
// for simple polygons and n/2 - 2 for orthogonal ones.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfguard/decomp.hpp"
#include "halfguard/geom.hpp"
#include "halfguard/guard.hpp"
#include "halfguard/smallcase.hpp"

namespace halfguard {

/// Guards plus a tag per guard naming the construction step that placed it.
struct GuardSet {
  std::vector<HalfGuard> guards;
  std::vector<std::string> provenance;

  std::size_t size() const { return guards.size(); }
  bool empty() const { return guards.empty(); }

  void add(HalfGuard g, std::string tag) {
    for (const HalfGuard& h : guards) {
      detail::check(!(h == g), ErrorCode::InternalError, "duplicate guard");
    }
    guards.push_back(std::move(g));
    provenance.push_back(std::move(tag));
  }

  void append(const GuardSet& other) {
    for (std::size_t i = 0; i < other.size(); ++i) add(other.guards[i], other.provenance[i]);
  }
};

/// Adds an entire guard to a set that already monitors P.
inline GuardSet attach_entire(const Polygon& p, GuardSet set, const HalfGuard& g,
                              std::string tag = "attach") {
  detail::check(is_entire(p, g), ErrorCode::NotEntire, "guard is not entire in the polygon");
  set.add(g, std::move(tag));
  return set;
}

namespace detail {

inline std::optional<std::size_t> aligned_guard(const Polygon& p, const GuardSet& set,
                                                const Segment& s) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (is_aligned(p, set.guards[i], s)) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Union of two s-aligned sets for polygons meeting along s.
inline GuardSet merge_aligned(const Polygon& p, const Polygon& p1, const GuardSet& g1,
                              const Polygon& p2, const GuardSet& g2, const Segment& s) {
  const auto i1 = detail::aligned_guard(p1, g1, s);
  const auto i2 = detail::aligned_guard(p2, g2, s);
  detail::check(i1.has_value(), ErrorCode::AlignmentMissing,
                "first set has no guard aligned with the shared segment");
  detail::check(i2.has_value(), ErrorCode::AlignmentMissing,
                "second set has no guard aligned with the shared segment");
  const HalfGuard& a = g1.guards[*i1];
  const HalfGuard& b = g2.guards[*i2];
  detail::check(sees(p, a, b.pos) && sees(p, b, a.pos), ErrorCode::InternalError,
                "aligned guards do not see each other");
  GuardSet out = g1;
  out.append(g2);
  return out;
}

inline GuardSet place_odd(const Polygon& p);
inline GuardSet place_even_aligned(const Polygon& p, std::size_t s);

namespace detail {

inline std::size_t side_index(const Polygon& p, const Point& a, const Point& b) {
  auto i = find_side(p, a, b);
  check(i.has_value(), ErrorCode::InternalError, "expected side is missing");
  return *i;
}

inline GuardSet odd_or_empty(const Polygon& p) {
  return p.size() == 3 ? GuardSet{} : place_odd(p);
}

inline void expect_count(const GuardSet& g, std::size_t want, const char* what) {
  check(g.size() == want, ErrorCode::InternalError,
        std::string(what) + ": produced " + std::to_string(g.size()) + " guards, expected " +
            std::to_string(want));
}

inline bool has_vertex(const Polygon& p, const Point& q) {
  for (const Point& w : p.vertices()) {
    if (w == q) return true;
  }
  return false;
}

inline GuardSet even_case_e1(const Polygon& p, std::size_t s) {
  const IndexPair d = odd_odd_diagonal(p, s);
  const std::size_t e = (d.first == s || d.first == p.next(s)) ? d.first : d.second;
  const std::size_t w = e == d.first ? d.second : d.first;
  const HalfGuard g = entire_at(p, p[e], p.side(s));
  auto [p1, p2] = split_at_cut(p, diagonal_cut(p, e, w));
  check(p1.size() % 2 == 1 && p2.size() % 2 == 1 && p1.size() + p2.size() == p.size() + 2,
        ErrorCode::InternalError, "odd/odd diagonal split has wrong side counts");
  GuardSet out = odd_or_empty(p1);
  check(is_entire(p1, g) && is_entire(p2, g), ErrorCode::NotEntire,
        "endpoint guard is not entire in a piece");
  out.add(g, "Aligned/convex-side");
  out.append(odd_or_empty(p2));
  return out;
}

}  // namespace detail

/// (n-2)/2 guards for even n, one of them aligned with side s.
inline GuardSet place_even_aligned(const Polygon& p, std::size_t s) {
  const std::size_t n = p.size();
  detail::check(n >= 4 && n % 2 == 0, ErrorCode::PreconditionViolated,
                "place_even_aligned needs an even polygon with at least 4 sides");
  detail::check(s < n, ErrorCode::PreconditionViolated, "bad side index");
  const Segment side = p.side(s);
  GuardSet out;
  if (n == 4) {
    out.add(quad_guard(p, s), "Quad");
  } else if (!is_reflex(p, s) && !is_reflex(p, p.next(s))) {
    out = detail::even_case_e1(p, s);
  } else {
    // v is the reflex endpoint; the second endpoint is preferred.
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    if (is_reflex(p, p.next(s))) candidates.emplace_back(s, p.next(s));
    if (is_reflex(p, s)) candidates.emplace_back(p.next(s), s);
    std::optional<Cut> cut;
    for (auto [u, v] : candidates) {
      try {
        cut = uv_cut(p, u, v);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateRay) throw;
      }
    }
    detail::check(cut.has_value(), ErrorCode::DegenerateRay,
                  "no usable extension ray from a reflex endpoint");
    const Point u = p[cut->u];
    const Point v = cut->seg.a;
    const Point b = cut->seg.b;
    auto [first, second] = split_at_cut(p, *cut);
    // A carries the side u..b (v dropped), B carries the side v-b.
    const bool first_is_a = !detail::has_vertex(first, v);
    const Polygon& a = first_is_a ? first : second;
    const Polygon& bp = first_is_a ? second : first;
    const std::size_t na = a.size(), nb = bp.size();
    const Segment vb{v, b};
    if (na % 2 == 1 && nb % 2 == 1) {
      const HalfGuard g = entire_at(p, b);
      out = attach_entire(a, detail::odd_or_empty(a), g, "Aligned/odd-split");
      GuardSet rest = detail::odd_or_empty(bp);
      detail::check(is_entire(bp, g), ErrorCode::NotEntire, "cut guard not entire in piece");
      out.append(rest);
    } else if (na % 2 == 0 && nb % 2 == 0) {
      const GuardSet ga = place_even_aligned(a, detail::side_index(a, u, b));
      const GuardSet gb = place_even_aligned(bp, detail::side_index(bp, v, b));
      out = merge_aligned(p, a, ga, bp, gb, vb);
    } else if (na % 2 == 1) {
      const HalfGuard g = entire_at(a, v);
      GuardSet ga = attach_entire(a, detail::odd_or_empty(a), g, "Aligned/mixed-split");
      const GuardSet gb = place_even_aligned(bp, detail::side_index(bp, v, b));
      out = merge_aligned(p, a, ga, bp, gb, vb);
    } else {
      const HalfGuard g = entire_at(bp, v, Segment{u, b});
      GuardSet gb = attach_entire(bp, detail::odd_or_empty(bp), g, "Aligned/mixed-split");
      const GuardSet ga = place_even_aligned(a, detail::side_index(a, u, b));
      out = merge_aligned(p, a, ga, bp, gb, vb);
    }
  }
  detail::check(detail::aligned_guard(p, out, side).has_value(), ErrorCode::InternalError,
                "even placement lost alignment with its side");
  detail::expect_count(out, (n - 2) / 2, "place_even_aligned");
  return out;
}

/// (n-3)/2 guards for odd n >= 5.
inline GuardSet place_odd(const Polygon& p) {
  const std::size_t n = p.size();
  detail::check(n >= 5 && n % 2 == 1, ErrorCode::PreconditionViolated,
                "place_odd needs an odd polygon with at least 5 sides");
  const PentHub hub = pent_hub(p);
  const HalfGuard g = pent_guard(hub.hub);
  GuardSet out;
  out.add(g, "Pent");
  for (const Attachment& att : hub.attachments) {
    const Segment& s = att.shared;
    if (orientation(s.a, s.b, g.pos) != 0) {
      const Polygon grown = attach_triangle(att.polygon, s, g.pos);
      const GuardSet sub = place_odd(grown);
      detail::check(is_entire(grown, g), ErrorCode::NotEntire,
                    "hub guard not entire in the grown attachment");
      out.append(sub);
    } else {
      const GuardSet sub =
          place_even_aligned(att.polygon, detail::side_index(att.polygon, s.a, s.b));
      GuardSet hub_set;
      hub_set.add(g, "Pent");
      merge_aligned(p, hub.hub, hub_set, att.polygon, sub, s);
      out.append(sub);
    }
  }
  detail::expect_count(out, (n - 3) / 2, "place_odd");
  return out;
}

/// floor(n/2) - 1 guards for any polygon with n >= 4.
inline GuardSet place_any(const Polygon& p) {
  detail::check(p.size() >= 4, ErrorCode::PreconditionViolated,
                "placement needs at least 4 sides; use convex_guard for triangles");
  return p.size() % 2 == 0 ? place_even_aligned(p, 0) : place_odd(p);
}

// ---- orthogonal polygons --------------------------------------------------

namespace detail {

inline Polygon drop_straight(const Polygon& p) {
  return validate_polygon(without_straight(p.vertices()), false);
}

inline GuardSet place_orthogonal_rec(const Polygon& p) {
  const std::size_t n = p.size();
  check(n >= 6 && n % 2 == 0, ErrorCode::InternalError, "orthogonal piece too small");
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_reflex(p, v)) continue;
    for (std::size_t u : {p.next(v), p.prev(v)}) {
      RayHit hit;
      try {
        hit = ray_first_hit(p, u, v);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateRay) continue;
        throw;
      }
      if (hit.runs_along_boundary) continue;
      if (hit.where.at_vertex() && !is_reflex(p, hit.where.index)) continue;

      auto [r1, r2] = split_at_cut(p, uv_cut(p, u, v));
      const Polygon p1 = drop_straight(r1);
      const Polygon p2 = drop_straight(r2);
      check(is_orthogonal(p1) && is_orthogonal(p2), ErrorCode::InternalError,
            "orthogonal cut produced a non-orthogonal piece");
      auto sub = [](const Polygon& q) { return q.size() > 4 ? place_orthogonal_rec(q) : GuardSet{}; };
      GuardSet out;
      if (!hit.where.at_vertex()) {
        check(p1.size() + p2.size() == n + 2, ErrorCode::InternalError, "edge cut count");
        const HalfGuard g = entire_at(p, hit.point);
        out = attach_entire(p1, sub(p1), g, "Orth/edge");
        check(is_entire(p2, g), ErrorCode::NotEntire, "cut guard not entire in piece");
        out.append(sub(p2));
      } else {
        check(p1.size() + p2.size() == n, ErrorCode::InternalError, "vertex cut count");
        const Point mid = midpoint(p[v], hit.point);
        const GuardSet g1 = attach_entire(p1, sub(p1), entire_at(p1, mid), "Orth/vertex");
        const GuardSet g2 = attach_entire(p2, sub(p2), entire_at(p2, mid), "Orth/vertex");
        out = merge_aligned(p, p1, g1, p2, g2, Segment{p[v], hit.point});
      }
      expect_count(out, n / 2 - 2, "place_orthogonal");
      return out;
    }
  }
  fail(ErrorCode::DegenerateRay, "no reflex vertex yields a usable orthogonal cut");
}

}  // namespace detail

/// n/2 - 2 guards for an orthogonal polygon with n >= 6.
inline GuardSet place_orthogonal(const Polygon& p) {
  detail::check(is_orthogonal(p), ErrorCode::NotOrthogonal, "polygon is not orthogonal");
  detail::check(p.size() >= 6, ErrorCode::PreconditionViolated,
                "orthogonal placement needs at least 6 sides");
  return detail::place_orthogonal_rec(p);
}

}  // namespace halfguard
