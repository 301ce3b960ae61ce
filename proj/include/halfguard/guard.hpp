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

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "halfguard/geom.hpp"

namespace halfguard {

/// Closed half-plane a*x + b*y + c >= 0 with coprime integer coefficients.
class HalfPlane {
 public:
  HalfPlane() : a_(0), b_(1), c_(0) {}

  HalfPlane(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    detail::check(sgn(a_) != 0 || sgn(b_) != 0, ErrorCode::PreconditionViolated,
                  "half-plane normal is zero");
    normalize();
  }

  /// Points on or to the left of the directed line p -> q.
  static HalfPlane left_of(const Point& p, const Point& q) {
    detail::check(p != q, ErrorCode::PreconditionViolated,
                  "half-plane needs two distinct points");
    const Rat a = p.y - q.y;
    const Rat b = q.x - p.x;
    const Rat c = -(a * p.x + b * p.y);
    Int l = 1;
    for (const Rat* r : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->get_den_mpz_t());
    auto scaled = [&](const Rat& r) -> Int { return r.get_num() * (l / r.get_den()); };
    return HalfPlane(scaled(a), scaled(b), scaled(c));
  }

  /// Boundary through p with direction d; region on the left of d.
  static HalfPlane through(const Point& p, const Point& d) { return left_of(p, p + d); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  Rat eval(const Point& p) const { return Rat(a_) * p.x + Rat(b_) * p.y + Rat(c_); }
  bool contains(const Point& p) const { return sgn(eval(p)) >= 0; }
  bool on_boundary(const Point& p) const { return sgn(eval(p)) == 0; }
  /// Sign of the normal component of direction d (positive = inward).
  int side_of_direction(const Point& d) const {
    return sgn(Rat(a_) * d.x + Rat(b_) * d.y);
  }
  Point normal() const { return {Rat(a_), Rat(b_)}; }
  /// Boundary direction with the region on its left.
  Point direction() const { return {Rat(b_), Rat(-a_)}; }
  HalfPlane flipped() const { return HalfPlane(-a_, -b_, -c_); }

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;

 private:
  void normalize() {
    Int g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  Int a_, b_, c_;
};

struct HalfGuard {
  Point pos;
  HalfPlane hp;

  HalfGuard(Point p, HalfPlane h) : pos(std::move(p)), hp(std::move(h)) {
    detail::check(hp.on_boundary(pos), ErrorCode::PreconditionViolated,
                  "guard position is not on its half-plane boundary");
  }

  friend bool operator==(const HalfGuard&, const HalfGuard&) = default;
};

inline bool sees(const Polygon& p, const HalfGuard& g, const Point& y) {
  detail::check(contains(p, y), ErrorCode::PointOutsidePolygon,
                "target point lies outside the polygon");
  return g.hp.contains(y) && segment_in_polygon(p, g.pos, y);
}

// ---- angular helpers ----------------------------------------------------

namespace detail {

/// 0 if the CCW angle from ref to u lies in [0, pi), else 1.
inline int half_from(const Point& ref, const Point& u) {
  const int c = sgn(cross(ref, u));
  return (c > 0 || (c == 0 && sgn(dot(ref, u)) > 0)) ? 0 : 1;
}

/// Compares CCW angles measured from ref: -1, 0 or +1.
inline int compare_angle(const Point& ref, const Point& u, const Point& v) {
  const int hu = half_from(ref, u);
  const int hv = half_from(ref, v);
  if (hu != hv) return hu < hv ? -1 : 1;
  return -sgn(cross(u, v));
}

inline bool same_direction(const Point& u, const Point& v) {
  return sgn(cross(u, v)) == 0 && sgn(dot(u, v)) > 0;
}

}  // namespace detail

/// Interior cone of P at a point q in the closed polygon. `full` when q is
/// strictly inside; otherwise the cone sweeps CCW from `first` to `second`.
struct InteriorCone {
  bool full = false;
  Point first;
  Point second;

  bool strictly_contains(const Point& d) const {
    if (full) return true;
    if (detail::same_direction(d, first)) return false;
    return detail::compare_angle(first, d, second) < 0;
  }
  bool closed_contains(const Point& d) const {
    if (full) return true;
    return detail::compare_angle(first, d, second) <= 0;
  }
};

inline InteriorCone interior_cone(const Polygon& p, const Point& q) {
  auto hit = find_on_boundary(p, q);
  if (!hit) {
    detail::check(locate(p, q) == Location::Inside, ErrorCode::PointOutsidePolygon,
                  "point lies outside the polygon");
    return {true, {}, {}};
  }
  const std::size_t i = hit->index;
  if (hit->at_vertex()) return {false, p[p.next(i)] - q, p[p.prev(i)] - q};
  return {false, p[p.next(i)] - q, p[i] - q};
}

// ---- entire guards ------------------------------------------------------

inline bool is_entire(const Polygon& p, const HalfGuard& g) {
  auto hit = find_on_boundary(p, g.pos);
  detail::check(hit.has_value(), ErrorCode::NotOnBoundary,
                "guard is not on the polygon boundary");
  const InteriorCone cone = interior_cone(p, g.pos);
  const int turn = sgn(cross(cone.first, cone.second));
  if (turn > 0) {
    return g.hp.side_of_direction(cone.first) >= 0 &&
           g.hp.side_of_direction(cone.second) >= 0;
  }
  if (turn < 0) return false;
  // Half-plane cone: H must coincide with it.
  const Point inward{-cone.first.y, cone.first.x};
  return g.hp.side_of_direction(cone.first) == 0 && g.hp.side_of_direction(inward) > 0;
}

/// An entire guard at a boundary point. A preferred line through pos is
/// honoured at convex vertices.
inline HalfGuard entire_at(const Polygon& p, const Point& pos,
                           const std::optional<Segment>& preferred = std::nullopt) {
  auto hit = find_on_boundary(p, pos);
  detail::check(hit.has_value(), ErrorCode::NotOnBoundary,
                "entire guard position is not on the boundary");
  const std::size_t i = hit->index;
  if (!hit->at_vertex()) return {pos, HalfPlane::left_of(p[i], p[p.next(i)])};
  switch (classify_vertex(p, i)) {
    case VertexClass::Reflex:
      detail::fail(ErrorCode::ReflexVertex, "no entire guard at a reflex vertex");
    case VertexClass::Straight:
      return {pos, HalfPlane::left_of(p[p.prev(i)], p[p.next(i)])};
    case VertexClass::Convex:
      break;
  }
  if (preferred) {
    detail::check(preferred->a != preferred->b, ErrorCode::PreconditionViolated,
                  "preferred line is degenerate");
    detail::check(orientation(preferred->a, preferred->b, pos) == 0,
                  ErrorCode::ConeNotContained, "preferred line misses the guard");
    HalfGuard g{pos, HalfPlane::through(pos, preferred->b - preferred->a)};
    if (is_entire(p, g)) return g;
    g.hp = g.hp.flipped();
    if (is_entire(p, g)) return g;
    detail::fail(ErrorCode::ConeNotContained,
                 "interior cone does not fit either side of the preferred line");
  }
  HalfGuard g{pos, HalfPlane::through(pos, p[p.next(i)] - p[p.prev(i)])};
  detail::check(is_entire(p, g), ErrorCode::InternalError, "chord half-plane not entire");
  return g;
}

inline bool is_aligned(const Polygon& p, const HalfGuard& g, const Segment& t) {
  if (orientation(t.a, t.b, g.pos) != 0) return false;
  if (!sees(p, g, t.a) || !sees(p, g, t.b)) return false;
  if (on_segment(g.pos, t.a, t.b)) {
    return g.hp.on_boundary(t.a) && g.hp.on_boundary(t.b);
  }
  return true;
}

// ---- visibility region ---------------------------------------------------

/// Closed set of points a guard sees: a fan of closed triangles around the
/// guard plus zero-width antennas, together with its boundary ring.
struct VisRegion {
  Point apex;
  std::vector<std::array<Point, 3>> fan;  // (apex, A, B), CCW
  std::vector<Segment> antennas;          // apex -> farthest point per ray
  std::vector<Point> ring;                // weakly simple, CCW

  bool contains(const Point& y) const {
    for (const auto& t : fan) {
      if (orientation(t[0], t[1], y) >= 0 && orientation(t[1], t[2], y) >= 0 &&
          orientation(t[2], t[0], y) >= 0)
        return true;
    }
    for (const auto& s : antennas) {
      if (on_segment(y, s.a, s.b)) return true;
    }
    return y == apex;
  }
};

namespace detail {

inline std::optional<Point> line_hit(const Point& q, const Point& d, const Point& c,
                                     const Point& e) {
  const Point r = e - c;
  const Rat den = cross(d, r);
  if (sgn(den) == 0) return std::nullopt;
  return q + (cross(c - q, r) / den) * d;
}

}  // namespace detail

inline VisRegion visibility_region(const Polygon& p, const HalfGuard& g) {
  const Point& q = g.pos;
  const InteriorCone cone = interior_cone(p, q);
  VisRegion out;
  out.apex = q;

  std::vector<Point> dirs;
  for (const Point& w : p.vertices()) {
    if (w != q) dirs.push_back(w - q);
  }
  const Point hd = g.hp.direction();
  const Point hn = g.hp.normal();
  for (const Point& d : {hd, Point{-hd.x, -hd.y}, hn, Point{-hn.x, -hn.y}}) dirs.push_back(d);
  const Point ref{Rat(1), Rat(0)};
  std::sort(dirs.begin(), dirs.end(), [&](const Point& u, const Point& v) {
    return detail::compare_angle(ref, u, v) < 0;
  });
  dirs.erase(std::unique(dirs.begin(), dirs.end(), detail::same_direction), dirs.end());
  if (dirs.size() > 1 && detail::same_direction(dirs.front(), dirs.back())) dirs.pop_back();

  const std::size_t k = dirs.size();
  struct Gap {
    bool allowed = false;
    Point a, b;  // hits along the bounding directions
  };
  std::vector<Gap> gaps(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Point& d0 = dirs[i];
    const Point& d1 = dirs[(i + 1) % k];
    const Point m = d0 + d1;
    if (g.hp.side_of_direction(m) <= 0 || !cone.strictly_contains(m)) continue;
    const std::vector<Rat> ts = ray_contacts(p, q, m);
    detail::check(!ts.empty(), ErrorCode::InternalError, "sweep ray escaped the polygon");
    const Point h = q + ts.front() * m;
    auto where = find_on_boundary(p, h);
    detail::check(where && !where->at_vertex(), ErrorCode::InternalError,
                  "sweep ray hit a vertex between critical directions");
    const Point& c = p[where->index];
    const Point& e = p[p.next(where->index)];
    auto a = detail::line_hit(q, d0, c, e);
    auto b = detail::line_hit(q, d1, c, e);
    detail::check(a && b, ErrorCode::InternalError, "sweep edge parallel to a critical ray");
    gaps[i] = {true, *a, *b};
    // Consecutive wedges ending on the same far segment form one triangle.
    if (!out.fan.empty() && i > 0 && gaps[i - 1].allowed && out.fan.back()[2] == *a &&
        orientation(out.fan.back()[1], *a, *b) == 0) {
      out.fan.back()[2] = *b;
    } else {
      out.fan.push_back({q, *a, *b});
    }
  }

  std::size_t start = 0;
  while (start < k && gaps[start].allowed) ++start;
  detail::check(start < k, ErrorCode::InternalError, "half-plane admits every direction");
  std::vector<Point> ring;
  for (std::size_t step = 1; step <= k; ++step) {
    const std::size_t i = (start + step) % k;  // direction index
    const Gap& before = gaps[(i + k - 1) % k];
    const Gap& after = gaps[i];
    const Point& d = dirs[i];
    if (g.hp.side_of_direction(d) < 0 || !cone.closed_contains(d)) {
      ring.push_back(q);
      continue;
    }
    const Point f = q + reach(p, q, d) * d;
    if (f != q) out.antennas.push_back({q, f});
    ring.push_back(before.allowed ? before.b : q);
    ring.push_back(f);
    ring.push_back(after.allowed ? after.a : q);
  }
  for (const Point& pt : ring) {
    if (out.ring.empty() || out.ring.back() != pt) out.ring.push_back(pt);
  }
  while (out.ring.size() > 1 && out.ring.front() == out.ring.back()) out.ring.pop_back();
  return out;
}

}  // namespace halfguard
