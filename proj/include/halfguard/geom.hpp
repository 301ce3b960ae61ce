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

// Exact planar primitives: rational points, simple polygons, point location,
// segment containment, ray shooting and cut-based splitting.
//
// Every predicate is evaluated in exact rational arithmetic. Polygons are
// stored counter-clockwise; "inside" always means the closed region unless a
// function name says otherwise.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halfguard/error.hpp"

namespace halfguard {

using Int = mpz_class;
using Rat = mpq_class;

/// n/d in canonical form.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline int sign(const Rat& r) { return sgn(r); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const Rat& s, const Point& a) {
    return {s * a.x, s * a.y};
  }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x.get_str() << ',' << p.y.get_str() << ')';
  }
};

struct Segment {
  Point a;
  Point b;

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

/// Same segment irrespective of direction.
inline bool same_segment(const Segment& s, const Segment& t) {
  return (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
}

inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

/// Sign of (q - p) x (r - p): +1 left turn, 0 collinear, -1 right turn.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  Rat d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(d);
}

inline Point midpoint(const Point& a, const Point& b) {
  Rat half(1, 2);
  return {(a.x + b.x) * half, (a.y + b.y) * half};
}

inline Point lerp(const Point& a, const Point& b, const Rat& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// p lies on the closed segment [a, b].
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed segments [a, b] and [c, d] share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
         (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d));
}

/// Parameters t in [t_lo, t_hi] (t_hi absent = unbounded) at which the
/// parametric line origin + t*dir touches the closed segment [c, d].
/// Collinear overlaps contribute both ends of the overlap. `proper` is set
/// when the contact is a transversal crossing of the segment's relative
/// interior at a parameter strictly inside (t_lo, t_hi).
struct LineContacts {
  std::vector<Rat> params;
  bool proper = false;
};

inline LineContacts line_contacts(const Point& origin, const Point& dir,
                                  const Point& c, const Point& d,
                                  const Rat& t_lo,
                                  const std::optional<Rat>& t_hi) {
  LineContacts out;
  const Point q = d - c;
  const Point ca = c - origin;
  const Rat denom = cross(dir, q);
  auto in_range = [&](const Rat& t) {
    return t >= t_lo && (!t_hi || t <= *t_hi);
  };
  if (sgn(denom) == 0) {
    if (sgn(cross(ca, dir)) != 0) return out;  // parallel, disjoint lines
    const Rat dd = dot(dir, dir);
    Rat tc = dot(ca, dir) / dd;
    Rat td = dot(d - origin, dir) / dd;
    if (tc > td) std::swap(tc, td);
    Rat lo = std::max(tc, t_lo);
    Rat hi = t_hi ? std::min(td, *t_hi) : td;
    if (lo > hi) return out;
    out.params.push_back(lo);
    if (hi != lo) out.params.push_back(hi);
    return out;
  }
  Rat t = cross(ca, q) / denom;
  Rat s = cross(ca, dir) / denom;
  if (s < 0 || s > 1 || !in_range(t)) return out;
  out.params.push_back(t);
  out.proper = s > 0 && s < 1 && t > t_lo && (!t_hi || t < *t_hi);
  return out;
}

enum class VertexClass { Convex, Reflex, Straight };

inline std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Convex: return "Convex";
    case VertexClass::Reflex: return "Reflex";
    case VertexClass::Straight: return "Straight";
  }
  return "?";
}

enum class Location { Outside, Boundary, Inside };

class Polygon;
Polygon validate_polygon(std::vector<Point> vertices, bool allow_straight);

/// Simple polygon, counter-clockwise. Construct through validate_polygon.
class Polygon {
 public:
  std::size_t size() const { return v_.size(); }
  const std::vector<Point>& vertices() const { return v_; }
  const Point& operator[](std::size_t i) const { return v_[i % v_.size()]; }
  std::size_t next(std::size_t i) const { return (i + 1) % v_.size(); }
  std::size_t prev(std::size_t i) const {
    return (i + v_.size() - 1) % v_.size();
  }
  /// Side i runs from vertex i to vertex i+1.
  Segment side(std::size_t i) const { return {v_[i], v_[next(i)]}; }
  bool allows_straight() const { return allow_straight_; }

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.v_ == b.v_;
  }

 private:
  friend Polygon validate_polygon(std::vector<Point> vertices,
                                  bool allow_straight);
  Polygon(std::vector<Point> v, bool allow_straight)
      : v_(std::move(v)), allow_straight_(allow_straight) {}

  std::vector<Point> v_;
  bool allow_straight_ = false;
};

/// Twice the signed area (positive for CCW).
inline Rat signed_area2(const std::vector<Point>& v) {
  Rat acc = 0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    acc += cross(v[i], v[(i + 1) % n]);
  }
  return acc;
}

inline Rat area(const Polygon& p) { return signed_area2(p.vertices()) / 2; }

/// Checks simplicity exactly and normalizes to CCW order.
inline Polygon validate_polygon(std::vector<Point> v,
                                bool allow_straight = false) {
  const std::size_t n = v.size();
  detail::check(n >= 3, ErrorCode::TooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  {
    std::vector<Point> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < n; ++i) {
      if (sorted[i] == sorted[i - 1]) {
        std::ostringstream os;
        os << "vertex " << sorted[i] << " repeated";
        detail::fail(ErrorCode::RepeatedVertex, os.str());
      }
    }
  }
  const Rat a2 = signed_area2(v);
  detail::check(sgn(a2) != 0, ErrorCode::NotSimple, "polygon has zero area");
  if (sgn(a2) < 0) std::reverse(v.begin(), v.end());

  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[(i + n - 1) % n];
    const Point& w = v[i];
    const Point& c = v[(i + 1) % n];
    if (orientation(a, w, c) == 0) {
      detail::check(sgn(dot(a - w, c - w)) < 0, ErrorCode::NotSimple,
                    "edges fold back at vertex " + std::to_string(i));
      detail::check(allow_straight, ErrorCode::DegenerateStraightVertex,
                    "straight vertex at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through vertex 0
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        detail::fail(ErrorCode::NotSimple,
                     "sides " + std::to_string(i) + " and " +
                         std::to_string(j) + " intersect");
      }
    }
  }
  return Polygon(std::move(v), allow_straight);
}

inline VertexClass classify_vertex(const Polygon& p, std::size_t i) {
  switch (orientation(p[p.prev(i)], p[i], p[p.next(i)])) {
    case 1: return VertexClass::Convex;
    case -1: return VertexClass::Reflex;
    default: return VertexClass::Straight;
  }
}

inline bool is_reflex(const Polygon& p, std::size_t i) {
  return classify_vertex(p, i) == VertexClass::Reflex;
}

inline bool is_convex(const Polygon& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_reflex(p, i)) return false;
  }
  return true;
}

inline std::size_t reflex_count(const Polygon& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += is_reflex(p, i) ? 1 : 0;
  return c;
}

/// Every side axis-parallel and every vertex turning by 90 degrees.
inline bool is_orthogonal(const Polygon& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment s = p.side(i);
    if (s.a.x != s.b.x && s.a.y != s.b.y) return false;
    if (classify_vertex(p, i) == VertexClass::Straight) return false;
  }
  return true;
}

/// Where a point sits on the boundary: at a vertex, or in the relative
/// interior of a side.
struct BoundaryHit {
  enum class Kind { AtVertex, OnEdgeInterior };
  Kind kind;
  std::size_t index;

  bool at_vertex() const { return kind == Kind::AtVertex; }
  friend bool operator==(const BoundaryHit&, const BoundaryHit&) = default;
};

inline std::optional<BoundaryHit> find_on_boundary(const Polygon& p,
                                                   const Point& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == q) return BoundaryHit{BoundaryHit::Kind::AtVertex, i};
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (on_segment(q, p[i], p[p.next(i)])) {
      return BoundaryHit{BoundaryHit::Kind::OnEdgeInterior, i};
    }
  }
  return std::nullopt;
}

/// Exact point location against the closed polygon.
inline Location locate(const Polygon& p, const Point& q) {
  const std::size_t n = p.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % n];
    if (on_segment(q, a, b)) return Location::Boundary;
    const bool a_above = a.y > q.y;
    const bool b_above = b.y > q.y;
    if (a_above == b_above) continue;
    // Upward edge crosses the rightward ray iff q is left of it.
    const int o = orientation(a, b, q);
    if ((b_above && o > 0) || (!b_above && o < 0)) inside = !inside;
  }
  return inside ? Location::Inside : Location::Outside;
}

inline bool contains(const Polygon& p, const Point& q) {
  return locate(p, q) != Location::Outside;
}

/// Sorted, de-duplicated parameters in [0, 1] where [a, b] touches the
/// boundary. Returns nullopt as soon as a transversal crossing through a
/// side's relative interior is found.
inline std::optional<std::vector<Rat>> boundary_contacts(const Polygon& p,
                                                         const Point& a,
                                                         const Point& b) {
  std::vector<Rat> params;
  const Point dir = b - a;
  const Rat zero = 0;
  const std::optional<Rat> one = Rat(1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    LineContacts lc = line_contacts(a, dir, p[i], p[p.next(i)], zero, one);
    if (lc.proper) return std::nullopt;
    for (auto& t : lc.params) params.push_back(std::move(t));
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return params;
}

/// Every point of the closed segment lies in the closed polygon.
inline bool segment_in_polygon(const Polygon& p, const Point& a,
                               const Point& b) {
  if (a == b) return contains(p, a);
  auto contacts = boundary_contacts(p, a, b);
  if (!contacts) return false;
  std::vector<Rat>& ts = *contacts;
  if (ts.empty() || ts.front() != 0) ts.insert(ts.begin(), Rat(0));
  if (ts.back() != 1) ts.push_back(Rat(1));
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Rat mid = (ts[i] + ts[i + 1]) / 2;
    if (locate(p, lerp(a, b, mid)) == Location::Outside) return false;
  }
  return true;
}

inline bool segment_in_polygon(const Polygon& p, const Segment& s) {
  return segment_in_polygon(p, s.a, s.b);
}

/// The relative interior of [a, b] lies strictly inside the polygon.
inline bool open_segment_interior(const Polygon& p, const Point& a,
                                  const Point& b) {
  if (a == b) return false;
  auto contacts = boundary_contacts(p, a, b);
  if (!contacts) return false;
  for (const Rat& t : *contacts) {
    if (t > 0 && t < 1) return false;
  }
  return locate(p, midpoint(a, b)) == Location::Inside;
}

/// Parameters t > 0 where origin + t*dir touches the boundary, sorted.
inline std::vector<Rat> ray_contacts(const Polygon& p, const Point& origin,
                                     const Point& dir) {
  std::vector<Rat> params;
  const Rat zero = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    LineContacts lc =
        line_contacts(origin, dir, p[i], p[p.next(i)], zero, std::nullopt);
    for (auto& t : lc.params) {
      if (sgn(t) > 0) params.push_back(std::move(t));
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return params;
}

/// sup { t >= 0 : origin + s*dir in P for all s in [0, t] }. The origin must
/// lie in the closed polygon.
inline Rat reach(const Polygon& p, const Point& origin, const Point& dir) {
  std::vector<Rat> ts = ray_contacts(p, origin, dir);
  Rat last = 0;
  for (const Rat& t : ts) {
    const Rat mid = (last + t) / 2;
    if (locate(p, origin + mid * dir) == Location::Outside) return last;
    last = t;
  }
  return last;
}

/// First boundary point hit by the ray from vertex v in direction v - u.
struct RayHit {
  Point point;
  BoundaryHit where;
  /// The hit is a vertex and one of its sides continues along the ray.
  bool runs_along_boundary = false;
};

inline RayHit ray_first_hit(const Polygon& p, std::size_t u, std::size_t v) {
  detail::check(u < p.size() && v < p.size() &&
                    (p.next(u) == v || p.prev(u) == v),
                ErrorCode::PreconditionViolated,
                "ray_first_hit needs adjacent vertices");
  const Point& origin = p[v];
  const Point dir = origin - p[u];
  std::vector<Rat> ts = ray_contacts(p, origin, dir);
  detail::check(!ts.empty(), ErrorCode::DegenerateRay,
                "ray does not meet the boundary");
  const Rat& t1 = ts.front();
  if (locate(p, origin + (t1 / 2) * dir) != Location::Inside) {
    detail::fail(ErrorCode::DegenerateRay,
                 "ray from vertex " + std::to_string(v) +
                     " does not enter the interior");
  }
  RayHit hit;
  hit.point = origin + t1 * dir;
  auto where = find_on_boundary(p, hit.point);
  detail::check(where.has_value(), ErrorCode::InternalError,
                "ray hit point is not on the boundary");
  hit.where = *where;
  if (hit.where.at_vertex()) {
    const std::size_t b = hit.where.index;
    for (std::size_t nb : {p.prev(b), p.next(b)}) {
      const Point e = p[nb] - hit.point;
      if (sgn(cross(e, dir)) == 0 && sgn(dot(e, dir)) > 0) {
        hit.runs_along_boundary = true;
      }
    }
  }
  return hit;
}

/// A cut: a segment between two boundary points whose relative interior is
/// strictly inside the polygon.
struct Cut {
  enum class Kind { Diagonal, UvCut };
  Segment seg;
  Kind kind = Kind::Diagonal;
  /// Diagonal: from vertex `from` to a boundary point (vertex `to` for a
  /// true diagonal).
  /// UvCut: `from` is the reflex vertex v and `u` its neighbour.
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t u = 0;
  BoundaryHit hit{BoundaryHit::Kind::AtVertex, 0};
};

inline Cut diagonal_cut(const Polygon& p, std::size_t i, std::size_t j) {
  Cut c;
  c.seg = {p[i], p[j]};
  c.kind = Cut::Kind::Diagonal;
  c.from = i;
  c.to = j;
  c.hit = {BoundaryHit::Kind::AtVertex, j};
  return c;
}

/// The cut from reflex vertex v along the extension of side u-v.
inline Cut uv_cut(const Polygon& p, std::size_t u, std::size_t v) {
  detail::check(is_reflex(p, v), ErrorCode::DegenerateRay,
                "uv-cut needs a reflex vertex");
  RayHit h = ray_first_hit(p, u, v);
  Cut c;
  c.seg = {p[v], h.point};
  c.kind = Cut::Kind::UvCut;
  c.from = v;
  c.u = u;
  c.hit = h.where;
  c.to = h.where.index;
  return c;
}

/// A cut from vertex `from` to an arbitrary boundary point b.
inline Cut chord_cut(const Polygon& p, std::size_t from, const Point& b) {
  auto where = find_on_boundary(p, b);
  detail::check(where.has_value(), ErrorCode::NotOnBoundary,
                "chord end is not on the boundary");
  Cut c;
  c.seg = {p[from], b};
  c.kind = Cut::Kind::Diagonal;
  c.from = from;
  c.to = where->index;
  c.hit = *where;
  return c;
}

/// Removes vertices whose interior angle is exactly 180 degrees.
inline std::vector<Point> without_straight(const std::vector<Point>& v) {
  std::vector<Point> out = v;
  bool changed = true;
  while (changed && out.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t n = out.size();
      if (orientation(out[(i + n - 1) % n], out[i], out[(i + 1) % n]) == 0) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

/// Splits along a cut. The first piece runs counter-clockwise from the cut's
/// start vertex to its end; the second piece is the rest. The start vertex is
/// dropped from a piece in which it becomes straight (always the case for a
/// uv-cut); all other vertices are kept even when straight.
inline std::pair<Polygon, Polygon> split_at_cut(const Polygon& p,
                                                const Cut& c) {
  const std::size_t n = p.size();
  detail::check(c.from < n && c.hit.index < n, ErrorCode::InvalidCut,
                "cut indices out of range");
  detail::check(open_segment_interior(p, c.seg.a, c.seg.b),
                ErrorCode::InvalidCut,
                "cut relative interior is not strictly inside the polygon");
  detail::check(p[c.from] == c.seg.a, ErrorCode::InvalidCut,
                "cut does not start at its vertex");

  std::vector<Point> ext;
  ext.reserve(n + 1);
  std::size_t end = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ext.push_back(p[i]);
    if (i == c.from) start = ext.size() - 1;
    if (c.hit.at_vertex() && i == c.hit.index) end = ext.size() - 1;
    if (!c.hit.at_vertex() && i == c.hit.index) {
      ext.push_back(c.seg.b);
      end = ext.size() - 1;
    }
  }
  detail::check(ext[end] == c.seg.b, ErrorCode::InvalidCut,
                "cut end does not match its boundary location");
  const std::size_t m = ext.size();
  auto chain = [&](std::size_t from, std::size_t to) {
    std::vector<Point> out;
    for (std::size_t i = from;; i = (i + 1) % m) {
      out.push_back(ext[i]);
      if (i == to) break;
    }
    return out;
  };
  std::vector<Point> first = chain(start, end);
  std::vector<Point> second = chain(end, start);
  // v sits at first.front() and second.back(); it is dropped where straight.
  bool dropped = false;
  if (first.size() > 3 && orientation(first.back(), first[0], first[1]) == 0) {
    first.erase(first.begin());
    dropped = true;
  } else if (second.size() > 3 && orientation(second[second.size() - 2],
                                              second.back(), second.front()) == 0) {
    second.pop_back();
    dropped = true;
  }
  detail::check(dropped || c.kind != Cut::Kind::UvCut, ErrorCode::InvalidCut,
                "uv-cut does not extend a side");
  return {validate_polygon(std::move(first), true),
          validate_polygon(std::move(second), true)};
}

/// Index of the side joining a and b (either direction).
inline std::optional<std::size_t> find_side(const Polygon& p, const Point& a,
                                            const Point& b) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (same_segment(p.side(i), {a, b})) return i;
  }
  return std::nullopt;
}

/// Glues the triangle (shared.a, shared.b, apex) onto the side `shared`.
inline Polygon attach_triangle(const Polygon& p, const Segment& shared,
                               const Point& apex) {
  auto side = find_side(p, shared.a, shared.b);
  detail::check(side.has_value(), ErrorCode::PreconditionViolated,
                "shared segment is not a side of the polygon");
  const std::size_t i = *side;
  const int o = orientation(p[i], p[p.next(i)], apex);
  detail::check(o != 0, ErrorCode::DegenerateTriangle,
                "apex is collinear with the shared side");
  detail::check(o < 0, ErrorCode::OverlapError,
                "apex lies on the interior side of the shared side");
  std::vector<Point> v = p.vertices();
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(i + 1), apex);
  try {
    return validate_polygon(std::move(v), true);
  } catch (const Error& e) {
    detail::fail(ErrorCode::OverlapError,
                 std::string("attached triangle overlaps the polygon: ") +
                     e.what());
  }
}

}  // namespace halfguard
