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

// Checks on a guard set: coverage (exact or sampled), mutual visibility
// connectivity, cardinality and alignment.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "halfguard/geom.hpp"
#include "halfguard/guard.hpp"
#include "halfguard/tree.hpp"
#include "halfguard/tri.hpp"

namespace halfguard {

// ---- mutual visibility ---------------------------------------------------

struct VisibilityGraph {
  std::size_t nodes = 0;
  std::vector<IndexPair> edges;
};

inline VisibilityGraph mutual_visibility_graph(const Polygon& p,
                                               const std::vector<HalfGuard>& gs) {
  VisibilityGraph out{gs.size(), {}};
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (sees(p, gs[i], gs[j].pos) && sees(p, gs[j], gs[i].pos)) out.edges.push_back({i, j});
    }
  }
  return out;
}

/// An empty graph counts as connected.
inline bool is_connected(const VisibilityGraph& v) {
  if (v.nodes <= 1) return true;
  Tree g(v.nodes);
  for (auto [a, b] : v.edges) g.add_edge(a, b);
  return g.component_count() == 1;
}

// ---- exact coverage ------------------------------------------------------

struct PolygonWithHoles {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;
};

namespace detail {

struct SlabSeg {
  Point a, b;  // a.x < b.x
  Rat slope;
  std::size_t owner;

  Rat y_at(const Rat& x) const { return a.y + slope * (x - a.x); }
};

inline double to_d(const Rat& r) { return r.get_d(); }

}  // namespace detail

/// Uncovered part of P as open trapezoidal cells of positive area. Guard
/// regions are closed, so P is fully covered exactly when this is empty.
/// Each cell is returned as its own polygon; adjacent cells are not merged.
inline std::vector<PolygonWithHoles> uncovered_region(const Polygon& p,
                                                      const std::vector<HalfGuard>& gs) {
  // Owner 0 is P; every fan triangle is its own owner.
  std::vector<std::array<Point, 2>> raw;
  std::vector<std::size_t> raw_owner;
  auto add = [&](const Point& u, const Point& v, std::size_t owner) {
    if (u == v) return;
    raw.push_back({u, v});
    raw_owner.push_back(owner);
  };
  for (std::size_t i = 0; i < p.size(); ++i) add(p[i], p[p.next(i)], 0);
  std::size_t owners = 1;
  for (const HalfGuard& g : gs) {
    const VisRegion r = visibility_region(p, g);
    for (const auto& t : r.fan) {
      if (orientation(t[0], t[1], t[2]) == 0) continue;
      for (int k = 0; k < 3; ++k) add(t[k], t[(k + 1) % 3], owners);
      ++owners;
    }
  }

  // Critical abscissae: endpoints and pairwise intersections.
  std::vector<Rat> xs;
  struct Box {
    double x0, x1, y0, y1;
  };
  std::vector<Box> box;
  for (const auto& s : raw) {
    xs.push_back(s[0].x);
    xs.push_back(s[1].x);
    const double ax = detail::to_d(s[0].x), bx = detail::to_d(s[1].x);
    const double ay = detail::to_d(s[0].y), by = detail::to_d(s[1].y);
    box.push_back({std::min(ax, bx), std::max(ax, bx), std::min(ay, by), std::max(ay, by)});
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      const double tol = 1e-9 * (1 + std::abs(box[i].x1) + std::abs(box[j].x1) +
                                 std::abs(box[i].y1) + std::abs(box[j].y1));
      if (box[i].x1 + tol < box[j].x0 || box[j].x1 + tol < box[i].x0 ||
          box[i].y1 + tol < box[j].y0 || box[j].y1 + tol < box[i].y0)
        continue;
      const Point& a = raw[i][0];
      const Point d1 = raw[i][1] - a;
      const Point& c = raw[j][0];
      const Point d2 = raw[j][1] - c;
      const Rat den = cross(d1, d2);
      if (sgn(den) == 0) continue;
      const Rat t = cross(c - a, d2) / den;
      const Rat u = cross(c - a, d1) / den;
      if (sgn(t) < 0 || t > 1 || sgn(u) < 0 || u > 1) continue;
      xs.push_back(a.x + t * d1.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<detail::SlabSeg> segs;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Point a = raw[i][0], b = raw[i][1];
    if (a.x == b.x) continue;  // vertical sides never cross an open slab
    if (b.x < a.x) std::swap(a, b);
    Rat slope = (b.y - a.y) / (b.x - a.x);
    segs.push_back({a, b, slope, raw_owner[i]});
  }
  std::sort(segs.begin(), segs.end(),
            [](const detail::SlabSeg& s, const detail::SlabSeg& t) { return s.a.x < t.a.x; });

  std::vector<PolygonWithHoles> out;
  std::vector<const detail::SlabSeg*> active;
  std::size_t next_seg = 0;
  std::vector<char> inside(owners, 0);
  struct Entry {
    Rat y;
    const detail::SlabSeg* s;
  };
  std::vector<Entry> col;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rat& x0 = xs[k];
    const Rat& x1 = xs[k + 1];
    std::erase_if(active, [&](const detail::SlabSeg* s) { return s->b.x <= x0; });
    while (next_seg < segs.size() && segs[next_seg].a.x <= x0) {
      if (segs[next_seg].b.x > x0) active.push_back(&segs[next_seg]);
      ++next_seg;
    }
    if (active.empty()) continue;
    const Rat xm = (x0 + x1) / 2;
    col.clear();
    for (const auto* s : active) col.push_back({s->y_at(xm), s});
    std::sort(col.begin(), col.end(), [](const Entry& e, const Entry& f) { return e.y < f.y; });
    std::fill(inside.begin(), inside.end(), 0);
    std::size_t covering = 0;
    for (std::size_t j = 0; j + 1 < col.size(); ++j) {
      const std::size_t o = col[j].s->owner;
      inside[o] ^= 1;
      if (o != 0) covering += inside[o] ? 1 : static_cast<std::size_t>(-1);
      if (!inside[0] || covering != 0 || !(col[j].y < col[j + 1].y)) continue;
      const auto* lo = col[j].s;
      const auto* hi = col[j + 1].s;
      std::vector<Point> cell{{x0, lo->y_at(x0)}, {x1, lo->y_at(x1)},
                              {x1, hi->y_at(x1)}, {x0, hi->y_at(x0)}};
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      if (cell.size() > 1 && cell.front() == cell.back()) cell.pop_back();
      out.push_back({std::move(cell), {}});
      // Independent check against the point predicate.
      const Point w{xm, (col[j].y + col[j + 1].y) / 2};
      detail::check(locate(p, w) == Location::Inside, ErrorCode::InternalError,
                    "uncovered cell outside the polygon");
      for (const HalfGuard& g : gs) {
        detail::check(!sees(p, g, w), ErrorCode::InternalError,
                      "uncovered cell is seen by a guard");
      }
    }
  }
  return out;
}

// ---- sampled coverage ----------------------------------------------------

namespace detail {

/// Floating-point predicates with a static error bound; `0` from a
/// filtered sign means the caller must decide exactly.
class FastPolygon {
 public:
  explicit FastPolygon(const Polygon& p) : p_(p) {
    for (const Point& v : p.vertices()) {
      xs_.push_back(v.x.get_d());
      ys_.push_back(v.y.get_d());
      scale_ = std::max({scale_, std::abs(xs_.back()), std::abs(ys_.back())});
    }
  }

  void widen(double x, double y) { scale_ = std::max({scale_, std::abs(x), std::abs(y)}); }

  /// Sign of orient(p, q, r), or 0 when uncertain.
  int orient(double px, double py, double qx, double qy, double rx, double ry) const {
    const double det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    const double bound = 64 * std::numeric_limits<double>::epsilon() * (scale_ + 1) * (scale_ + 1);
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return 0;
  }

  /// Inside/outside with certainty, or nullopt.
  std::optional<bool> strictly_inside(double x, double y) const {
    const std::size_t n = xs_.size();
    bool in = false;
    const double tol = 8 * std::numeric_limits<double>::epsilon() * (scale_ + 1);
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const double ay = ys_[j], by = ys_[i];
      if (std::abs(ay - y) <= tol || std::abs(by - y) <= tol) return std::nullopt;
      if ((ay > y) == (by > y)) continue;
      const int o = orient(xs_[j], ay, xs_[i], by, x, y);
      if (o == 0) return std::nullopt;
      if ((o > 0) == (by > ay)) in = !in;
    }
    return in;
  }

  const Polygon& exact() const { return p_; }
  std::size_t size() const { return xs_.size(); }
  double x(std::size_t i) const { return xs_[i % xs_.size()]; }
  double y(std::size_t i) const { return ys_[i % ys_.size()]; }

 private:
  const Polygon& p_;
  std::vector<double> xs_, ys_;
  double scale_ = 0;
};

/// Guard visibility test with a floating-point fast path.
class FastGuard {
 public:
  FastGuard(const FastPolygon& fp, const HalfGuard& g) : fp_(fp), g_(g) {
    px_ = g.pos.x.get_d();
    py_ = g.pos.y.get_d();
    a_ = g.hp.a().get_d();
    b_ = g.hp.b().get_d();
    c_ = g.hp.c().get_d();
    const Polygon& p = fp.exact();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (on_segment(g.pos, p[i], p[p.next(i)])) incident_.push_back(i);
    }
    const InteriorCone cone = interior_cone(p, g.pos);
    full_ = cone.full;
    if (!full_) {
      f_ = {cone.first.x.get_d(), cone.first.y.get_d()};
      s_ = {cone.second.x.get_d(), cone.second.y.get_d()};
      reflex_ = sgn(cross(cone.first, cone.second)) < 0;
      straight_ = sgn(cross(cone.first, cone.second)) == 0;
    }
  }

  bool sees(const Point& y, double yx, double yy) const {
    if (auto r = fast(yx, yy)) return *r;
    return halfguard::sees(fp_.exact(), g_, y);
  }

 private:
  std::optional<bool> fast(double yx, double yy) const {
    const double v = a_ * yx + b_ * yy + c_;
    const double hb = 16 * std::numeric_limits<double>::epsilon() *
                      (std::abs(a_ * yx) + std::abs(b_ * yy) + std::abs(c_) + 1);
    if (v < -hb) return false;
    if (v <= hb) return std::nullopt;
    const double dx = yx - px_, dy = yy - py_;
    if (!full_) {
      const int c1 = fp_.orient(0, 0, f_[0], f_[1], dx, dy);
      const int c2 = fp_.orient(0, 0, dx, dy, s_[0], s_[1]);
      if (c1 == 0 || c2 == 0) return std::nullopt;
      const bool in = straight_ ? c1 > 0 : reflex_ ? (c1 > 0 || c2 > 0) : (c1 > 0 && c2 > 0);
      if (!in) return false;
    }
    const std::size_t n = fp_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(incident_.begin(), incident_.end(), i) != incident_.end()) continue;
      const double ax = fp_.x(i), ay = fp_.y(i), bx = fp_.x(i + 1), by = fp_.y(i + 1);
      const double m = 1e-9 * (1 + std::abs(ax) + std::abs(ay) + std::abs(bx) + std::abs(by));
      if (std::max(ax, bx) + m < std::min(px_, yx) || std::min(ax, bx) - m > std::max(px_, yx) ||
          std::max(ay, by) + m < std::min(py_, yy) || std::min(ay, by) - m > std::max(py_, yy))
        continue;
      const int o1 = fp_.orient(px_, py_, yx, yy, ax, ay);
      const int o2 = fp_.orient(px_, py_, yx, yy, bx, by);
      if (o1 == 0 || o2 == 0) return std::nullopt;
      if (o1 == o2) continue;
      const int o3 = fp_.orient(ax, ay, bx, by, px_, py_);
      const int o4 = fp_.orient(ax, ay, bx, by, yx, yy);
      if (o3 == 0 || o4 == 0) return std::nullopt;
      if (o3 != o4) return false;
    }
    return true;
  }

  const FastPolygon& fp_;
  const HalfGuard& g_;
  double px_, py_, a_, b_, c_;
  std::vector<std::size_t> incident_;
  bool full_ = false, reflex_ = false, straight_ = false;
  std::array<double, 2> f_{}, s_{};
};

}  // namespace detail

struct Coverage {
  enum class Kind { ProvedExact, SampledOk, Refuted };
  Kind kind = Kind::ProvedExact;
  std::size_t samples = 0;
  std::optional<Point> witness;

  bool ok() const { return kind != Kind::Refuted; }
};

inline std::string to_string(Coverage::Kind k) {
  switch (k) {
    case Coverage::Kind::ProvedExact: return "proved-exact";
    case Coverage::Kind::SampledOk: return "sampled-ok";
    case Coverage::Kind::Refuted: return "refuted";
  }
  return "?";
}

/// Structured samples: side midpoints and small inward offsets from every
/// vertex and guard position.
inline std::vector<Point> structured_samples(const Polygon& p,
                                             const std::vector<HalfGuard>& gs) {
  std::vector<Point> out;
  const std::vector<Rat> eps{frac(1, 64), frac(1, 4096)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.push_back(midpoint(p[i], p[p.next(i)]));
    const Point toward = (p[p.prev(i)] - p[i]) + (p[p.next(i)] - p[i]);
    const Point along = p[p.next(i)] - p[i];
    for (const Rat& e : eps) {
      for (const Point& d : {toward, Point{-toward.x, -toward.y}, along + toward}) {
        const Point q = p[i] + e * d;
        if (locate(p, q) == Location::Inside) out.push_back(q);
      }
    }
  }
  for (const HalfGuard& g : gs) {
    const Point n = g.hp.normal(), d = g.hp.direction();
    for (const Rat& e : eps) {
      for (const Point& dir : {n, n + d, n - d}) {
        const Point q = g.pos + e * dir;
        if (locate(p, q) == Location::Inside) out.push_back(q);
      }
    }
  }
  return out;
}

/// Random dyadic interior points, about `density` per unit area, plus the
/// structured samples. Refuted carries an unseen sample.
inline Coverage sample_coverage(const Polygon& p, const std::vector<HalfGuard>& gs,
                                double density, std::uint64_t seed,
                                std::size_t max_samples = 2'000'000) {
  detail::check(density > 0, ErrorCode::PreconditionViolated, "density must be positive");
  detail::FastPolygon fp(p);
  std::vector<detail::FastGuard> fg;
  fg.reserve(gs.size());
  for (const HalfGuard& g : gs) fg.emplace_back(fp, g);

  Coverage out{Coverage::Kind::SampledOk, 0, std::nullopt};
  auto test = [&](const Point& q, double x, double y) {
    ++out.samples;
    for (const auto& g : fg) {
      if (g.sees(q, x, y)) return true;
    }
    out.kind = Coverage::Kind::Refuted;
    out.witness = q;
    return false;
  };
  for (const Point& q : structured_samples(p, gs)) {
    if (!test(q, q.x.get_d(), q.y.get_d())) return out;
  }

  double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Point& v : p.vertices()) {
    x0 = std::min(x0, std::floor(v.x.get_d()));
    x1 = std::max(x1, std::ceil(v.x.get_d()));
    y0 = std::min(y0, std::floor(v.y.get_d()));
    y1 = std::max(y1, std::ceil(v.y.get_d()));
  }
  const double want = std::ceil(density * area(p).get_d());
  const auto target = static_cast<std::size_t>(std::min<double>(want, static_cast<double>(max_samples)));
  std::mt19937_64 rng(seed);
  constexpr int kBits = 20;  // dyadic grid 2^-20, exact in double
  std::uniform_int_distribution<std::int64_t> ux(0, static_cast<std::int64_t>(x1 - x0) << kBits);
  std::uniform_int_distribution<std::int64_t> uy(0, static_cast<std::int64_t>(y1 - y0) << kBits);
  const Rat unit = Rat(1, 1 << kBits);
  std::size_t drawn = 0;
  for (std::size_t tries = 0; drawn < target && tries < 50 * target + 1000; ++tries) {
    const std::int64_t ix = ux(rng), iy = uy(rng);
    const double x = x0 + std::ldexp(static_cast<double>(ix), -kBits);
    const double y = y0 + std::ldexp(static_cast<double>(iy), -kBits);
    const Point q{Rat(static_cast<long>(x0)) + Rat(static_cast<long>(ix)) * unit,
                  Rat(static_cast<long>(y0)) + Rat(static_cast<long>(iy)) * unit};
    std::optional<bool> in = fp.strictly_inside(x, y);
    const bool inside = in ? *in : locate(p, q) != Location::Outside;
    if (!inside) continue;
    ++drawn;
    if (!test(q, x, y)) return out;
  }
  return out;
}

// ---- report --------------------------------------------------------------

struct VerifyOptions {
  std::size_t exact_max_n = 40;
  double density = 50;
  std::uint64_t seed = 1;

  /// Reads HG_EXACT_MAX_N when set.
  static VerifyOptions from_env() {
    VerifyOptions o;
    if (const char* v = std::getenv("HG_EXACT_MAX_N")) {
      try {
        o.exact_max_n = static_cast<std::size_t>(std::stoul(v));
      } catch (const std::exception&) {
      }
    }
    return o;
  }
};

struct VerifyReport {
  Coverage coverage;
  bool connected = false;
  std::size_t actual = 0;
  std::size_t bound = 0;
  bool cardinality_ok = false;
  std::optional<bool> aligned;  // present when a side was requested

  bool ok() const {
    return coverage.ok() && connected && cardinality_ok && aligned.value_or(true);
  }
};

/// `bound` is the guard count the set must not exceed.
inline VerifyReport verify_report(const Polygon& p, const std::vector<HalfGuard>& gs,
                                  std::size_t bound, std::optional<Segment> align = std::nullopt,
                                  const VerifyOptions& opt = VerifyOptions::from_env()) {
  VerifyReport r;
  if (p.size() <= opt.exact_max_n) {
    const auto cells = uncovered_region(p, gs);
    if (cells.empty()) {
      r.coverage = {Coverage::Kind::ProvedExact, 0, std::nullopt};
    } else {
      const auto& c = cells.front().outer;
      Point w{Rat(0), Rat(0)};
      for (const Point& v : c) w = w + v;
      w = Rat(1, static_cast<long>(c.size())) * w;
      r.coverage = {Coverage::Kind::Refuted, 0, w};
    }
  } else {
    r.coverage = sample_coverage(p, gs, opt.density, opt.seed);
  }
  r.connected = is_connected(mutual_visibility_graph(p, gs));
  r.actual = gs.size();
  r.bound = bound;
  r.cardinality_ok = r.actual <= r.bound;
  if (align) {
    bool any = false;
    for (const HalfGuard& g : gs) any = any || is_aligned(p, g, *align);
    r.aligned = any;
  }
  return r;
}

}  // namespace halfguard
