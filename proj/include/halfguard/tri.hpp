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

// Ear-clipping triangulation, its dual tree, and the sub-polygons obtained
// by deleting dual edges.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "halfguard/geom.hpp"
#include "halfguard/tree.hpp"

namespace halfguard {

using IndexPair = std::pair<std::size_t, std::size_t>;

inline IndexPair ordered(std::size_t a, std::size_t b) {
  return a < b ? IndexPair{a, b} : IndexPair{b, a};
}

struct Triangulation {
  /// Vertex indices, each triple counter-clockwise.
  std::vector<std::array<std::size_t, 3>> triangles;
  /// Diagonals as ordered index pairs (smaller first).
  std::vector<IndexPair> diagonals;
};

namespace detail {

inline bool in_closed_triangle(const Point& a, const Point& b, const Point& c,
                               const Point& p) {
  return orientation(a, b, p) >= 0 && orientation(b, c, p) >= 0 &&
         orientation(c, a, p) >= 0;
}

}  // namespace detail

/// Clips the lowest-index ear repeatedly. An ear is a strictly convex vertex
/// whose closed triangle holds no other remaining vertex.
inline Triangulation triangulate(const Polygon& p) {
  Triangulation t;
  std::vector<std::size_t> idx(p.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  while (idx.size() > 3) {
    const std::size_t m = idx.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const std::size_t a = idx[(k + m - 1) % m];
      const std::size_t b = idx[k];
      const std::size_t c = idx[(k + 1) % m];
      if (orientation(p[a], p[b], p[c]) <= 0) continue;
      bool empty = true;
      for (std::size_t r : idx) {
        if (r == a || r == b || r == c) continue;
        if (detail::in_closed_triangle(p[a], p[b], p[c], p[r])) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      t.triangles.push_back({a, b, c});
      t.diagonals.push_back(ordered(a, c));
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    detail::check(clipped, ErrorCode::InternalError,
                  "no ear found in a simple polygon");
  }
  t.triangles.push_back({idx[0], idx[1], idx[2]});
  return t;
}

/// Dual tree: one node per triangle; an edge per shared diagonal.
struct DualTree {
  Tree tree;
  std::vector<IndexPair> diagonal;  // indexed by tree edge

  std::size_t size() const { return tree.size(); }
};

inline DualTree dual_tree(const Triangulation& t) {
  DualTree g{Tree(t.triangles.size()), {}};
  std::map<IndexPair, std::size_t> first_owner;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const auto& tri = t.triangles[i];
    for (int k = 0; k < 3; ++k) {
      const IndexPair key = ordered(tri[k], tri[(k + 1) % 3]);
      auto [it, inserted] = first_owner.emplace(key, i);
      if (!inserted) {
        g.tree.add_edge(it->second, i);
        g.diagonal.push_back(key);
      }
    }
  }
  return g;
}

/// One polygon of the decomposition induced by a set of deleted dual edges.
struct Piece {
  Polygon polygon;
  std::vector<std::size_t> vertex_ids;  // indices into the source polygon
  std::vector<std::size_t> nodes;       // triangles making up the piece
  std::vector<std::size_t> cut_edges;   // deleted dual edges on its boundary
};

inline std::vector<Piece> decomposition_from_edges(
    const Polygon& p, const Triangulation& t, const DualTree& g,
    const std::vector<std::size_t>& removed) {
  const auto label = g.tree.components(removed);
  const std::size_t k = g.tree.component_count(removed);
  std::vector<std::vector<std::size_t>> nodes(k);
  for (std::size_t i = 0; i < label.size(); ++i) nodes[label[i]].push_back(i);

  std::vector<Piece> out;
  out.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::set<IndexPair> directed;
    for (std::size_t node : nodes[c]) {
      const auto& tri = t.triangles[node];
      for (int j = 0; j < 3; ++j) directed.emplace(tri[j], tri[(j + 1) % 3]);
    }
    std::map<std::size_t, std::size_t> succ;
    for (const auto& [a, b] : directed) {
      if (!directed.count({b, a})) succ[a] = b;
    }
    std::vector<std::size_t> ids;
    const std::size_t start = succ.begin()->first;
    for (std::size_t v = start;;) {
      ids.push_back(v);
      v = succ.at(v);
      if (v == start) break;
      detail::check(ids.size() <= succ.size(), ErrorCode::InternalError,
                    "piece boundary is not a single cycle");
    }
    detail::check(ids.size() == succ.size() && ids.size() == nodes[c].size() + 2,
                  ErrorCode::InternalError, "piece has the wrong side count");
    std::vector<Point> pts;
    for (std::size_t v : ids) pts.push_back(p[v]);
    std::vector<std::size_t> cuts;
    for (std::size_t e : removed) {
      auto [a, b] = g.tree.edge(e);
      if (label[a] == c || label[b] == c) cuts.push_back(e);
    }
    out.push_back({validate_polygon(std::move(pts), true), std::move(ids),
                   std::move(nodes[c]), std::move(cuts)});
  }
  return out;
}

}  // namespace halfguard
