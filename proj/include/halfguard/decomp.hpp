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

// Edge-selection rules on trees of maximum degree three, and the polygon
// decompositions they induce through a triangulation's dual tree.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <iterator>
#include <queue>
#include <vector>

#include "halfguard/geom.hpp"
#include "halfguard/tree.hpp"
#include "halfguard/tri.hpp"

namespace halfguard {

/// Edge incident to x whose deletion leaves two odd components.
inline std::size_t odd_odd_edge(const Tree& g, std::size_t x) {
  detail::check(g.is_tree(), ErrorCode::PreconditionViolated, "not a tree");
  detail::check(g.size() % 2 == 0, ErrorCode::PreconditionViolated,
                "tree size must be even");
  detail::check(x < g.size(), ErrorCode::PreconditionViolated, "bad node");
  const std::size_t d = g.degree(x);
  detail::check(d == 1 || d == 2, ErrorCode::PreconditionViolated,
                "node degree must be 1 or 2");
  if (d == 1) return g.incident(x)[0];
  for (std::size_t e : g.incident(x)) {
    if (g.side_of(e, g.other(e, x)).size() % 2 == 1) return e;
  }
  detail::fail(ErrorCode::InternalError, "no odd/odd edge at node");
}

struct QuadPentSplit {
  std::size_t edge;
  std::vector<std::size_t> small;  // the component of size 2 or 3
};

/// Edge whose deletion leaves a component of 2 or 3 nodes. The tree is
/// rooted at its lowest-index leaf.
inline QuadPentSplit quad_pent_edge(const Tree& g) {
  detail::check(g.is_tree(), ErrorCode::PreconditionViolated, "not a tree");
  detail::check(g.size() >= 3, ErrorCode::PreconditionViolated,
                "tree needs at least 3 nodes");
  detail::check(g.max_degree() <= 3, ErrorCode::PreconditionViolated,
                "tree degree exceeds 3");
  const std::size_t n = g.size();
  std::size_t root = 0;
  while (g.degree(root) != 1) ++root;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone), depth(n, 0), order;
  std::queue<std::size_t> q;
  q.push(root);
  parent[root] = root;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    order.push_back(v);
    for (std::size_t e : g.incident(v)) {
      std::size_t w = g.other(e, v);
      if (parent[w] == kNone) {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        q.push(w);
      }
    }
  }
  auto up_edge = [&](std::size_t v) { return *g.edge_between(v, parent[v]); };
  auto deepest = [&](auto pred) {
    std::size_t best = kNone;
    for (std::size_t v = 0; v < n; ++v) {
      if (pred(v) && (best == kNone || depth[v] > depth[best])) best = v;
    }
    return best;
  };

  const std::size_t x3 = deepest([&](std::size_t v) { return g.degree(v) == 3; });
  if (x3 == kNone) {
    const std::size_t y = deepest([](std::size_t) { return true; });
    const std::size_t x = parent[y];
    return {up_edge(x), {x, y}};
  }
  // Below x3 every node has degree at most 2, so each child starts a path.
  std::vector<std::size_t> leaves;
  for (std::size_t e : g.incident(x3)) {
    std::size_t c = g.other(e, x3);
    if (c == parent[x3]) continue;
    std::size_t prev = x3;
    while (g.degree(c) == 2) {
      for (std::size_t f : g.incident(c)) {
        std::size_t w = g.other(f, c);
        if (w != prev) {
          prev = c;
          c = w;
          break;
        }
      }
    }
    leaves.push_back(c);
  }
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t y : leaves) {
    const std::size_t z = parent[y];
    if (g.degree(z) == 2) return {up_edge(z), {z, y}};
  }
  return {up_edge(x3), {x3, leaves[0], leaves[1]}};
}

/// Deleted edges E and the resulting components. components[0] has three
/// nodes; the others are even, and edges[i - 1] joins components[i] to
/// components[0].
struct PentHubPartition {
  std::vector<std::size_t> edges;
  std::vector<std::vector<std::size_t>> components;
};

inline PentHubPartition pent_hub_edges(const Tree& g) {
  detail::check(g.is_tree(), ErrorCode::PreconditionViolated, "not a tree");
  detail::check(g.size() >= 3 && g.size() % 2 == 1,
                ErrorCode::PreconditionViolated,
                "tree size must be odd and at least 3");
  detail::check(g.max_degree() <= 3, ErrorCode::PreconditionViolated,
                "tree degree exceeds 3");
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (g.size() == 3) return {{}, {all}};

  const QuadPentSplit split = quad_pent_edge(g);
  std::vector<std::size_t> small_sorted = split.small;
  std::sort(small_sorted.begin(), small_sorted.end());
  std::vector<std::size_t> rest;
  std::set_difference(all.begin(), all.end(), small_sorted.begin(),
                      small_sorted.end(), std::back_inserter(rest));
  if (split.small.size() == 3) return {{split.edge}, {split.small, rest}};

  const InducedTree sub = induced(g, rest);
  PentHubPartition inner = pent_hub_edges(sub.tree);
  PentHubPartition out;
  for (std::size_t e : inner.edges) out.edges.push_back(sub.edge_map[e]);
  for (const auto& comp : inner.components) {
    std::vector<std::size_t> mapped;
    for (std::size_t v : comp) mapped.push_back(sub.node_map[v]);
    out.components.push_back(std::move(mapped));
  }
  auto [ea, eb] = g.edge(split.edge);
  const bool a_small =
      std::find(split.small.begin(), split.small.end(), ea) != split.small.end();
  const std::size_t anchor = a_small ? eb : ea;
  std::size_t owner = 0;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const auto& c = out.components[i];
    if (std::find(c.begin(), c.end(), anchor) != c.end()) owner = i;
  }
  if (owner > 0) {
    auto& c = out.components[owner];
    c.insert(c.end(), split.small.begin(), split.small.end());
  } else {
    out.edges.push_back(split.edge);
    out.components.push_back(split.small);
  }
  detail::check(out.edges.size() <= 5, ErrorCode::InternalError,
                "hub partition exceeded five edges");
  return out;
}

// ---- polygon-level corollaries ---------------------------------------------

/// A diagonal through an endpoint of side s splitting P into two odd pieces.
inline IndexPair odd_odd_diagonal(const Polygon& p, std::size_t s) {
  detail::check(p.size() >= 4 && p.size() % 2 == 0,
                ErrorCode::PreconditionViolated,
                "polygon must have an even number of sides >= 4");
  detail::check(s < p.size(), ErrorCode::PreconditionViolated, "bad side");
  const Triangulation t = triangulate(p);
  const DualTree g = dual_tree(t);
  const IndexPair key = ordered(s, p.next(s));
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const auto& tri = t.triangles[i];
    for (int k = 0; k < 3; ++k) {
      if (ordered(tri[k], tri[(k + 1) % 3]) == key) {
        return g.diagonal[odd_odd_edge(g.tree, i)];
      }
    }
  }
  detail::fail(ErrorCode::InternalError, "side not found in triangulation");
}

struct QuadPentCut {
  IndexPair diagonal;
  Polygon small;  // 4 or 5 sides
  Polygon rest;
};

inline QuadPentCut quad_pent_diagonal(const Polygon& p) {
  detail::check(p.size() >= 5, ErrorCode::PreconditionViolated,
                "polygon needs at least 5 sides");
  const Triangulation t = triangulate(p);
  const DualTree g = dual_tree(t);
  const QuadPentSplit split = quad_pent_edge(g.tree);
  auto pieces = decomposition_from_edges(p, t, g, {split.edge});
  const std::size_t node = split.small.front();
  const bool first_small =
      std::find(pieces[0].nodes.begin(), pieces[0].nodes.end(), node) !=
      pieces[0].nodes.end();
  Piece& small = first_small ? pieces[0] : pieces[1];
  Piece& rest = first_small ? pieces[1] : pieces[0];
  return {g.diagonal[split.edge], std::move(small.polygon),
          std::move(rest.polygon)};
}

struct Attachment {
  Polygon polygon;
  Segment shared;  // the diagonal it shares with the hub
};

struct PentHub {
  Polygon hub;
  std::vector<Attachment> attachments;

  std::size_t k() const { return attachments.size(); }
};

inline PentHub pent_hub(const Polygon& p) {
  detail::check(p.size() >= 5 && p.size() % 2 == 1,
                ErrorCode::PreconditionViolated,
                "polygon must have an odd number of sides >= 5");
  const Triangulation t = triangulate(p);
  const DualTree g = dual_tree(t);
  const PentHubPartition part = pent_hub_edges(g.tree);
  auto pieces = decomposition_from_edges(p, t, g, part.edges);
  auto piece_of = [&](std::size_t node) -> Piece& {
    for (Piece& pc : pieces) {
      if (std::find(pc.nodes.begin(), pc.nodes.end(), node) != pc.nodes.end())
        return pc;
    }
    detail::fail(ErrorCode::InternalError, "node without piece");
  };
  PentHub out{piece_of(part.components[0].front()).polygon, {}};
  for (std::size_t i = 1; i < part.components.size(); ++i) {
    const IndexPair d = g.diagonal[part.edges[i - 1]];
    out.attachments.push_back(
        {piece_of(part.components[i].front()).polygon, {p[d.first], p[d.second]}});
  }
  return out;
}

}  // namespace halfguard
