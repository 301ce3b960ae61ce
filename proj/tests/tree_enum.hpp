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


// Exhaustive enumeration of unlabeled trees with bounded degree, plus a
// plain brute-force checker for the edge-selection lemmas. Shared by the
// unit tests and the acceptance runner.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "halfguard/decomp.hpp"

namespace hgtest {

using Adj = std::vector<std::vector<std::size_t>>;

inline std::string rooted_code(const Adj& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t w : g[v]) {
    if (w != parent) kids.push_back(rooted_code(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

/// Canonical string: minimum rooted code over the tree's centers.
inline std::string canonical(const Adj& g) {
  const std::size_t n = g.size();
  if (n == 1) return "()";
  std::vector<std::size_t> deg(n), layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g[v].size();
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer) {
      for (std::size_t w : g[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::string best;
  for (std::size_t c : layer) {
    std::string s = rooted_code(g, c, n);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// All non-isomorphic trees with 1..max_n nodes and maximum degree <= max_deg.
inline std::vector<Adj> enumerate_trees(std::size_t max_n, std::size_t max_deg) {
  std::vector<Adj> all;
  std::vector<Adj> level{Adj(1)};
  while (!level.empty() && level.front().size() <= max_n) {
    all.insert(all.end(), level.begin(), level.end());
    if (level.front().size() == max_n) break;
    std::set<std::string> seen;
    std::vector<Adj> next;
    for (const Adj& g : level) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (g[v].size() >= max_deg) continue;
        Adj h = g;
        const std::size_t w = h.size();
        h.emplace_back();
        h[v].push_back(w);
        h[w].push_back(v);
        if (seen.insert(canonical(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return all;
}

inline halfguard::Tree to_tree(const Adj& g) {
  halfguard::Tree t(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t w : g[v]) {
      if (v < w) t.add_edge(v, w);
    }
  }
  return t;
}

/// Component labels after deleting `removed`, by plain flood fill over the
/// edge list (independent of Tree::components).
inline std::vector<int> flood(const halfguard::Tree& t, const std::vector<std::size_t>& removed) {
  const std::size_t n = t.size();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t e = 0; e < t.edge_count(); ++e) {
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        auto [a, b] = t.edge(e);
        if (label[a] == next && label[b] < 0) label[b] = next, grew = true;
        if (label[b] == next && label[a] < 0) label[a] = next, grew = true;
      }
    }
    ++next;
  }
  return label;
}

inline std::vector<std::size_t> sizes(const std::vector<int>& label) {
  std::vector<std::size_t> out(*std::max_element(label.begin(), label.end()) + 1, 0);
  for (int l : label) ++out[static_cast<std::size_t>(l)];
  return out;
}

/// Every edge subset of size at most five whose deletion leaves one 3-node
/// hub with every other component even and joined to the hub by a deleted
/// edge. Exhaustive over subsets; each answer is sorted.
inline std::set<std::vector<std::size_t>> valid_hub_partitions(const halfguard::Tree& t) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t m = t.edge_count();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> rem;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) rem.push_back(e);
    }
    if (rem.size() > 5) continue;
    const auto lab = flood(t, rem);
    const auto sz = sizes(lab);
    std::size_t threes = 0, hub = 0;
    bool ok = true;
    for (std::size_t c = 0; c < sz.size(); ++c) {
      if (sz[c] == 3 && threes == 0) {
        ++threes;
        hub = c;
      } else if (sz[c] % 2 != 0) {
        ok = false;
      }
    }
    if (!ok || threes != 1) continue;
    for (std::size_t e : rem) {
      auto [a, b] = t.edge(e);
      if (static_cast<std::size_t>(lab[a]) != hub && static_cast<std::size_t>(lab[b]) != hub)
        ok = false;
    }
    if (ok) out.insert(rem);
  }
  return out;
}

/// Checks the three lemma implementations against the brute force on one
/// tree. Returns an empty string on success, else a description.
inline std::string check_tree_rules(const Adj& adj) {
  using namespace halfguard;
  const Tree t = to_tree(adj);
  const std::size_t n = t.size();
  auto set_of = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  if (n % 2 == 0) {
    for (std::size_t x = 0; x < n; ++x) {
      if (t.degree(x) == 0 || t.degree(x) > 2) continue;
      std::set<std::size_t> answers;
      for (std::size_t e : t.incident(x)) {
        const auto sz = sizes(flood(t, {e}));
        if (sz[0] % 2 == 1 && sz[1] % 2 == 1) answers.insert(e);
      }
      if (answers.empty()) return "no odd/odd edge exists at a degree<=2 node";
      if (!answers.count(odd_odd_edge(t, x))) return "odd_odd_edge is not a valid answer";
    }
  }

  if (n >= 3) {
    // Answers: (edge, small side) pairs with a side of 2 or 3 nodes.
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> answers;
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
      const auto lab = flood(t, {e});
      for (int side : {0, 1}) {
        std::vector<std::size_t> part;
        for (std::size_t v = 0; v < n; ++v) {
          if (lab[v] == side) part.push_back(v);
        }
        if (part.size() == 2 || part.size() == 3) answers.insert({e, part});
      }
    }
    const QuadPentSplit q = quad_pent_edge(t);
    const auto lab = flood(t, {q.edge});
    std::vector<std::size_t> side;
    for (std::size_t v = 0; v < n; ++v) {
      if (lab[v] == lab[q.small.front()]) side.push_back(v);
    }
    if (answers.empty()) return "brute force found no 2/3 component";
    if (set_of(side) != set_of(q.small)) return "quad_pent_edge small side mismatch";
    if (!answers.count({q.edge, set_of(q.small)})) return "quad_pent_edge is not a valid answer";
  }

  if (n >= 3 && n % 2 == 1) {
    const auto answers = valid_hub_partitions(t);
    if (answers.empty()) return "brute force found no hub partition";
    const PentHubPartition h = pent_hub_edges(t);
    if (!answers.count(set_of(h.edges))) return "pent_hub_edges is not a valid answer";
    if (h.edges.size() > 5) return "hub partition has more than five edges";
    if (h.components.size() != h.edges.size() + 1) return "hub partition component count";
    const auto lab = flood(t, h.edges);
    if (sizes(lab).size() != h.components.size()) return "hub components do not match deletion";
    for (std::size_t i = 0; i < h.components.size(); ++i) {
      const auto& c = h.components[i];
      if (i == 0 ? c.size() != 3 : c.size() % 2 != 0) return "hub component size parity";
      for (std::size_t v : c) {
        if (lab[v] != lab[c.front()]) return "hub component not connected";
      }
      if (i > 0) {
        auto [a, b] = t.edge(h.edges[i - 1]);
        const int hub = lab[h.components[0].front()];
        const int mine = lab[c.front()];
        if (!((lab[a] == hub && lab[b] == mine) || (lab[b] == hub && lab[a] == mine)))
          return "hub edge does not join its component to the hub";
      }
    }
  }
  return {};
}

}  // namespace hgtest
