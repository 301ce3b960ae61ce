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
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "halfguard/error.hpp"

namespace halfguard {

/// Undirected graph with indexed nodes and edges; used for dual trees and
/// for the abstract tree rules.
class Tree {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Tree(std::size_t n = 0) : incident_(n) {}

  std::size_t add_edge(std::size_t a, std::size_t b) {
    detail::check(a < size() && b < size() && a != b,
                  ErrorCode::PreconditionViolated, "bad tree edge");
    edges_.emplace_back(a, b);
    incident_[a].push_back(edges_.size() - 1);
    incident_[b].push_back(edges_.size() - 1);
    return edges_.size() - 1;
  }

  std::size_t size() const { return incident_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<std::size_t>& incident(std::size_t v) const {
    return incident_[v];
  }
  std::size_t degree(std::size_t v) const { return incident_[v].size(); }
  std::size_t other(std::size_t e, std::size_t v) const {
    return edges_[e].first == v ? edges_[e].second : edges_[e].first;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& inc : incident_) d = std::max(d, inc.size());
    return d;
  }

  /// Component label of every node after deleting the given edges. Labels
  /// are numbered in order of each component's smallest node.
  std::vector<std::size_t> components(
      const std::vector<std::size_t>& removed = {}) const {
    std::vector<bool> cut(edges_.size(), false);
    for (std::size_t e : removed) cut.at(e) = true;
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(size(), kUnset);
    std::size_t next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < size(); ++s) {
      if (label[s] != kUnset) continue;
      label[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : incident_[v]) {
          if (cut[e]) continue;
          std::size_t w = other(e, v);
          if (label[w] == kUnset) {
            label[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    return label;
  }

  std::size_t component_count(
      const std::vector<std::size_t>& removed = {}) const {
    auto lab = components(removed);
    return lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
  }

  bool is_tree() const {
    return size() > 0 && edge_count() + 1 == size() && component_count() == 1;
  }

  /// Nodes reachable from v without crossing edge e.
  std::vector<std::size_t> side_of(std::size_t e, std::size_t v) const {
    auto lab = components({e});
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (lab[i] == lab[v]) out.push_back(i);
    }
    return out;
  }

  std::optional<std::size_t> edge_between(std::size_t a, std::size_t b) const {
    for (std::size_t e : incident_[a]) {
      if (other(e, a) == b) return e;
    }
    return std::nullopt;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Subgraph induced on `nodes`, with maps back to the parent's node and edge
/// indices.
struct InducedTree {
  Tree tree;
  std::vector<std::size_t> node_map;
  std::vector<std::size_t> edge_map;
};

inline InducedTree induced(const Tree& g, const std::vector<std::size_t>& nodes) {
  InducedTree out{Tree(nodes.size()), nodes, {}};
  std::vector<std::size_t> local(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    if (local[a] != static_cast<std::size_t>(-1) &&
        local[b] != static_cast<std::size_t>(-1)) {
      out.tree.add_edge(local[a], local[b]);
      out.edge_map.push_back(e);
    }
  }
  return out;
}

}  // namespace halfguard
