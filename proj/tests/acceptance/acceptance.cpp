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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "halfguard/halfguard.hpp"
#include "../tree_enum.hpp"

using namespace halfguard;

namespace {

struct Instance {
  Polygon polygon;
  std::size_t n;
  std::uint64_t seed;
};

std::vector<Instance> simple_corpus() {
  std::vector<Instance> out;
  for (std::size_t n = 4; n <= 24; ++n) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      out.push_back({gen_simple(n, seed, seed % 2 == 0), n, seed});
    }
  }
  return out;
}

std::vector<Instance> orthogonal_corpus() {
  std::vector<Instance> out;
  for (std::size_t n = 6; n <= 30; n += 2) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) out.push_back({gen_orthogonal(n, seed), n, seed});
  }
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || s <= limit_s;
  const bool ok = o.pass && in_time;
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " -- " << o.detail
       << " (" << std::fixed;
  line.precision(2);
  line << s << "s";
  if (limit_s > 0) line << ", limit " << limit_s << "s";
  line << ")";
  std::cout << line.str() << std::endl;
  return ok;
}

std::string where(const Instance& i) {
  return "n=" + std::to_string(i.n) + " seed=" + std::to_string(i.seed);
}

}  // namespace

int main() {
  const std::vector<Instance> simple = simple_corpus();
  const std::vector<Instance> orth = orthogonal_corpus();
  std::vector<GuardSet> simple_sets, orth_sets;
  bool all = true;

  all &= report(1, "simple polygons, |G| = floor(n/2) - 1", 120, [&] {
    std::size_t bad = 0;
    std::string first;
    for (const Instance& i : simple) {
      simple_sets.push_back(place_any(i.polygon));
      if (simple_sets.back().size() != i.n / 2 - 1) {
        if (bad++ == 0) first = where(i);
      }
    }
    return Outcome{bad == 0, std::to_string(simple.size()) + " instances, " + std::to_string(bad) +
                                 " wrong counts" + (first.empty() ? "" : " first at " + first)};
  });

  all &= report(2, "orthogonal polygons, |G| = n/2 - 2", 60, [&] {
    std::size_t bad = 0;
    std::string first;
    for (const Instance& i : orth) {
      orth_sets.push_back(place_orthogonal(i.polygon));
      if (orth_sets.back().size() != i.n / 2 - 2) {
        if (bad++ == 0) first = where(i);
      }
    }
    return Outcome{bad == 0, std::to_string(orth.size()) + " instances, " + std::to_string(bad) +
                                 " wrong counts" + (first.empty() ? "" : " first at " + first)};
  });

  all &= report(3, "26-vertex orthogonal fixture: 11 guards, exact coverage", 5, [&] {
    const Polygon p = load_instance(std::string(HG_DATA_DIR) + "/ortho26.json");
    const GuardSet g = place_orthogonal(p);
    VerifyOptions o;
    o.exact_max_n = 1000;
    const VerifyReport r = verify_report(p, g.guards, 11, std::nullopt, o);
    const bool ok = g.size() == 11 && r.coverage.kind == Coverage::Kind::ProvedExact &&
                    r.connected && r.ok();
    return Outcome{ok, std::to_string(g.size()) + " guards, coverage " +
                           to_string(r.coverage.kind) + ", connected " +
                           (r.connected ? "yes" : "no")};
  });

  all &= report(4, "coverage and connectivity on the criterion 1 and 2 corpora", 0, [&] {
    if (simple_sets.size() != simple.size() || orth_sets.size() != orth.size())
      return Outcome{false, "placement corpora incomplete"};
    std::size_t exact = 0, sampled = 0, bad = 0;
    std::string first;
    auto check = [&](const Instance& i, const GuardSet& g) {
      bool ok;
      if (i.n <= 16) {
        ok = uncovered_region(i.polygon, g.guards).empty();
        ++exact;
      } else {
        ok = sample_coverage(i.polygon, g.guards, 50, i.seed).kind == Coverage::Kind::SampledOk;
        ++sampled;
      }
      ok = ok && is_connected(mutual_visibility_graph(i.polygon, g.guards));
      if (!ok && bad++ == 0) first = where(i);
    };
    for (std::size_t k = 0; k < simple.size(); ++k) check(simple[k], simple_sets[k]);
    for (std::size_t k = 0; k < orth.size(); ++k) check(orth[k], orth_sets[k]);
    return Outcome{bad == 0, std::to_string(exact) + " exact, " + std::to_string(sampled) +
                                 " sampled at density 50, " + std::to_string(bad) + " failures" +
                                 (first.empty() ? "" : " first at " + first)};
  });

  all &= report(5, "alignment for every side, even n <= 12", 120, [&] {
    std::size_t instances = 0, sides = 0, bad = 0;
    std::string first;
    for (const Instance& i : simple) {
      if (i.n % 2 != 0 || i.n > 12) continue;
      ++instances;
      for (std::size_t s = 0; s < i.n; ++s) {
        ++sides;
        const GuardSet g = place_even_aligned(i.polygon, s);
        bool aligned = false;
        for (const HalfGuard& h : g.guards) aligned = aligned || is_aligned(i.polygon, h, i.polygon.side(s));
        if ((!aligned || g.size() != (i.n - 2) / 2) && bad++ == 0)
          first = where(i) + " side=" + std::to_string(s);
      }
    }
    return Outcome{bad == 0 && instances >= 50,
                   std::to_string(instances) + " instances, " + std::to_string(sides) + " sides, " +
                       std::to_string(bad) + " failures" + (first.empty() ? "" : " first at " + first)};
  });

  all &= report(6, "triangulation size and dual degree", 0, [&] {
    std::size_t bad = 0, total = 0;
    auto check = [&](const Polygon& p) {
      ++total;
      const Triangulation t = triangulate(p);
      const DualTree g = dual_tree(t);
      if (t.triangles.size() != p.size() - 2 || !g.tree.is_tree() || g.tree.max_degree() > 3) ++bad;
    };
    for (const Instance& i : simple) check(i.polygon);
    for (const Instance& i : orth) check(i.polygon);
    return Outcome{bad == 0, std::to_string(total) + " polygons, " + std::to_string(bad) + " failures"};
  });

  all &= report(7, "tree splitting rules vs brute force, <= 12 nodes, degree <= 3", 0, [&] {
    const auto trees = hgtest::enumerate_trees(12, 3);
    std::size_t bad = 0;
    std::string first;
    for (const auto& t : trees) {
      const std::string msg = hgtest::check_tree_rules(t);
      if (!msg.empty() && bad++ == 0) first = msg;
    }
    return Outcome{bad == 0, std::to_string(trees.size()) + " trees, " + std::to_string(bad) +
                                 " mismatches" + (first.empty() ? "" : " first: " + first)};
  });

  all &= report(8, "quadrilateral and pentagon guards", 0, [&] {
    std::size_t bad = 0;
    std::string first;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Polygon q = gen_simple(4, seed, seed % 2 == 0);
      for (std::size_t s = 0; s < 4; ++s) {
        const HalfGuard g = quad_guard(q, s);
        const bool ok = is_entire(q, g) && is_aligned(q, g, q.side(s)) &&
                        uncovered_region(q, {g}).empty();
        if (!ok && bad++ == 0) first = "quad seed=" + std::to_string(seed) + " side=" + std::to_string(s);
      }
      const Polygon p = gen_simple(5, seed, seed % 2 == 0);
      const HalfGuard g = pent_guard(p);
      bool vertex = false;
      for (const Point& v : p.vertices()) vertex = vertex || v == g.pos;
      const bool ok = is_entire(p, g) && !vertex && uncovered_region(p, {g}).empty();
      if (!ok && bad++ == 0) first = "pentagon seed=" + std::to_string(seed);
    }
    return Outcome{bad == 0, "100 quadrilaterals x 4 sides, 100 pentagons, " + std::to_string(bad) +
                                 " failures" + (first.empty() ? "" : " first at " + first)};
  });

  return all ? 0 : 1;
}
