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

// Standalone SVG drawings of a polygon and its guards.

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "halfguard/geom.hpp"
#include "halfguard/guard.hpp"
#include "halfguard/verify.hpp"

namespace halfguard {

struct SvgOptions {
  double width = 640;
  double margin = 24;
  bool shade_regions = true;
  bool visibility_edges = true;
};

inline std::string render_svg(const Polygon& p, const std::vector<HalfGuard>& gs,
                              const SvgOptions& opt = {}) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const Point& v : p.vertices()) {
    x0 = std::min(x0, v.x.get_d());
    x1 = std::max(x1, v.x.get_d());
    y0 = std::min(y0, v.y.get_d());
    y1 = std::max(y1, v.y.get_d());
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double k = (opt.width - 2 * opt.margin) / span;
  const double height = (y1 - y0) * k + 2 * opt.margin;
  auto sx = [&](const Rat& x) { return opt.margin + (x.get_d() - x0) * k; };
  auto sy = [&](const Rat& y) { return height - opt.margin - (y.get_d() - y0) * k; };
  auto path = [&](const std::vector<Point>& ring) {
    std::ostringstream d;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      d << (i == 0 ? 'M' : 'L') << sx(ring[i].x) << ' ' << sy(ring[i].y) << ' ';
    }
    d << 'Z';
    return d.str();
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
    << height << "\" viewBox=\"0 0 " << opt.width << ' ' << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (opt.shade_regions) {
    for (const HalfGuard& g : gs) {
      const VisRegion r = visibility_region(p, g);
      for (const auto& t : r.fan) {
        s << "<path class=\"region\" d=\"" << path({t[0], t[1], t[2]})
          << "\" fill=\"#4a90d9\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
      }
    }
  }
  s << "<path class=\"polygon\" d=\"" << path(p.vertices())
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  if (opt.visibility_edges) {
    for (auto [i, j] : mutual_visibility_graph(p, gs).edges) {
      s << "<line class=\"visibility\" x1=\"" << sx(gs[i].pos.x) << "\" y1=\"" << sy(gs[i].pos.y)
        << "\" x2=\"" << sx(gs[j].pos.x) << "\" y2=\"" << sy(gs[j].pos.y)
        << "\" stroke=\"#555\" stroke-dasharray=\"4 3\"/>\n";
    }
  }
  const double r = 9;
  for (const HalfGuard& g : gs) {
    const double cx = sx(g.pos.x), cy = sy(g.pos.y);
    // Screen y points down, so the normal's y flips.
    const double nx = g.hp.a().get_d(), ny = -g.hp.b().get_d();
    const double len = std::hypot(nx, ny);
    const double ux = nx / len, uy = ny / len;
    const double tx = -uy, ty = ux;
    s << "<path class=\"halfplane\" d=\"M" << cx + r * tx << ' ' << cy + r * ty << " A" << r << ' '
      << r << " 0 0 0 " << cx - r * tx << ' ' << cy - r * ty
      << " Z\" fill=\"#d94a4a\" fill-opacity=\"0.45\" stroke=\"#d94a4a\"/>\n";
    s << "<circle class=\"guard\" cx=\"" << cx << "\" cy=\"" << cy
      << "\" r=\"3\" fill=\"#d94a4a\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace halfguard
