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

// JSON instance and guard files. Rationals travel as "num" or "num/den"
// strings so nothing is rounded.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "halfguard/geom.hpp"
#include "halfguard/guard.hpp"
#include "halfguard/verify.hpp"

namespace halfguard {

using json = nlohmann::json;

inline Rat parse_rational(const std::string& s) {
  auto bad = [&] { detail::fail(ErrorCode::ParseError, "not a rational: \"" + s + "\""); };
  if (s.empty()) bad();
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      bad();
  }
  Rat r;
  if (r.set_str(s.front() == '+' ? s.substr(1) : s, 10) != 0) bad();
  if (sgn(r.get_den()) == 0) bad();
  r.canonicalize();
  return r;
}

inline Int parse_integer(const std::string& s) {
  Int z;
  if (s.empty() || z.set_str(s, 10) != 0)
    detail::fail(ErrorCode::ParseError, "not an integer: \"" + s + "\"");
  return z;
}

namespace detail {

/// Accepts a string or a JSON integer.
inline Rat rational_field(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.dump());
  fail(ErrorCode::ParseError, "coordinate must be a string or an integer");
}

inline Int integer_field(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.dump());
  fail(ErrorCode::ParseError, "half-plane coefficient must be a string or an integer");
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::check(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  detail::check(static_cast<bool>(out), ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

// ---- instances ---------------------------------------------------------

inline json instance_to_json(const std::vector<Point>& vs) {
  json arr = json::array();
  for (const Point& p : vs) arr.push_back({to_string(p.x), to_string(p.y)});
  return {{"vertices", arr}};
}

inline json instance_to_json(const Polygon& p) { return instance_to_json(p.vertices()); }

/// Raw vertex list, before validation.
inline std::vector<Point> instance_points(const json& j) {
  detail::check(j.is_object() && j.contains("vertices") && j["vertices"].is_array(),
                ErrorCode::ParseError, "instance needs a \"vertices\" array");
  std::vector<Point> out;
  for (const json& v : j["vertices"]) {
    detail::check(v.is_array() && v.size() == 2, ErrorCode::ParseError,
                  "each vertex must be a pair");
    out.push_back({detail::rational_field(v[0]), detail::rational_field(v[1])});
  }
  return out;
}

inline Polygon instance_from_json(const json& j) { return validate_polygon(instance_points(j)); }

inline Polygon load_instance(const std::string& path) {
  return instance_from_json(detail::parse_json_text(read_file(path)));
}

// ---- guards ------------------------------------------------------------

struct GuardFile {
  std::vector<HalfGuard> guards;
  std::vector<std::string> provenance;
  std::vector<IndexPair> visibility_edges;
  json report = json::object();
};

inline json guard_to_json(const HalfGuard& g, const std::string& provenance) {
  return {{"x", to_string(g.pos.x)},
          {"y", to_string(g.pos.y)},
          {"halfplane", {g.hp.a().get_str(), g.hp.b().get_str(), g.hp.c().get_str()}},
          {"provenance", provenance}};
}

inline json report_to_json(const VerifyReport& r) {
  json cov = {{"kind", to_string(r.coverage.kind)}, {"samples", r.coverage.samples}};
  if (r.coverage.witness) {
    cov["witness"] = {to_string(r.coverage.witness->x), to_string(r.coverage.witness->y)};
  }
  json out = {{"covered", cov},
              {"connected", r.connected},
              {"cardinality", {{"actual", r.actual}, {"bound", r.bound}, {"ok", r.cardinality_ok}}},
              {"ok", r.ok()}};
  out["aligned_to"] = r.aligned ? json(*r.aligned) : json(nullptr);
  return out;
}

inline json guard_file_to_json(const GuardFile& f) {
  json gs = json::array();
  for (std::size_t i = 0; i < f.guards.size(); ++i) {
    gs.push_back(guard_to_json(f.guards[i], i < f.provenance.size() ? f.provenance[i] : ""));
  }
  json edges = json::array();
  for (auto [a, b] : f.visibility_edges) edges.push_back({a, b});
  return {{"guards", gs}, {"visibility_edges", edges}, {"report", f.report}};
}

inline GuardFile guard_file_from_json(const json& j) {
  detail::check(j.is_object() && j.contains("guards") && j["guards"].is_array(),
                ErrorCode::ParseError, "guard file needs a \"guards\" array");
  GuardFile f;
  for (const json& g : j["guards"]) {
    detail::check(g.is_object() && g.contains("x") && g.contains("y") && g.contains("halfplane"),
                  ErrorCode::ParseError, "guard needs x, y and halfplane");
    const json& h = g["halfplane"];
    detail::check(h.is_array() && h.size() == 3, ErrorCode::ParseError,
                  "halfplane must be [a, b, c]");
    const Int a = detail::integer_field(h[0]), b = detail::integer_field(h[1]);
    detail::check(sgn(a) != 0 || sgn(b) != 0, ErrorCode::ParseError,
                  "halfplane normal must be nonzero");
    const Point pos{detail::rational_field(g["x"]), detail::rational_field(g["y"])};
    f.guards.emplace_back(pos, HalfPlane(a, b, detail::integer_field(h[2])));
    f.provenance.push_back(g.value("provenance", std::string{}));
  }
  if (j.contains("visibility_edges")) {
    for (const json& e : j["visibility_edges"]) {
      detail::check(e.is_array() && e.size() == 2, ErrorCode::ParseError, "bad edge");
      f.visibility_edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
  }
  if (j.contains("report")) f.report = j["report"];
  return f;
}

inline GuardFile load_guards(const std::string& path) {
  return guard_file_from_json(detail::parse_json_text(read_file(path)));
}

}  // namespace halfguard
