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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"

using namespace halfguard;
using namespace hgtest;

namespace {

std::string tmp(const std::string& name) { return std::string(HG_TMP_DIR) + "/cli_" + name; }

int run(const std::string& args) {
  const std::string cmd = std::string(HG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto i = text.find(needle); i != std::string::npos; i = text.find(needle, i + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, RationalParsing) {
  EXPECT_EQ(parse_rational("7/4"), Rat(7, 4));
  EXPECT_EQ(parse_rational("-6/4"), Rat(-3, 2));
  EXPECT_EQ(parse_rational("12"), Rat(12));
  for (const char* bad : {"", "1/0", "1.5", "abc", "1/2/3"}) {
    EXPECT_TRUE(has_code([&] { parse_rational(bad); }, ErrorCode::ParseError)) << bad;
  }
}

TEST(Json, InstanceRoundTrip) {
  Polygon p = ortho26();
  const json j = instance_to_json(p);
  EXPECT_EQ(instance_from_json(j), p);
  EXPECT_EQ(instance_to_json(instance_from_json(j)), j);
  std::size_t quarters = 0;
  for (const json& v : j["vertices"]) quarters += v[1] == "7/4";
  EXPECT_EQ(quarters, 2u);
}

TEST(Json, GuardFileRoundTrip) {
  Polygon p = ortho26();
  GuardSet g = place_orthogonal(p);
  GuardFile f{g.guards, g.provenance, mutual_visibility_graph(p, g.guards).edges,
              report_to_json(verify_report(p, g.guards, 11))};
  const json j = guard_file_to_json(f);
  const GuardFile back = guard_file_from_json(j);
  EXPECT_EQ(back.guards, f.guards);
  EXPECT_EQ(back.provenance, f.provenance);
  EXPECT_EQ(back.visibility_edges, f.visibility_edges);
  EXPECT_EQ(guard_file_to_json(back), j);
}

TEST(Json, GuardOffItsLineRejected) {
  const json j = json::parse(R"({"guards": [{"x": "1", "y": "1", "halfplane": ["0", "1", "0"]}]})");
  EXPECT_TRUE(has_code([&] { guard_file_from_json(j); }, ErrorCode::PreconditionViolated));
}

TEST(Json, MalformedInstance) {
  EXPECT_TRUE(has_code([] { instance_from_json(json::parse(R"({"verts": []})")); },
                       ErrorCode::ParseError));
  EXPECT_TRUE(has_code([] { instance_from_json(json::parse(R"({"vertices": [["0"]]})")); },
                       ErrorCode::ParseError));
}

TEST(Svg, SquareWithGuard) {
  const std::string s = render_svg(sq(), place_any(sq()).guards);
  EXPECT_EQ(count_of(s, "class=\"guard\""), 1u);
  EXPECT_EQ(count_of(s, "class=\"halfplane\""), 1u);
  EXPECT_EQ(count_of(s, "class=\"polygon\""), 1u);
}

TEST(Svg, OutlineOnly) {
  const std::string s = render_svg(sq(), {});
  EXPECT_EQ(count_of(s, "class=\"guard\""), 0u);
  EXPECT_EQ(count_of(s, "class=\"polygon\""), 1u);
}

TEST(Cli, PlaceSquare) {
  ASSERT_EQ(run("place " + data("sq.json") + " --out " + tmp("sq_guards.json")), 0);
  EXPECT_EQ(load_guards(tmp("sq_guards.json")).guards.size(), 1u);
}

TEST(Cli, PlaceOrtho26Orthogonal) {
  ASSERT_EQ(run("place --orthogonal " + data("ortho26.json") + " --out " + tmp("f31.json")), 0);
  const GuardFile f = load_guards(tmp("f31.json"));
  EXPECT_EQ(f.guards.size(), 11u);
  EXPECT_EQ(f.report["covered"]["kind"], "proved-exact");
  EXPECT_EQ(run("verify " + data("ortho26.json") + " " + tmp("f31.json") + " --bound 11"), 0);
}

TEST(Cli, AlignSideOnOddPolygon) {
  EXPECT_EQ(run("place --align-side 0 " + data("pent_r.json")), 2);
}

TEST(Cli, AlignSideOnEvenPolygon) {
  ASSERT_EQ(run("place --align-side 3 " + data("l6.json") + " --out " + tmp("l6a.json")), 0);
  EXPECT_EQ(run("verify --align-side 3 " + data("l6.json") + " " + tmp("l6a.json")), 0);
}

TEST(Cli, VerifyTamperedGuards) {
  ASSERT_EQ(run("place " + data("sq.json") + " --out " + tmp("sq_t.json")), 0);
  json j = json::parse(read_file(tmp("sq_t.json")));
  for (auto& g : j["guards"]) {
    for (auto& c : g["halfplane"]) {
      const std::string v = c.get<std::string>();
      c = v == "0" ? v : (v.front() == '-' ? v.substr(1) : "-" + v);
    }
  }
  write_file(tmp("sq_flipped.json"), j.dump());
  EXPECT_EQ(run("verify " + data("sq.json") + " " + tmp("sq_flipped.json")), 4);
}

TEST(Cli, VerifyMissingFile) {
  EXPECT_EQ(run("verify " + data("sq.json") + " " + tmp("does_not_exist.json")), 2);
}

TEST(Cli, PlaceInvalidPolygon) {
  write_file(tmp("bowtie.json"), R"({"vertices": [["0","0"],["2","2"],["2","0"],["0","2"]]})");
  EXPECT_EQ(run("place " + tmp("bowtie.json")), 2);
}

TEST(Cli, PlaceNonOrthogonal) {
  EXPECT_EQ(run("place --orthogonal " + data("pent_r.json")), 2);
}

TEST(Cli, PlaceTriangle) {
  write_file(tmp("tri.json"), R"({"vertices": [["0","0"],["4","0"],["0","4"]]})");
  ASSERT_EQ(run("place " + tmp("tri.json") + " --out " + tmp("tri_g.json")), 0);
  EXPECT_EQ(load_guards(tmp("tri_g.json")).guards.size(), 1u);
}

TEST(Cli, Render) {
  ASSERT_EQ(run("place " + data("sq.json") + " --out " + tmp("sq_r.json")), 0);
  ASSERT_EQ(run("render " + data("sq.json") + " " + tmp("sq_r.json") + " --out " + tmp("sq.svg")),
            0);
  EXPECT_EQ(count_of(read_file(tmp("sq.svg")), "class=\"guard\""), 1u);
  ASSERT_EQ(run("render " + data("sq.json") + " --out " + tmp("sq_only.svg")), 0);
  EXPECT_EQ(count_of(read_file(tmp("sq_only.svg")), "class=\"guard\""), 0u);
}

TEST(Cli, BatchSimple) {
  ASSERT_EQ(run("batch --mode simple --n-range 4..12 --count 20 --seed 1 --out " +
                tmp("simple.csv")),
            0);
  std::istringstream in(read_file(tmp("simple.csv")));
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    ASSERT_GE(f.size(), 9u);
    const std::size_t n = std::stoul(f[1]);
    EXPECT_EQ(std::stoul(f[4]), n / 2 - 1);
    EXPECT_EQ(f[8], "yes");
  }
  EXPECT_EQ(rows, 9u * 20u);
}

TEST(Cli, BatchOrthogonal) {
  ASSERT_EQ(run("batch --mode orthogonal --n-range 6..20 --count 3 --out " + tmp("orth.csv")), 0);
  EXPECT_EQ(count_of(read_file(tmp("orth.csv")), ",yes,yes,"), 8u * 3u);
}

TEST(Cli, BatchEmptyRange) {
  EXPECT_EQ(run("batch --mode simple --n-range 9..5"), 2);
}
