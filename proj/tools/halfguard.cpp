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

// halfguard command-line tool. Exit codes: 0 success, 2 bad input,
// 3 construction failure, 4 verification failure or internal error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "halfguard/halfguard.hpp"

namespace hg = halfguard;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 2;
constexpr int kConstruction = 3;
constexpr int kVerification = 4;

struct Failure {
  int code;
  std::string message;
};

int exit_for(hg::ErrorCode c) {
  switch (c) {
    case hg::ErrorCode::ParseError:
    case hg::ErrorCode::TooFewVertices:
    case hg::ErrorCode::RepeatedVertex:
    case hg::ErrorCode::NotSimple:
    case hg::ErrorCode::DegenerateStraightVertex:
    case hg::ErrorCode::NotOrthogonal:
    case hg::ErrorCode::PointOutsidePolygon:
    case hg::ErrorCode::NotOnBoundary:
    case hg::ErrorCode::PreconditionViolated:
    case hg::ErrorCode::InvalidSize:
      return kInput;
    case hg::ErrorCode::DegenerateRay:
    case hg::ErrorCode::DegenerateConfiguration:
    case hg::ErrorCode::GenerationFailed:
      return kConstruction;
    default:
      return kVerification;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    hg::write_file(out, text);
  }
}

hg::VerifyOptions options(bool exact, double density, std::uint64_t seed) {
  hg::VerifyOptions o = hg::VerifyOptions::from_env();
  if (exact) o.exact_max_n = static_cast<std::size_t>(-1);
  o.density = density;
  o.seed = seed;
  return o;
}

struct Placement {
  hg::GuardSet set;
  std::size_t bound;
  std::optional<hg::Segment> align;
};

Placement place(const hg::Polygon& p, bool orthogonal, std::optional<std::size_t> side) {
  const std::size_t n = p.size();
  if (side) {
    hg::detail::check(n % 2 == 0, hg::ErrorCode::PreconditionViolated,
                      "--align-side needs an even number of vertices");
    hg::detail::check(*side < n, hg::ErrorCode::PreconditionViolated, "--align-side out of range");
  }
  if (orthogonal) {
    hg::detail::check(!side, hg::ErrorCode::PreconditionViolated,
                      "--align-side is not available with --orthogonal");
    return {hg::place_orthogonal(p), n / 2 - 2, std::nullopt};
  }
  if (n == 3) {
    hg::GuardSet g;
    g.add(hg::convex_guard(p, hg::midpoint(p[0], p[1])), "Convex");
    return {g, 1, std::nullopt};
  }
  if (side) return {hg::place_even_aligned(p, *side), (n - 2) / 2, p.side(*side)};
  return {hg::place_any(p), n / 2 - 1, std::nullopt};
}

int run_place(const std::string& input, bool orthogonal, std::optional<std::size_t> side,
              const std::string& out, double density, std::uint64_t seed) {
  const hg::Polygon p = hg::load_instance(input);
  const Placement pl = place(p, orthogonal, side);
  const hg::VerifyReport r =
      hg::verify_report(p, pl.set.guards, pl.bound, pl.align, options(false, density, seed));
  hg::GuardFile f{pl.set.guards, pl.set.provenance, {}, hg::report_to_json(r)};
  f.visibility_edges = hg::mutual_visibility_graph(p, pl.set.guards).edges;
  emit(hg::guard_file_to_json(f).dump(2) + "\n", out);
  return r.ok() ? kOk : kVerification;
}

int run_verify(const std::string& poly, const std::string& guards, bool exact, double density,
               std::optional<std::size_t> bound, std::optional<std::size_t> side,
               std::uint64_t seed) {
  const hg::Polygon p = hg::load_instance(poly);
  const hg::GuardFile f = hg::load_guards(guards);
  for (const hg::HalfGuard& g : f.guards) {
    hg::detail::check(hg::contains(p, g.pos), hg::ErrorCode::PointOutsidePolygon,
                      "guard position lies outside the polygon");
  }
  std::optional<hg::Segment> align;
  if (side) {
    hg::detail::check(*side < p.size(), hg::ErrorCode::PreconditionViolated,
                      "--align-side out of range");
    align = p.side(*side);
  }
  const hg::VerifyReport r = hg::verify_report(p, f.guards, bound.value_or(f.guards.size()), align,
                                               options(exact, density, seed));
  std::cout << hg::report_to_json(r).dump(2) << "\n";
  return r.ok() ? kOk : kVerification;
}

int run_render(const std::string& poly, const std::string& guards, const std::string& out,
               bool regions) {
  const hg::Polygon p = hg::load_instance(poly);
  std::vector<hg::HalfGuard> gs;
  if (!guards.empty()) gs = hg::load_guards(guards).guards;
  for (const hg::HalfGuard& g : gs) {
    hg::detail::check(hg::contains(p, g.pos), hg::ErrorCode::PointOutsidePolygon,
                      "guard position lies outside the polygon");
  }
  hg::SvgOptions opt;
  opt.shade_regions = regions;
  emit(hg::render_svg(p, gs, opt), out);
  return kOk;
}

int run_batch(const std::string& mode, const std::string& range, std::size_t count,
              std::uint64_t seed, const std::string& out, double density) {
  const std::regex re(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(range, m, re)) throw Failure{kInput, "--n-range must look like A..B"};
  const std::size_t lo = std::stoul(m[1]), hi = std::stoul(m[2]);
  const bool orth = mode == "orthogonal";
  std::vector<std::size_t> ns;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (orth ? (n >= 6 && n % 2 == 0) : n >= 4) ns.push_back(n);
  }
  if (ns.empty() || count == 0) throw Failure{kInput, "empty instance range"};

  std::ostringstream csv;
  csv << "mode,n,seed,index,guards,bound,covered,connected,ok,runtime_ms,error\n";
  int worst = kOk;
  std::size_t skipped = 0;
  const hg::VerifyOptions opt = options(false, density, seed);
  for (std::size_t n : ns) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t s = seed + i;
      std::optional<hg::Polygon> p;
      try {
        p = orth ? hg::gen_orthogonal(n, s) : hg::gen_simple(n, s);
      } catch (const hg::Error& e) {
        std::cerr << "generation failed for n=" << n << " seed=" << s << ": " << e.what() << "\n";
        ++skipped;
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      const std::size_t bound = orth ? n / 2 - 2 : n / 2 - 1;
      std::string covered = "-", error;
      bool connected = false, ok = false;
      std::size_t guards = 0;
      try {
        const hg::GuardSet g = orth ? hg::place_orthogonal(*p) : hg::place_any(*p);
        const hg::VerifyReport r = hg::verify_report(*p, g.guards, bound, std::nullopt, opt);
        guards = g.size();
        covered = hg::to_string(r.coverage.kind);
        connected = r.connected;
        ok = r.ok() && guards == bound;
        if (!ok) worst = kVerification;
      } catch (const hg::Error& e) {
        error = std::string(hg::to_string(e.code()));
        const int code = exit_for(e.code()) == kConstruction ? kConstruction : kVerification;
        worst = std::max(worst, code);
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      csv << mode << ',' << n << ',' << s << ',' << i << ',' << guards << ',' << bound << ','
          << covered << ',' << (connected ? "yes" : "no") << ',' << (ok ? "yes" : "no") << ','
          << ms << ',' << error << "\n";
    }
  }
  emit(csv.str(), out);
  if (skipped > 0) {
    std::cerr << skipped << " instance(s) skipped after generation failure\n";
    worst = std::max(worst, kConstruction);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative half-guard placement and verification"};
  app.require_subcommand(1);

  std::string input, guards, out, mode = "simple", range;
  bool orthogonal = false, exact = false, no_regions = false;
  std::optional<std::size_t> side, bound;
  double density = 50;
  std::uint64_t seed = 1;
  std::size_t count = 1;

  auto* place = app.add_subcommand("place", "Place guards and write a guard file");
  place->add_option("input", input, "Polygon JSON")->required();
  place->add_flag("--orthogonal", orthogonal, "Use the orthogonal construction");
  place->add_option("--align-side", side, "Side index the set must be aligned with (even n)");
  place->add_option("--out", out, "Output path (default: stdout)");
  place->add_option("--density", density, "Sample density for large polygons");
  place->add_option("--seed", seed, "Sampling seed");

  auto* verify = app.add_subcommand("verify", "Check a guard file against a polygon");
  verify->add_option("polygon", input, "Polygon JSON")->required();
  verify->add_option("guards", guards, "Guard JSON")->required();
  verify->add_flag("--exact", exact, "Force exact coverage regardless of size");
  verify->add_option("--density", density, "Samples per unit area");
  verify->add_option("--bound", bound, "Maximum allowed number of guards");
  verify->add_option("--align-side", side, "Require a guard aligned with this side");
  verify->add_option("--seed", seed, "Sampling seed");

  auto* render = app.add_subcommand("render", "Draw a polygon and guards as SVG");
  render->add_option("polygon", input, "Polygon JSON")->required();
  render->add_option("guards", guards, "Guard JSON");
  render->add_option("--out", out, "Output path (default: stdout)");
  render->add_flag("--no-regions", no_regions, "Do not shade visibility regions");

  auto* batch = app.add_subcommand("batch", "Run a generated corpus and write CSV");
  batch->add_option("--mode", mode, "simple or orthogonal")
      ->check(CLI::IsMember({"simple", "orthogonal"}));
  batch->add_option("--n-range", range, "Vertex counts A..B")->required();
  batch->add_option("--count", count, "Instances per n");
  batch->add_option("--seed", seed, "First seed");
  batch->add_option("--out", out, "CSV path (default: stdout)");
  batch->add_option("--density", density, "Samples per unit area");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  try {
    if (*place) return run_place(input, orthogonal, side, out, density, seed);
    if (*verify) return run_verify(input, guards, exact, density, bound, side, seed);
    if (*render) return run_render(input, guards, out, !no_regions);
    if (*batch) return run_batch(mode, range, count, seed, out, density);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const hg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerification;
  }
  return kInput;
}
