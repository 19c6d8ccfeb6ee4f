#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tiletopo/tiletopo.hpp"

namespace fs = std::filesystem;
using namespace tiletopo;
using namespace tthelpers;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("tiletopo_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  const auto err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(TILETOPO_CLI_BIN) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generate writes a loadable tiling") {
  const auto path = (scratch_dir() / "sq5.tiling").string();
  const auto r = run_cli("generate square 5 5 --out " + path);
  REQUIRE(r.exit_code == 0);
  const auto w = load_tiling_file(path);
  CHECK(w.faces.size() == 25);
  CHECK(validate_tiling(w).ok);
  CHECK(w.has_coords());

  const auto hex = run_cli("generate hex 2 --out " + (scratch_dir() / "hex2.tiling").string());
  CHECK(hex.exit_code == 0);
  CHECK(contains(hex.out, "19 faces"));
}

TEST_CASE("generate rejects bad sizes with exit code 2") {
  CHECK(run_cli("generate square 1 1 --out /tmp/never.tiling").exit_code == 2);
  CHECK(run_cli("generate hex 0 --out /tmp/never.tiling").exit_code == 2);
  CHECK(run_cli("generate blob 3 --out /tmp/never.tiling").exit_code == 2);
}

TEST_CASE("usage errors exit with 2, io errors with 5") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("validate").exit_code == 2);
  CHECK(run_cli("validate /nonexistent/path.tiling").exit_code == 5);
}

TEST_CASE("validate accepts builtins and flags broken files") {
  const auto ok = run_cli("validate builtin:square:4x4");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "ok"));

  const auto path = scratch_dir() / "broken.tiling";
  std::ofstream(path) << "[vertices]\na edges=e complete=0\nb edges=e complete=0\n"
                         "[edges]\ne endpoints=a,b sides=F,F complete=1\n"
                         "[faces]\nF boundary=a,e complete=0\n";
  const auto bad = run_cli("validate " + path.string());
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "edge-sides-distinct"));

  const auto structured = run_cli("validate " + path.string() + " --format structured");
  CHECK(structured.exit_code == 1);
  CHECK(contains(structured.out, "\"ok\": false"));
}

TEST_CASE("analyze the 16-cell ring end to end") {
  // Write the curve file from library-built cells (canonical ids).
  const auto w = build_square_window(9, 9);
  const auto cycle = square_ring16(w, square_face(9, 4, 4));
  const auto curve_path = scratch_dir() / "ring16.curve";
  save_curve_file(curve_path.string(), "builtin:square:9x9", w, cycle);

  const auto r = run_cli("analyze builtin:square:9x9 " + curve_path.string());
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "digital Jordan curve:  yes"));
  CHECK(contains(r.out, "|I(J)|:                9"));
  CHECK(contains(r.out, "edge-Jordan:           yes"));
  CHECK(contains(r.out, "order check:           ok"));

  const auto s = run_cli("analyze builtin:square:9x9 " + curve_path.string() +
                         " --format structured");
  REQUIRE(s.exit_code == 0);
  CHECK(contains(s.out, "\"interior_size\": 9"));
  CHECK(contains(s.out, "\"hypothesis_met\": true"));
}

TEST_CASE("analyze the hex star fixture") {
  const auto fixture = std::string(TILETOPO_FIXTURE_DIR) + "/hex3_star.curve";
  const auto r = run_cli("analyze builtin:hex:3 " + fixture);
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "|I(J)|:                1"));
  CHECK(contains(r.out, "well-behaved:          no"));
  CHECK(contains(r.out, "open-curve reports:    a=yes b=yes c=yes (agree=yes)"));
}

TEST_CASE("analyze rejects non-curves with exit code 1") {
  const auto w = build_square_window(9, 9);
  const auto curve_path = scratch_dir() / "notacurve.curve";
  {
    std::ofstream out(curve_path);
    out << "tiling: builtin:square:9x9\n";
    // A straight strip of faces and edges: a path, not a cycle.
    out << "f40\n";
    const auto e = shared_edge(w, square_face(9, 4, 4), square_face(9, 5, 4));
    out << "e" << *e << "\n";
    out << "f41\n";
    const auto e2 = shared_edge(w, square_face(9, 5, 4), square_face(9, 6, 4));
    out << "e" << *e2 << "\n";
    out << "f42\n";
  }
  const auto r = run_cli("analyze builtin:square:9x9 " + curve_path.string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "NotCycle"));
}

TEST_CASE("analyze rejects scrambled cyclic order") {
  const auto w = build_square_window(9, 9);
  auto cycle = square_ring16(w, square_face(9, 4, 4));
  std::swap(cycle[1], cycle[9]);  // break the cyclic order, keep the set
  const auto curve_path = scratch_dir() / "scrambled.curve";
  save_curve_file(curve_path.string(), "builtin:square:9x9", w, cycle);
  const auto r = run_cli("analyze builtin:square:9x9 " + curve_path.string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "does not match"));
}

TEST_CASE("curve cells must resolve") {
  const auto curve_path = scratch_dir() / "dangling.curve";
  std::ofstream(curve_path) << "tiling: builtin:square:4x4\nf0\nf999\n";
  CHECK(run_cli("analyze builtin:square:4x4 " + curve_path.string()).exit_code == 5);
}

TEST_CASE("sample emits analyzable curve files") {
  const auto dir = scratch_dir() / "samples";
  const auto r = run_cli("sample builtin:square:9x9 --seed 1 --samples 3 --kind closed --out " +
                         dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "emitted 3/3"));
  const auto first = dir / "curve_0000.curve";
  REQUIRE(fs::exists(first));
  const auto a = run_cli("analyze builtin:square:9x9 " + first.string());
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "closed-curve reports:  a=yes"));

  // Determinism: same seed, same first curve.
  const auto dir2 = scratch_dir() / "samples2";
  run_cli("sample builtin:square:9x9 --seed 1 --samples 3 --kind closed --out " + dir2.string());
  CHECK(slurp(first) == slurp(dir2 / "curve_0000.curve"));
}

TEST_CASE("sample exhaustion exits with 3") {
  const auto dir = scratch_dir() / "samples_none";
  const auto r = run_cli(
      "sample builtin:square:5x5 --kind vertex --min-length 26 --max-length 28 "
      "--max-attempts 50 --samples 2 --out " + dir.string());
  CHECK(r.exit_code == 3);
}

TEST_CASE("selftest passes on built-ins and fails under fault injection") {
  const auto ok = run_cli("selftest builtin:square:7x7 --samples 15 --seed 5");
  REQUIRE(ok.exit_code == 0);
  CHECK(contains(ok.out, "selftest passed"));
  CHECK(contains(ok.out, "[PASS] adjacency-definition"));

  const auto bad = run_cli("selftest builtin:square:7x7 --samples 0 --corrupt-adjacency");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "[FAIL] adjacency-definition"));
  CHECK(contains(bad.out, "counterexample"));

  const auto warn = run_cli("selftest builtin:square:5x5 --samples 0");
  CHECK(warn.exit_code == 0);
  CHECK(contains(warn.out, "warning: zero samples requested"));
}

TEST_CASE("render produces deterministic SVG and demands coordinates") {
  const auto svg_path = scratch_dir() / "grid.svg";
  const auto r = run_cli("render builtin:square:5x5 --out " + svg_path.string());
  REQUIRE(r.exit_code == 0);
  const auto svg = slurp(svg_path);
  CHECK(contains(svg, "<?xml"));
  CHECK(contains(svg, "<polygon"));
  CHECK(contains(svg, "<circle"));
  CHECK(contains(svg, "<path"));

  const auto svg2_path = scratch_dir() / "grid2.svg";
  run_cli("render builtin:square:5x5 --out " + svg2_path.string());
  CHECK(svg == slurp(svg2_path));

  // A tiling file without coords cannot be rendered.
  const auto bare = scratch_dir() / "bare.tiling";
  std::ofstream(bare) << "[vertices]\na edges=e faces= complete=0\nb edges=e faces= complete=0\n"
                         "[edges]\ne endpoints=a,b sides= complete=0\n[faces]\n";
  CHECK(run_cli("render " + bare.string() + " --out /tmp/never.svg").exit_code == 4);
}

TEST_CASE("render with curve and split matches the golden file") {
  const auto fixture_curve = std::string(TILETOPO_FIXTURE_DIR) + "/hex3_star.curve";
  const auto golden = std::string(TILETOPO_FIXTURE_DIR) + "/hex3_star.svg";
  const auto out = scratch_dir() / "hex3_star.svg";
  const auto r = run_cli("render builtin:hex:3 --curve " + fixture_curve + " --split --out " +
                         out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(out) == slurp(golden));
}
