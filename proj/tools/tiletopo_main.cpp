// tiletopo command line tool: generate and validate tiling windows,
// analyze digital Jordan curves, sample curves, run the self-test
// property suites, and render SVG drawings.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiletopo/tiletopo.hpp"
#include "tiletopo/serialize.hpp"

namespace {

// Exit codes: 0 ok, 1 analysis-negative, 2 usage, 3 sampler exhaustion,
// 4 rendering precondition, 5 I/O or document error.
constexpr int kOk = 0;
constexpr int kAnalysisNegative = 1;
constexpr int kUsage = 2;
constexpr int kSamplerExhausted = 3;
constexpr int kRenderPrecondition = 4;
constexpr int kIoError = 5;

using namespace tiletopo;

std::string tiling_display_ref(const std::string& arg) { return arg; }

TilingWindow open_tiling_arg(const std::string& arg) { return open_tiling_ref(arg); }

struct ResolvedCurve {
  CellSet cells;
  std::vector<CellRef> file_order;
};

ResolvedCurve resolve_curve(const TilingWindow& w, const CurveDocument& doc,
                            const std::string& source) {
  ResolvedCurve out{CellSet(w.layout()), {}};
  for (const auto& id : doc.cells) {
    const auto ref = w.find_cell(id);
    if (!ref) throw ParseError(source + ": curve cell '" + id + "' does not resolve in tiling");
    if (out.cells.contains(*ref))
      throw ParseError(source + ": curve lists cell '" + id + "' twice");
    out.cells.insert(*ref);
    out.file_order.push_back(*ref);
  }
  return out;
}

/// The file order must be the curve's own cyclic order, up to rotation
/// and direction.
bool cyclic_order_matches(const std::vector<CellRef>& file_order,
                          const std::vector<CellRef>& canonical) {
  if (file_order.size() != canonical.size()) return false;
  const std::size_t n = canonical.size();
  auto least = std::min_element(file_order.begin(), file_order.end());
  const std::size_t at = static_cast<std::size_t>(least - file_order.begin());
  for (int dir : {+1, -1}) {
    bool same = true;
    for (std::size_t k = 0; k < n && same; ++k) {
      const std::size_t i = (at + n + (dir > 0 ? k : n - k)) % n;
      if (file_order[i] != canonical[k]) same = false;
    }
    if (same) return true;
  }
  return false;
}

int cmd_generate(const std::string& shape, const std::vector<int>& dims,
                 const std::string& out_path) {
  TilingWindow w;
  if (shape == "square") {
    if (dims.size() != 2) throw std::invalid_argument("generate square needs COLS ROWS");
    w = build_square_window(dims[0], dims[1]);
  } else if (shape == "hex") {
    if (dims.size() != 1) throw std::invalid_argument("generate hex needs RADIUS");
    w = build_hexagonal_window(dims[0]);
  } else if (shape == "tri") {
    if (dims.size() != 1) throw std::invalid_argument("generate tri needs SIZE");
    w = build_triangular_window(dims[0]);
  } else {
    throw std::invalid_argument("unknown shape '" + shape + "' (square|hex|tri)");
  }
  if (out_path.empty()) {
    save_tiling(std::cout, w);
  } else {
    save_tiling_file(out_path, w);
    std::cout << out_path << ": " << w.faces.size() << " faces, " << w.edges.size()
              << " edges, " << w.vertices.size() << " vertices\n";
  }
  return kOk;
}

int cmd_validate(const std::string& tiling_arg, const std::string& format) {
  const TilingWindow w = open_tiling_arg(tiling_arg);
  const ValidationReport report = validate_tiling(w);
  if (format == "structured")
    std::cout << to_json(w, report).dump(2) << "\n";
  else
    write_validation_text(std::cout, w, report);
  return report.ok ? kOk : kAnalysisNegative;
}

int cmd_analyze(const std::string& tiling_arg, const std::string& curve_path, int margin,
                const std::string& format) {
  const TilingWindow w = open_tiling_arg(tiling_arg);
  const DigitalSpace space(w);
  const CurveDocument doc = load_curve_file(curve_path);
  const ResolvedCurve curve = resolve_curve(w, doc, curve_path);

  const AnalysisReport report = analyze_curve(space, curve.cells, margin);
  if (format == "structured")
    std::cout << to_json(w, report).dump(2) << "\n";
  else
    write_analysis_text(std::cout, w, report);

  if (!report.is_jordan) return kAnalysisNegative;
  if (!cyclic_order_matches(curve.file_order, report.cycle)) {
    std::cout << "order check:           curve file order does not match the curve's cyclic"
                 " structure (rejected)\n";
    return kAnalysisNegative;
  }
  std::cout << "order check:           ok\n";
  return kOk;
}

CurveKindFilter parse_kind(const std::string& kind) {
  if (kind == "any") return CurveKindFilter::Any;
  if (kind == "open") return CurveKindFilter::Open;
  if (kind == "closed") return CurveKindFilter::Closed;
  if (kind == "edge") return CurveKindFilter::EdgeJordan;
  if (kind == "vertex") return CurveKindFilter::VertexJordan;
  throw std::invalid_argument("unknown kind '" + kind + "' (any|open|closed|edge|vertex)");
}

int cmd_sample(const std::string& tiling_arg, const SamplerConfig& config, std::size_t samples,
               const std::string& out_dir) {
  const TilingWindow w = open_tiling_arg(tiling_arg);
  const DigitalSpace space(w);
  const SampleRun run = sample_curves(space, config, samples);
  if (run.curves.empty()) {
    std::cerr << "sample: no curve found after " << run.attempts << " attempts\n";
    return kSamplerExhausted;
  }
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < run.curves.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "curve_%04zu.curve", i);
    const auto path = (std::filesystem::path(out_dir) / name).string();
    save_curve_file(path, tiling_display_ref(tiling_arg), w, run.curves[i]);
    std::cout << path << ": " << run.curves[i].size() << " cells\n";
  }
  std::cout << "emitted " << run.curves.size() << "/" << samples << " curves in "
            << run.attempts << " attempts (seed " << config.seed << ", kind "
            << to_string(config.kind) << ")\n";
  if (run.exhausted)
    std::cout << "warning: attempt budget exhausted before filling the request\n";
  return kOk;
}

int cmd_render(const std::string& tiling_arg, const std::string& curve_path, bool with_split,
               int margin, const std::string& out_path) {
  const TilingWindow w = open_tiling_arg(tiling_arg);
  if (!w.has_coords()) {
    std::cerr << "render: tiling has no vertex coordinates\n";
    return kRenderPrecondition;
  }
  CellSet curve(w.layout());
  ComplementSplit split{CellSet(w.layout()), CellSet(w.layout()), CellRef{}};
  bool have_curve = false, have_split = false;
  if (!curve_path.empty()) {
    const DigitalSpace space(w);
    const CurveDocument doc = load_curve_file(curve_path);
    curve = resolve_curve(w, doc, curve_path).cells;
    have_curve = true;
    if (with_split) {
      split = jordan_complement(space, curve, margin);
      have_split = true;
    }
  }
  const std::string svg = render_svg(w, have_curve ? &curve : nullptr,
                                     have_split ? &split : nullptr);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(out_path + ": cannot write SVG file");
  out << svg;
  std::cout << out_path << ": " << svg.size() << " bytes\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// selftest: every library invariant as a named suite with counterexamples.

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string counterexample;
};

class SelftestRunner {
 public:
  SelftestRunner(std::uint64_t seed, std::size_t samples, int margin, bool corrupt)
      : seed_(seed), samples_(samples), margin_(margin), corrupt_(corrupt) {}

  int run(const std::vector<std::string>& tiling_args) {
    for (const auto& arg : tiling_args) {
      windows_.emplace_back(arg, open_tiling_arg(arg));
    }
    for (auto& [arg, w] : windows_) {
      DigitalSpace space(w);
      if (corrupt_) space.debug_corrupt_adjacency_cache();
      run_window(arg, w, space);
    }
    bool all = true;
    std::size_t total_checks = 0;
    for (const auto& s : results_) {
      std::cout << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.checks
                << " checks)";
      if (!s.pass) std::cout << "  counterexample: " << s.counterexample;
      std::cout << "\n";
      all &= s.pass;
      total_checks += s.checks;
    }
    if (samples_ == 0)
      std::cout << "warning: zero samples requested; curve suites were skipped\n";
    std::cout << (all ? "selftest passed" : "selftest FAILED") << " (" << total_checks
              << " checks total)\n";
    return all ? kOk : kAnalysisNegative;
  }

 private:
  SuiteResult& suite(const std::string& name) {
    for (auto& s : results_)
      if (s.name == name) return s;
    SuiteResult fresh;
    fresh.name = name;
    results_.push_back(std::move(fresh));
    return results_.back();
  }

  void check(const std::string& name, bool ok, const std::string& context) {
    auto& s = suite(name);
    ++s.checks;
    if (!ok && s.pass) {
      s.pass = false;
      s.counterexample = context;
    }
  }

  void run_window(const std::string& arg, const TilingWindow& w, const DigitalSpace& space) {
    const auto layout = w.layout();

    // Window validity.
    {
      const auto report = validate_tiling(w);
      std::string ctx = arg;
      if (!report.ok && !report.violations.empty())
        ctx += ": " + report.violations.front().message;
      check("window-validity", report.ok, ctx);
    }

    // Save and reload reproduces the window up to relabeling.
    {
      std::ostringstream saved;
      save_tiling(saved, w);
      std::istringstream in(saved.str());
      bool ok = false;
      try {
        ok = windows_isomorphic(load_tiling(in, arg + " <roundtrip>"), w);
      } catch (const Error&) {
      }
      check("io-roundtrip", ok, arg);
    }

    // Adjacency agrees with its definition; symmetry; kind bipartiteness.
    for (CellId id = 0; id < layout.total(); ++id) {
      if (!space.is_complete_id(id)) continue;
      const CellRef x = layout.ref(id);
      const CellSet a = space.adjacency_set(x);
      check("adjacency-definition", a == space.adjacency_set_from_definition(x),
            arg + " cell " + to_string(x));
      a.for_each([&](CellRef y) {
        if (space.is_complete(y))
          check("adjacency-symmetry", space.adjacency_set(y).contains(x),
                arg + " pair " + to_string(x) + "," + to_string(y));
        check("kind-bipartite",
              !(x.kind == y.kind &&
                (x.kind == CellKind::Face || x.kind == CellKind::Vertex)),
              arg + " pair " + to_string(x) + "," + to_string(y));
      });
    }

    // Local Hamiltonicity on star-complete cells.
    for (CellId id = 0; id < layout.total(); ++id) {
      const CellRef x = layout.ref(id);
      if (!star_complete(w, x, 1)) continue;
      bool ok = true;
      std::size_t len = 0;
      try {
        len = local_adjacency_cycle(space, x).size();
      } catch (const Error&) {
        ok = false;
      }
      check("local-hamiltonicity", ok && len >= 4, arg + " cell " + to_string(x));
    }

    // Components against the transitive-closure oracle, plus the two
    // closure-set formulations, on random complete subsets.
    std::mt19937_64 rng(seed_ ^ 0x9e3779b97f4a7c15ULL);
    std::vector<CellId> complete_ids;
    for (CellId id = 0; id < layout.total(); ++id)
      if (space.is_complete_id(id)) complete_ids.push_back(id);
    std::vector<CellId> margin1_ids;
    for (CellId id : complete_ids)
      if (star_complete(w, layout.ref(id), 1)) margin1_ids.push_back(id);
    for (int trial = 0; trial < 60 && !complete_ids.empty(); ++trial) {
      const std::size_t size = 1 + rng() % 12;
      CellSet s(layout);
      for (std::size_t k = 0; k < size; ++k)
        s.insert_id(complete_ids[rng() % complete_ids.size()]);
      const auto got = components(space, s);
      const auto want = components_by_transitive_closure(space, s);
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i] == want[i];
      check("components-oracle", same, arg + " subset of size " + std::to_string(s.size()));
    }
    for (int trial = 0; trial < 40 && !margin1_ids.empty(); ++trial) {
      const std::size_t size = 1 + rng() % 8;
      CellSet s(layout);
      for (std::size_t k = 0; k < size; ++k)
        s.insert_id(margin1_ids[rng() % margin1_ids.size()]);
      const CellSet cl = closure_set(space, s);
      CellSet dual(layout);
      for (CellId id = 0; id < layout.total(); ++id) {
        const CellRef x = layout.ref(id);
        if (!space.is_complete(x)) continue;
        if (space.smallest_neighborhood(x).intersects(s)) dual.insert(x);
      }
      // cl(S) = {x : N(x) meets S}, restricted to complete cells.
      CellSet cl_complete = cl;
      CellSet incompletes(layout);
      for (CellId id = 0; id < layout.total(); ++id)
        if (!space.is_complete_id(id)) incompletes.insert_id(id);
      cl_complete -= incompletes;
      check("closure-duality", cl_complete == dual,
            arg + " subset of size " + std::to_string(s.size()));
      const CellSet interior = interior_set(space, s);
      bool ok = true;
      s.for_each([&](CellRef x) {
        const bool member = space.smallest_neighborhood(x).subset_of(s);
        if (interior.contains(x) != member) ok = false;
      });
      check("interior-membership", ok, arg + " subset of size " + std::to_string(s.size()));
    }

    if (samples_ == 0) return;

    // Sampled-curve suites.
    SamplerConfig config;
    config.seed = seed_;
    config.margin = margin_;
    config.kind = CurveKindFilter::Any;
    const SampleRun run = sample_curves(space, config, samples_);
    run_curves(arg, w, space, run, "sampled");

    SamplerConfig edge_config = config;
    edge_config.kind = CurveKindFilter::EdgeJordan;
    edge_config.seed = seed_ + 1;
    const SampleRun edge_run = sample_curves(space, edge_config, samples_ / 2 + 1);
    run_curves(arg, w, space, edge_run, "edge-jordan");

    SamplerConfig vertex_config = config;
    vertex_config.kind = CurveKindFilter::VertexJordan;
    vertex_config.seed = seed_ + 2;
    const SampleRun vertex_run = sample_curves(space, vertex_config, samples_ / 2 + 1);
    run_curves(arg, w, space, vertex_run, "vertex-jordan");
  }

  void run_curves(const std::string& arg, const TilingWindow& w, const DigitalSpace& space,
                  const SampleRun& run, const std::string& label) {
    for (const auto& cycle : run.curves) {
      CellSet J(w.layout());
      for (CellRef c : cycle) J.insert(c);
      std::string ctx = arg + " " + label + " curve {";
      for (std::size_t i = 0; i < cycle.size(); ++i)
        ctx += (i ? "," : "") + w.cell_name(cycle[i]);
      ctx += "}";

      const auto fast = is_jordan_curve(space, J);
      const auto slow = is_jordan_curve_by_deletion(space, J);
      check("sampler-soundness", fast.is_jordan, ctx);
      check("validator-agreement", fast.is_jordan == slow.is_jordan, ctx);
      if (!fast.is_jordan) continue;

      // A deleted cell leaves a digital arc both by the induced-path
      // route and by interval homeomorphism.
      {
        std::vector<CellRef> path(cycle.begin() + 1, cycle.end());
        const bool by_graph = is_digital_arc(space, path);
        const bool by_interval = is_digital_arc_by_interval(space, path);
        check("arc-oracle-agreement", by_graph && by_interval, ctx);
      }

      ComplementSplit split{CellSet(w.layout()), CellSet(w.layout()), CellRef{}};
      bool split_ok = true;
      try {
        split = jordan_complement(space, J, margin_);
      } catch (const Error& e) {
        split_ok = false;
        check("two-components", false, ctx + " error: " + e.what());
      }
      if (!split_ok) continue;
      check("two-components", !split.interior.empty() && !split.exterior.empty(), ctx);
      bool interior_rim_free = true;
      split.interior.for_each([&](CellRef c) {
        for (CellId n : space.adjacency_ids(w.layout().id(c)))
          if (!space.is_complete_id(n)) interior_rim_free = false;
      });
      check("interior-rim-disjoint", interior_rim_free, ctx);
      check("curve-interior-contact", interior_adjacency_check(space, J, split), ctx);

      const auto closed = classify_closed(space, J, split, margin_);
      check("closed-coherence", closed.all_agree(), ctx);
      const auto open = classify_open(space, J, split, margin_);
      check("open-coherence", open.all_agree(), ctx);
      if (open.value())
        check("open-interior-vertex", open_interior_vertex_check(space, J, split), ctx);
      const auto wb = is_well_behaved(space, J);
      if (wb.well_behaved && split.interior.count_kind(CellKind::Vertex) > 0)
        check("wb-interior-face", well_behaved_interior_face(space, J, split), ctx);

      if (edge_jordan_status(space, J) == KindStatus::Yes) {
        const auto report = rosenfeld_report(space, J, JordanKind::EdgeJordan, margin_);
        if (report.hypothesis_met) {
          check("edge-jordan-hypothesis-wb", report.well_behaved, ctx);
          check("rosenfeld-edge", report.conclusions_hold(), ctx);
        }
      }
      if (vertex_jordan_status(space, J) == KindStatus::Yes) {
        const auto report = rosenfeld_report(space, J, JordanKind::VertexJordan, margin_);
        if (report.hypothesis_met)
          check("rosenfeld-vertex", report.conclusions_hold(), ctx);
      }
    }
  }

  std::uint64_t seed_;
  std::size_t samples_;
  int margin_;
  bool corrupt_;
  std::vector<std::pair<std::string, TilingWindow>> windows_;
  std::vector<SuiteResult> results_;
};

int cmd_selftest(const std::vector<std::string>& tilings, std::uint64_t seed,
                 std::size_t samples, int margin, bool corrupt) {
  std::vector<std::string> args = tilings;
  if (args.empty())
    args = {"builtin:square:9x9", "builtin:hex:3", "builtin:tri:6"};
  SelftestRunner runner(seed, samples, margin, corrupt);
  return runner.run(args);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital topology of locally finite plane tilings"};
  app.require_subcommand(1);

  std::string shape, out_path, format = "text", curve_path, tiling_arg;
  std::vector<int> dims;
  std::vector<std::string> tilings;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  int margin = 2;
  bool with_split = false, corrupt = false;
  SamplerConfig sampler_config;

  auto* gen = app.add_subcommand("generate", "generate a built-in tiling window");
  gen->add_option("shape", shape, "square|hex|tri")->required();
  gen->add_option("dims", dims, "square: COLS ROWS; hex: RADIUS; tri: SIZE")->required();
  gen->add_option("--out", out_path, "output tiling file (stdout if omitted)");

  auto* val = app.add_subcommand("validate", "check the tiling axioms on a window");
  val->add_option("tiling", tiling_arg, "tiling file or builtin:<spec>")->required();
  val->add_option("--format", format, "text|structured");

  auto* ana = app.add_subcommand("analyze", "full digital Jordan curve analysis");
  ana->add_option("tiling", tiling_arg, "tiling file or builtin:<spec>")->required();
  ana->add_option("curve", curve_path, "curve file")->required();
  ana->add_option("--margin", margin, "completeness margin depth (default 2)");
  ana->add_option("--format", format, "text|structured");

  std::string kind = "any";
  auto* smp = app.add_subcommand("sample", "sample verified digital Jordan curves");
  smp->add_option("tiling", tiling_arg, "tiling file or builtin:<spec>")->required();
  smp->add_option("--seed", seed, "RNG seed (default 0)");
  smp->add_option("--samples", samples, "number of curves to emit (default 100)");
  smp->add_option("--kind", kind, "any|open|closed|edge|vertex");
  smp->add_option("--min-length", sampler_config.min_length, "minimum curve length");
  smp->add_option("--max-length", sampler_config.max_length, "maximum curve length");
  smp->add_option("--max-attempts", sampler_config.max_attempts, "attempt budget");
  smp->add_option("--margin", margin, "completeness margin depth (default 2)");
  smp->add_option("--out", out_path, "output directory for curve files")->required();

  auto* st = app.add_subcommand("selftest", "run every invariant suite");
  st->add_option("tilings", tilings, "tiling files or builtin:<spec> (default: built-ins)");
  st->add_option("--seed", seed, "RNG seed (default 0)");
  st->add_option("--samples", samples, "curves to sample per window (default 100)");
  st->add_option("--margin", margin, "completeness margin depth (default 2)");
  st->add_flag("--corrupt-adjacency", corrupt,
               "debug: tamper with the adjacency cache to prove the cross-check fires");

  auto* ren = app.add_subcommand("render", "render a window (and curve) to SVG");
  ren->add_option("tiling", tiling_arg, "tiling file or builtin:<spec>")->required();
  ren->add_option("--curve", curve_path, "curve file to highlight");
  ren->add_flag("--split", with_split, "also shade the curve's interior");
  ren->add_option("--margin", margin, "completeness margin depth (default 2)");
  ren->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(shape, dims, out_path);
    if (val->parsed()) return cmd_validate(tiling_arg, format);
    if (ana->parsed()) return cmd_analyze(tiling_arg, curve_path, margin, format);
    if (smp->parsed()) {
      sampler_config.seed = seed;
      sampler_config.kind = parse_kind(kind);
      sampler_config.margin = margin;
      return cmd_sample(tiling_arg, sampler_config, samples, out_path);
    }
    if (st->parsed()) return cmd_selftest(tilings, seed, samples, margin, corrupt);
    if (ren->parsed()) return cmd_render(tiling_arg, curve_path, with_split, margin, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const MarginError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAnalysisNegative;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAnalysisNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kUsage;
}
