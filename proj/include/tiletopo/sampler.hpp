#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tiletopo/curve_classes.hpp"
#include "tiletopo/jordan.hpp"

namespace tiletopo {

enum class CurveKindFilter { Any, Open, Closed, EdgeJordan, VertexJordan };

inline const char* to_string(CurveKindFilter k) {
  switch (k) {
    case CurveKindFilter::Any: return "any";
    case CurveKindFilter::Open: return "open";
    case CurveKindFilter::Closed: return "closed";
    case CurveKindFilter::EdgeJordan: return "edge";
    case CurveKindFilter::VertexJordan: return "vertex";
  }
  return "?";
}

/// Deterministic sampler configuration: a fixed seed and window always
/// reproduce the same curve sequence.
struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t min_length = 4;
  std::size_t max_length = 28;
  CurveKindFilter kind = CurveKindFilter::Any;
  std::size_t max_attempts = 50000;
  int margin = 2;
};

struct SampleRun {
  std::vector<std::vector<CellRef>> curves;  // canonical cyclic order each
  std::size_t attempts = 0;
  bool exhausted = false;  // max_attempts hit before the request was filled
};

namespace detail {

/// Cell kinds a walk may visit for a kind filter. Open and edge-Jordan
/// curves live in faces+edges, closed ones in vertices+edges,
/// vertex-Jordan ones in faces+vertices.
inline bool kind_allowed(CurveKindFilter filter, CellKind kind) {
  switch (filter) {
    case CurveKindFilter::Any: return true;
    case CurveKindFilter::Open:
    case CurveKindFilter::EdgeJordan: return kind != CellKind::Vertex;
    case CurveKindFilter::Closed: return kind != CellKind::Face;
    case CurveKindFilter::VertexJordan: return kind != CellKind::Edge;
  }
  return true;
}

inline bool passes_kind_gate(const DigitalSpace& space, const CellSet& J,
                             CurveKindFilter filter) {
  switch (filter) {
    case CurveKindFilter::Any:
      return true;
    case CurveKindFilter::Open:
      return interior_members(space, J) == J;
    case CurveKindFilter::Closed:
      return closure_union(space, J) == J;
    case CurveKindFilter::EdgeJordan:
      return edge_jordan_status(space, J) == KindStatus::Yes;
    case CurveKindFilter::VertexJordan:
      return vertex_jordan_status(space, J) == KindStatus::Yes;
  }
  return false;
}

/// Rotates/reflects a cycle to canonical form: least cell first, then
/// towards its lesser neighbour.
inline std::vector<CellId> canonical_cycle(std::vector<CellId> cycle) {
  const std::size_t n = cycle.size();
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (cycle[i] < cycle[best]) best = i;
  std::vector<CellId> out;
  out.reserve(n);
  const CellId fwd = cycle[(best + 1) % n];
  const CellId bwd = cycle[(best + n - 1) % n];
  if (fwd <= bwd)
    for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[(best + i) % n]);
  else
    for (std::size_t i = 0; i < n; ++i) out.push_back(cycle[(best + n - i) % n]);
  return out;
}

}  // namespace detail

/// Randomized induced-cycle search: a random walk in the connectedness
/// graph restricted to cells with enough completeness margin, closed into
/// a cycle, repaired chord by chord by shortcutting, and finally verified
/// by is_jordan_curve and the kind gate. Only verified curves are emitted.
inline SampleRun sample_curves(const DigitalSpace& space, const SamplerConfig& config,
                               std::size_t count) {
  SampleRun run;
  if (count == 0) return run;

  const auto& layout = space.layout();
  detail::BitVec eligible(layout.total());
  std::vector<CellId> pool;
  for (CellId id = 0; id < layout.total(); ++id) {
    const CellRef c = layout.ref(id);
    if (!detail::kind_allowed(config.kind, c.kind)) continue;
    if (!space.is_complete_id(id)) continue;
    if (!star_complete(space.window(), c, config.margin)) continue;
    eligible.set(id);
    pool.push_back(id);
  }
  if (pool.empty()) {
    run.exhausted = true;
    return run;
  }

  std::mt19937_64 rng(config.seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::set<std::vector<CellId>> seen;
  std::vector<int> pos_in_path(layout.total(), -1);
  const std::size_t step_budget = config.max_length * 2 + 8;

  while (run.curves.size() < count && run.attempts < config.max_attempts) {
    ++run.attempts;
    std::vector<CellId> path{pool[pick(pool.size())]};
    pos_in_path[path[0]] = 0;
    std::vector<CellId> cycle;
    std::vector<CellId> options;
    for (std::size_t step = 0; step < step_budget && cycle.empty(); ++step) {
      const CellId cur = path.back();
      options.clear();
      for (CellId n : space.adjacency_ids(cur)) {
        if (!eligible.test(n)) continue;
        if (path.size() >= 2 && n == path[path.size() - 2]) continue;
        options.push_back(n);
      }
      if (options.empty()) break;
      const CellId next = options[pick(options.size())];
      const int at = pos_in_path[next];
      if (at >= 0) {
        if (path.size() - static_cast<std::size_t>(at) >= 3)
          cycle.assign(path.begin() + at, path.end());
        break;
      }
      pos_in_path[next] = static_cast<int>(path.size());
      path.push_back(next);
    }
    for (CellId id : path) pos_in_path[id] = -1;
    if (cycle.empty()) continue;

    // Chord repair: keep shortcutting across the least chord, retaining
    // the longer side, until the cycle is induced or too short.
    bool induced = false;
    while (cycle.size() >= 4) {
      const std::size_t n = cycle.size();
      std::size_t ci = n, cj = n;
      for (std::size_t i = 0; i < n && ci == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
          if (consecutive) continue;
          if (space.adjacency_bits(cycle[i]).test(cycle[j])) {
            ci = i;
            cj = j;
            break;
          }
        }
      }
      if (ci == n) {
        induced = true;
        break;
      }
      std::vector<CellId> inside(cycle.begin() + ci, cycle.begin() + cj + 1);
      std::vector<CellId> outside(cycle.begin() + cj, cycle.end());
      outside.insert(outside.end(), cycle.begin(), cycle.begin() + ci + 1);
      cycle = (inside.size() >= outside.size()) ? std::move(inside) : std::move(outside);
    }
    if (!induced || cycle.size() < std::max<std::size_t>(config.min_length, 4) ||
        cycle.size() > config.max_length)
      continue;

    CellSet J(layout);
    for (CellId id : cycle) J.insert_id(id);
    if (!is_jordan_curve(space, J).is_jordan) continue;
    if (!detail::passes_kind_gate(space, J, config.kind)) continue;

    auto canon = detail::canonical_cycle(cycle);
    if (!seen.insert(canon).second) continue;
    std::vector<CellRef> refs;
    refs.reserve(canon.size());
    for (CellId id : canon) refs.push_back(layout.ref(id));
    run.curves.push_back(std::move(refs));
  }
  run.exhausted = run.curves.size() < count;
  return run;
}

}  // namespace tiletopo
