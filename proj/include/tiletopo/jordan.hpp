#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tiletopo/digital_space.hpp"

namespace tiletopo {

enum class CurveFailure {
  Ok,
  TooShort,           // fewer than four cells
  NotCycle,           // induced subgraph is not a single cycle
  Chord,              // cycle plus at least one extra adjacency
  ArcDeletionFailed,  // some deletion does not leave a digital arc
  IncompleteMargin,   // a member is incomplete
};

inline const char* to_string(CurveFailure f) {
  switch (f) {
    case CurveFailure::Ok: return "Ok";
    case CurveFailure::TooShort: return "TooShort";
    case CurveFailure::NotCycle: return "NotCycle";
    case CurveFailure::Chord: return "Chord";
    case CurveFailure::ArcDeletionFailed: return "ArcDeletionFailed";
    case CurveFailure::IncompleteMargin: return "IncompleteMargin";
  }
  return "?";
}

/// Outcome of digital Jordan curve validation, with the first failure in
/// canonical order as diagnostic payload.
struct CurveVerdict {
  bool is_jordan = false;
  CurveFailure reason = CurveFailure::Ok;
  std::optional<std::pair<CellRef, CellRef>> chord;  // set for Chord
  std::optional<CellRef> cell;                       // set for ArcDeletionFailed / IncompleteMargin

  static CurveVerdict ok() { return {true, CurveFailure::Ok, std::nullopt, std::nullopt}; }
  static CurveVerdict fail(CurveFailure r) { return {false, r, std::nullopt, std::nullopt}; }
  static CurveVerdict fail_cell(CurveFailure r, CellRef c) {
    return {false, r, std::nullopt, c};
  }
  static CurveVerdict fail_chord(CellRef a, CellRef b) {
    return {false, CurveFailure::Chord, std::make_pair(a, b), std::nullopt};
  }

  std::string describe() const {
    std::string s = to_string(reason);
    if (chord) s += " {" + tiletopo::to_string(chord->first) + "," + tiletopo::to_string(chord->second) + "}";
    if (cell) s += " at " + tiletopo::to_string(*cell);
    return s;
  }
};

namespace detail {

inline std::vector<CellId> sorted_ids(std::span<const CellId> ids) {
  std::vector<CellId> s(ids.begin(), ids.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline std::optional<CellRef> first_incomplete(const DigitalSpace& space,
                                               std::span<const CellId> ids) {
  for (CellId id : ids)
    if (!space.is_complete_id(id)) return space.layout().ref(id);
  return std::nullopt;
}

/// Connectivity of `ids` (subset of mask) under space adjacency, where
/// `skip` (or -1) is treated as deleted.
inline bool connected_within(const DigitalSpace& space, std::span<const CellId> ids,
                             const BitVec& mask, long long skip) {
  CellId start = ids.front();
  std::size_t expected = ids.size();
  if (skip >= 0) {
    expected -= 1;
    if (start == static_cast<CellId>(skip)) start = ids[1];
  }
  if (expected == 0) return true;
  BitVec seen(mask.capacity());
  std::vector<CellId> stack{start};
  seen.set(start);
  std::size_t reached = 1;
  while (!stack.empty()) {
    const CellId cur = stack.back();
    stack.pop_back();
    for (CellId n : space.adjacency_ids(cur)) {
      if (!mask.test(n) || seen.test(n)) continue;
      if (skip >= 0 && n == static_cast<CellId>(skip)) continue;
      seen.set(n);
      ++reached;
      stack.push_back(n);
    }
  }
  return reached == expected;
}

}  // namespace detail

/// Fast-path Jordan curve test: Ok iff |J| >= 4 and the induced subgraph
/// on J is a single chordless cycle. Diagnostics report the first failure
/// in canonical cell order; chords are the lexicographically least
/// adjacent pair whose endpoints both have induced degree >= 3.
inline CurveVerdict is_jordan_curve(const DigitalSpace& space, std::span<const CellId> ids_in) {
  const auto ids = detail::sorted_ids(ids_in);
  if (auto bad = detail::first_incomplete(space, ids))
    return CurveVerdict::fail_cell(CurveFailure::IncompleteMargin, *bad);
  const std::size_t n = ids.size();
  if (n < 4) return CurveVerdict::fail(CurveFailure::TooShort);

  detail::BitVec mask(space.cell_count());
  for (CellId id : ids) mask.set(id);
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i)
    deg[i] = space.adjacency_bits(ids[i]).count_and(mask);

  if (!detail::connected_within(space, ids, mask, -1))
    return CurveVerdict::fail(CurveFailure::NotCycle);
  if (std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; }))
    return CurveVerdict::ok();
  if (std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d < 2; }))
    return CurveVerdict::fail(CurveFailure::NotCycle);
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] < 3) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (deg[j] < 3 || !space.adjacency_bits(ids[i]).test(ids[j])) continue;
      return CurveVerdict::fail_chord(space.layout().ref(ids[i]), space.layout().ref(ids[j]));
    }
  }
  return CurveVerdict::fail(CurveFailure::NotCycle);
}

inline CurveVerdict is_jordan_curve(const DigitalSpace& space, const CellSet& J) {
  return is_jordan_curve(space, std::span<const CellId>(J.ids()));
}

/// Definitional Jordan curve test: Ok iff |J| >= 4 and deleting any
/// single member leaves a set whose induced subgraph is a simple path
/// (a digital arc). Agrees with is_jordan_curve on every input.
inline CurveVerdict is_jordan_curve_by_deletion(const DigitalSpace& space,
                                                std::span<const CellId> ids_in) {
  const auto ids = detail::sorted_ids(ids_in);
  if (auto bad = detail::first_incomplete(space, ids))
    return CurveVerdict::fail_cell(CurveFailure::IncompleteMargin, *bad);
  const std::size_t n = ids.size();
  if (n < 4) return CurveVerdict::fail(CurveFailure::TooShort);

  detail::BitVec mask(space.cell_count());
  for (CellId id : ids) mask.set(id);

  for (std::size_t jpos = 0; jpos < n; ++jpos) {
    const CellId j = ids[jpos];
    // Induced subgraph on J \ {j}: simple path iff connected, acyclic
    // (edge count |T|-1) and maximum degree <= 2.
    std::size_t edges2 = 0;  // twice the edge count
    bool deg_ok = true;
    for (std::size_t i = 0; i < n && deg_ok; ++i) {
      if (i == jpos) continue;
      std::size_t d = space.adjacency_bits(ids[i]).count_and(mask);
      if (space.adjacency_bits(ids[i]).test(j)) --d;
      if (d > 2) deg_ok = false;
      edges2 += d;
    }
    const bool path = deg_ok && edges2 == 2 * (n - 2) &&
                      detail::connected_within(space, ids, mask, j);
    if (!path)
      return CurveVerdict::fail_cell(CurveFailure::ArcDeletionFailed, space.layout().ref(j));
  }
  return CurveVerdict::ok();
}

inline CurveVerdict is_jordan_curve_by_deletion(const DigitalSpace& space, const CellSet& J) {
  return is_jordan_curve_by_deletion(space, std::span<const CellId>(J.ids()));
}

/// Cyclic order of a validated Jordan curve, canonicalized: starts at the
/// least cell and proceeds towards its lesser neighbour.
inline std::vector<CellRef> curve_cycle_order(const DigitalSpace& space, const CellSet& J) {
  const auto verdict = is_jordan_curve(space, J);
  if (!verdict.is_jordan)
    throw std::invalid_argument("curve_cycle_order: not a digital Jordan curve (" +
                                verdict.describe() + ")");
  const auto ids = J.ids();
  detail::BitVec mask(space.cell_count());
  for (CellId id : ids) mask.set(id);
  auto neighbours = [&](CellId c) {
    std::vector<CellId> out;
    for (CellId n : space.adjacency_ids(c))
      if (mask.test(n)) out.push_back(n);
    return out;
  };
  std::vector<CellRef> cycle;
  cycle.reserve(ids.size());
  const CellId start = ids.front();
  auto nb = neighbours(start);
  CellId prev = start;
  CellId cur = std::min(nb[0], nb[1]);
  cycle.push_back(space.layout().ref(start));
  while (cur != start) {
    cycle.push_back(space.layout().ref(cur));
    auto cn = neighbours(cur);
    const CellId next = (cn[0] == prev) ? cn[1] : cn[0];
    prev = cur;
    cur = next;
  }
  return cycle;
}

/// The Hamiltonian cycle of the induced subgraph on A(x), read off the
/// stored cyclic orders: a vertex interleaves its edges and faces, an
/// edge yields the 4-cycle endpoint/side/endpoint/side, and a face walks
/// its boundary. The construction is verified against the adjacency
/// structure; a failure means the window is not a valid tiling excerpt.
inline std::vector<CellRef> local_adjacency_cycle(const DigitalSpace& space, CellRef x) {
  const TilingWindow& w = space.window();
  if (!w.contains(x))
    throw std::invalid_argument("local_adjacency_cycle: unknown cell " + to_string(x));
  if (!star_complete(w, x, 1))
    throw MarginError("local_adjacency_cycle: incomplete star at " + to_string(x));

  std::vector<CellRef> cycle;
  switch (x.kind) {
    case CellKind::Vertex: {
      const auto& v = w.vertices[x.index];
      if (v.faces.size() != v.edges.size())
        throw StructureError("local_adjacency_cycle: vertex " + to_string(x) +
                             " has mismatched edge and face lists");
      for (std::size_t i = 0; i < v.edges.size(); ++i) {
        cycle.push_back(edge_ref(v.edges[i]));
        cycle.push_back(face_ref(v.faces[i]));
      }
      break;
    }
    case CellKind::Edge: {
      const auto& e = w.edges[x.index];
      if (e.endpoints.size() != 2 || e.sides.size() != 2)
        throw StructureError("local_adjacency_cycle: edge " + to_string(x) +
                             " lacks two endpoints and two sides");
      cycle.push_back(vertex_ref(e.endpoints[0]));
      cycle.push_back(face_ref(e.sides[0]));
      cycle.push_back(vertex_ref(e.endpoints[1]));
      cycle.push_back(face_ref(e.sides[1]));
      break;
    }
    case CellKind::Face:
      cycle = w.faces[x.index].boundary;
      break;
  }

  const CellSet adj = space.adjacency_set(x);
  const std::size_t n = cycle.size();
  bool ok = n >= 4 && n == adj.size();
  for (std::size_t i = 0; ok && i < n; ++i) {
    if (!adj.contains(cycle[i])) ok = false;
    for (std::size_t j = i + 1; ok && j < n; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (cycle[i] == cycle[j]) ok = false;
      else if (space.adjacent(cycle[i], cycle[j]) != consecutive) ok = false;
    }
  }
  if (!ok)
    throw StructureError("local_adjacency_cycle: induced subgraph on A(" + to_string(x) +
                         ") is not a single cycle; window is not a valid tiling excerpt");
  return cycle;
}

/// Interior and exterior of a digital Jordan curve on a window. The
/// unbounded side is recognized by rim contact, so the curve must carry a
/// completeness margin (star-complete to `margin` hops, default 2).
struct ComplementSplit {
  CellSet interior;
  CellSet exterior;
  CellRef rim_witness;  // exterior cell adjacent to an incomplete cell
};

inline ComplementSplit jordan_complement(const DigitalSpace& space, const CellSet& J,
                                         int margin = 2) {
  const auto verdict = is_jordan_curve(space, J);
  if (!verdict.is_jordan)
    throw std::invalid_argument("jordan_complement: not a digital Jordan curve (" +
                                verdict.describe() + ")");
  J.for_each([&](CellRef c) {
    if (!star_complete(space.window(), c, margin))
      throw MarginError("jordan_complement: curve cell " + to_string(c) +
                        " lacks star-completeness depth " + std::to_string(margin));
  });

  detail::BitVec rest = space.complete_bits();
  rest -= J.bits();
  const auto comps = detail::component_ids(space, rest);

  auto rim_contact = [&](const std::vector<CellId>& comp) -> std::optional<CellId> {
    for (CellId id : comp)
      for (CellId n : space.adjacency_ids(id))
        if (!space.is_complete_id(n)) return id;
    return std::nullopt;
  };

  std::vector<std::optional<CellId>> contact;
  std::size_t touching = 0;
  for (const auto& comp : comps) {
    contact.push_back(rim_contact(comp));
    touching += contact.back() ? 1 : 0;
  }
  if (touching >= 2)
    throw StructureError("jordan_complement: exterior ambiguity, " + std::to_string(touching) +
                         " rim-touching components (window too small)");
  if (comps.size() != 2)
    throw StructureError("jordan_complement: complement has " + std::to_string(comps.size()) +
                         " components (window artifact or invalid curve)");
  if (touching == 0)
    throw StructureError("jordan_complement: no component touches the rim; cannot identify exterior");

  const std::size_t ext = contact[0] ? 0 : 1;
  ComplementSplit split{CellSet(space.layout()), CellSet(space.layout()),
                        space.layout().ref(*contact[ext])};
  for (CellId id : comps[ext]) split.exterior.insert_id(id);
  for (CellId id : comps[1 - ext]) split.interior.insert_id(id);
  return split;
}

/// Every curve cell must meet the interior through its adjacency set.
/// Always true for genuine Jordan curves; false signals a bug.
inline bool interior_adjacency_check(const DigitalSpace& space, const CellSet& J,
                                     const ComplementSplit& split) {
  bool ok = true;
  J.for_each([&](CellRef c) {
    if (ok && !space.adjacency_set(c).intersects(split.interior)) ok = false;
  });
  return ok;
}

}  // namespace tiletopo
