#pragma once

#include <algorithm>
#include <deque>
#include <span>
#include <vector>

#include "tiletopo/cell_set.hpp"
#include "tiletopo/tiling.hpp"

namespace tiletopo {

/// The digital version of a tiling window: the Alexandrov space on its
/// cells. Smallest neighbourhoods, closures and adjacency sets follow the
/// kind tables
///
///   N(x):  vertex -> {x} u E_x u F_x   cl(x):  vertex -> {x}
///          edge   -> {x} u F_x                 edge   -> {x} u V_x
///          face   -> {x}                       face   -> {x} u V_x u E_x
///
///   A(x) = (N(x) u cl(x)) \ {x}:
///          vertex -> E_x u F_x, edge -> V_x u F_x, face -> V_x u E_x.
///
/// Adjacency is cached at construction; `adjacency_set_from_definition`
/// recomputes it from N and cl directly and is kept as a cross-check.
/// Immutable after construction, safe to share across threads.
class DigitalSpace {
 public:
  explicit DigitalSpace(TilingWindow&&) = delete;  // the space only views the window

  explicit DigitalSpace(const TilingWindow& window)
      : window_(&window), layout_(window.layout()) {
    const std::size_t total = layout_.total();
    complete_ = detail::BitVec(total);
    adj_ids_.resize(total);
    adj_bits_.assign(total, detail::BitVec(total));
    for (CellId id = 0; id < total; ++id) {
      const CellRef c = layout_.ref(id);
      if (window.is_complete(c)) complete_.set(id);
      auto neighbours = incident_cells(window, c);
      auto& ids = adj_ids_[id];
      ids.reserve(neighbours.size());
      for (CellRef n : neighbours) {
        if (!window.contains(n)) continue;  // permissive rim records
        ids.push_back(layout_.id(n));
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      for (CellId n : ids) adj_bits_[id].set(n);
    }
  }

  const TilingWindow& window() const { return *window_; }
  const CellLayout& layout() const { return layout_; }
  std::size_t cell_count() const { return layout_.total(); }

  bool is_complete(CellRef c) const { return layout_.contains(c) && complete_.test(layout_.id(c)); }
  bool is_complete_id(CellId id) const { return complete_.test(id); }
  const detail::BitVec& complete_bits() const { return complete_; }

  /// Cached adjacency of one cell as sorted dense ids. Exact for complete
  /// cells; partial for rim cells.
  std::span<const CellId> adjacency_ids(CellId id) const { return adj_ids_[id]; }
  const detail::BitVec& adjacency_bits(CellId id) const { return adj_bits_[id]; }

  bool adjacent(CellRef a, CellRef b) const {
    require_known(a);
    require_known(b);
    return adj_bits_[layout_.id(a)].test(layout_.id(b));
  }

  /// Smallest open neighbourhood N(x). Requires a complete cell: on the
  /// rim the star is only partially known.
  CellSet smallest_neighborhood(CellRef x) const {
    require_complete(x, "smallest_neighborhood");
    CellSet out(layout_);
    out.insert(x);
    switch (x.kind) {
      case CellKind::Vertex:
        for (CellId n : adj_ids_[layout_.id(x)]) out.insert_id(n);
        break;
      case CellKind::Edge:
        for (auto f : window_->edges[x.index].sides) out.insert(face_ref(f));
        break;
      case CellKind::Face:
        break;
    }
    return out;
  }

  /// Closure of the singleton {x}.
  CellSet closure_of(CellRef x) const {
    require_complete(x, "closure_of");
    CellSet out(layout_);
    out.insert(x);
    switch (x.kind) {
      case CellKind::Vertex:
        break;
      case CellKind::Edge:
        for (auto v : window_->edges[x.index].endpoints) out.insert(vertex_ref(v));
        break;
      case CellKind::Face:
        for (CellId n : adj_ids_[layout_.id(x)]) out.insert_id(n);
        break;
    }
    return out;
  }

  /// Adjacency set A(x): the neighbours of x in the connectedness graph.
  CellSet adjacency_set(CellRef x) const {
    require_complete(x, "adjacency_set");
    CellSet out(layout_);
    for (CellId n : adj_ids_[layout_.id(x)]) out.insert_id(n);
    return out;
  }

  /// A(x) recomputed as (N(x) u cl(x)) \ {x} from the window records,
  /// bypassing the cache. Debug cross-check of the cached table.
  CellSet adjacency_set_from_definition(CellRef x) const {
    require_complete(x, "adjacency_set_from_definition");
    CellSet out = smallest_neighborhood_from_records(x) | closure_from_records(x);
    out.erase(x);
    return out;
  }

  /// Deliberately corrupts one cached adjacency entry. Exists so the
  /// selftest's fault injection can demonstrate that the definitional
  /// cross-check really fires; never called on a healthy run.
  bool debug_corrupt_adjacency_cache() {
    for (CellId id = 0; id < layout_.total(); ++id) {
      if (!complete_.test(id) || adj_ids_[id].empty()) continue;
      const CellId victim = adj_ids_[id].back();
      adj_ids_[id].pop_back();
      adj_bits_[id].reset(victim);
      return true;
    }
    return false;
  }

 private:
  CellSet smallest_neighborhood_from_records(CellRef x) const {
    CellSet out(layout_);
    out.insert(x);
    if (x.kind == CellKind::Vertex) {
      for (auto e : window_->vertices[x.index].edges) out.insert(edge_ref(e));
      for (auto f : window_->vertices[x.index].faces) out.insert(face_ref(f));
    } else if (x.kind == CellKind::Edge) {
      for (auto f : window_->edges[x.index].sides) out.insert(face_ref(f));
    }
    return out;
  }

  CellSet closure_from_records(CellRef x) const {
    CellSet out(layout_);
    out.insert(x);
    if (x.kind == CellKind::Edge) {
      for (auto v : window_->edges[x.index].endpoints) out.insert(vertex_ref(v));
    } else if (x.kind == CellKind::Face) {
      for (CellRef c : window_->faces[x.index].boundary) out.insert(c);
    }
    return out;
  }

  void require_known(CellRef x) const {
    if (!layout_.contains(x))
      throw std::invalid_argument("unknown cell " + to_string(x));
  }
  void require_complete(CellRef x, const char* op) const {
    require_known(x);
    if (!complete_.test(layout_.id(x)))
      throw MarginError(std::string(op) + ": incomplete star at cell " + to_string(x));
  }

  const TilingWindow* window_;
  CellLayout layout_;
  detail::BitVec complete_;
  std::vector<std::vector<CellId>> adj_ids_;
  std::vector<detail::BitVec> adj_bits_;
};

/// Connectedness graph over the complete cells of a space.
struct ConnGraph {
  std::vector<CellRef> nodes;                          // canonical order
  std::vector<std::pair<CellRef, CellRef>> edges;      // a < b, lexicographic

  std::size_t degree(CellRef c) const {
    std::size_t d = 0;
    for (const auto& [a, b] : edges) d += (a == c || b == c) ? 1 : 0;
    return d;
  }
};

inline ConnGraph connectedness_graph(const DigitalSpace& space) {
  ConnGraph g;
  const auto& layout = space.layout();
  for (CellId id = 0; id < layout.total(); ++id) {
    if (!space.is_complete_id(id)) continue;
    const CellRef c = layout.ref(id);
    g.nodes.push_back(c);
    for (CellId n : space.adjacency_ids(id)) {
      if (n <= id || !space.is_complete_id(n)) continue;
      g.edges.emplace_back(c, layout.ref(n));
    }
  }
  return g;
}

/// True iff consecutive members of the sequence are adjacent.
inline bool is_digital_path(const DigitalSpace& space, std::span<const CellRef> seq) {
  if (seq.empty()) throw std::invalid_argument("is_digital_path: empty sequence");
  for (CellRef c : seq) {
    if (!space.layout().contains(c))
      throw std::invalid_argument("is_digital_path: unknown cell " + to_string(c));
    if (!space.is_complete(c))
      throw MarginError("is_digital_path: incomplete cell " + to_string(c));
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!space.adjacent(seq[i], seq[i + 1])) return false;
  return true;
}

/// True iff the sequence realizes an induced simple path in the
/// connectedness graph: a digital arc.
inline bool is_digital_arc(const DigitalSpace& space, std::span<const CellRef> seq) {
  if (!is_digital_path(space, seq)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return false;
      if (j > i + 1 && space.adjacent(seq[i], seq[j])) return false;
    }
  return true;
}

namespace detail {

/// Connected components of an id set under the space adjacency,
/// ordered by least member. No completeness guard; callers check.
inline std::vector<std::vector<CellId>> component_ids(const DigitalSpace& space,
                                                      const BitVec& members) {
  std::vector<std::vector<CellId>> out;
  BitVec seen(members.capacity());
  members.for_each_set([&](std::size_t start) {
    if (seen.test(start)) return;
    std::vector<CellId> comp;
    std::deque<CellId> queue{static_cast<CellId>(start)};
    seen.set(start);
    while (!queue.empty()) {
      const CellId cur = queue.front();
      queue.pop_front();
      comp.push_back(cur);
      for (CellId n : space.adjacency_ids(cur)) {
        if (!members.test(n) || seen.test(n)) continue;
        seen.set(n);
        queue.push_back(n);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

}  // namespace detail

/// Partition of s into maximal adjacency-connected subsets, ordered by
/// least member. Members must be complete.
inline std::vector<CellSet> components(const DigitalSpace& space, const CellSet& s) {
  s.for_each([&](CellRef c) {
    if (!space.is_complete(c))
      throw MarginError("components: incomplete member " + to_string(c));
  });
  std::vector<CellSet> out;
  for (const auto& comp : detail::component_ids(space, s.bits())) {
    CellSet cs(space.layout());
    for (CellId id : comp) cs.insert_id(id);
    out.push_back(std::move(cs));
  }
  return out;
}

namespace detail {

/// Union of cl(x) over members. Exact for complete members; no margin
/// guard (used for window-local exterior checks).
inline CellSet closure_union(const DigitalSpace& space, const CellSet& s) {
  CellSet out(space.layout());
  s.for_each([&](CellRef c) { out |= space.closure_of(c); });
  return out;
}

/// Members x of s with N(x) contained in s. Exact for complete members.
inline CellSet interior_members(const DigitalSpace& space, const CellSet& s) {
  CellSet out(space.layout());
  s.for_each([&](CellRef c) {
    if (space.smallest_neighborhood(c).subset_of(s)) out.insert(c);
  });
  return out;
}

inline void require_margin(const DigitalSpace& space, const CellSet& s, int depth,
                           const char* op) {
  s.for_each([&](CellRef c) {
    if (!space.layout().contains(c))
      throw std::invalid_argument(std::string(op) + ": unknown cell " + to_string(c));
    if (!star_complete(space.window(), c, depth))
      throw MarginError(std::string(op) + ": insufficient margin at cell " + to_string(c));
  });
}

}  // namespace detail

/// Topological closure of a cell set. Members need a depth-1 completeness
/// margin so the result cannot depend on cells beyond the window.
inline CellSet closure_set(const DigitalSpace& space, const CellSet& s) {
  detail::require_margin(space, s, 1, "closure_set");
  return detail::closure_union(space, s);
}

/// Topological interior of a cell set: members whose smallest
/// neighbourhood stays inside the set.
inline CellSet interior_set(const DigitalSpace& space, const CellSet& s) {
  detail::require_margin(space, s, 1, "interior_set");
  return detail::interior_members(space, s);
}

/// Boundary: closure minus interior.
inline CellSet boundary_set(const DigitalSpace& space, const CellSet& s) {
  detail::require_margin(space, s, 1, "boundary_set");
  return detail::closure_union(space, s) - detail::interior_members(space, s);
}

}  // namespace tiletopo
