#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "tiletopo/cell.hpp"
#include "tiletopo/cell_set.hpp"
#include "tiletopo/error.hpp"

namespace tiletopo {

/// A vertex of the tiling: a point where three or more tiles meet.
/// `edges` and `faces` are stored in interleaved cyclic order around the
/// vertex: faces[i] is the face between edges[i] and edges[i+1 mod n].
/// For incomplete vertices the lists hold whatever the window knows,
/// sorted by index, and carry no cyclic meaning.
struct VertexRecord {
  std::vector<std::uint32_t> edges;
  std::vector<std::uint32_t> faces;
  bool complete = false;
};

/// An edge: a maximal boundary piece between exactly two tiles,
/// delimited by two vertices. Incomplete edges may miss a side face.
struct EdgeRecord {
  std::vector<std::uint32_t> endpoints;  // vertex indices, 2 when complete
  std::vector<std::uint32_t> sides;      // face indices, 2 when complete
  bool complete = false;
};

/// A face: the interior of a tile. `boundary` alternates vertex, edge,
/// vertex, edge, ... cyclically, starting with a vertex, and each edge's
/// endpoints are its cyclic vertex neighbours in the list.
struct FaceRecord {
  std::vector<CellRef> boundary;
  bool complete = false;
};

/// A finite combinatorial window of a locally finite plane tiling.
/// Immutable after construction; cells whose full incidence data lies
/// inside the window are flagged complete, the rest form the rim.
struct TilingWindow {
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<FaceRecord> faces;

  /// Optional 2D positions per vertex, used only for rendering.
  std::vector<std::array<double, 2>> vertex_coords;

  /// Original string ids, present only for windows read from a file.
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;
  std::vector<std::string> face_names;

  CellLayout layout() const {
    return CellLayout{static_cast<std::uint32_t>(vertices.size()),
                      static_cast<std::uint32_t>(edges.size()),
                      static_cast<std::uint32_t>(faces.size())};
  }

  std::size_t cell_count() const { return vertices.size() + edges.size() + faces.size(); }

  bool contains(CellRef c) const { return layout().contains(c); }

  bool is_complete(CellRef c) const {
    switch (c.kind) {
      case CellKind::Vertex: return vertices.at(c.index).complete;
      case CellKind::Edge: return edges.at(c.index).complete;
      case CellKind::Face: return faces.at(c.index).complete;
    }
    return false;
  }

  bool has_coords() const { return vertex_coords.size() == vertices.size() && !vertices.empty(); }

  /// Incomplete cells, in canonical order.
  std::vector<CellRef> rim() const {
    std::vector<CellRef> out;
    for (std::uint32_t i = 0; i < vertices.size(); ++i)
      if (!vertices[i].complete) out.push_back(vertex_ref(i));
    for (std::uint32_t i = 0; i < edges.size(); ++i)
      if (!edges[i].complete) out.push_back(edge_ref(i));
    for (std::uint32_t i = 0; i < faces.size(); ++i)
      if (!faces[i].complete) out.push_back(face_ref(i));
    return out;
  }

  /// Display id of a cell: the stored file id when present, the
  /// canonical "v12"/"e7"/"f3" form otherwise.
  std::string cell_name(CellRef c) const {
    const std::vector<std::string>* names = nullptr;
    switch (c.kind) {
      case CellKind::Vertex: names = &vertex_names; break;
      case CellKind::Edge: names = &edge_names; break;
      case CellKind::Face: names = &face_names; break;
    }
    if (names && c.index < names->size() && !(*names)[c.index].empty())
      return (*names)[c.index];
    return to_string(c);
  }

  /// Resolves a display id back to a cell. Stored names take precedence;
  /// canonical forms are accepted whenever no stored name shadows them.
  std::optional<CellRef> find_cell(std::string_view name) const {
    auto scan = [&](const std::vector<std::string>& names,
                    CellKind kind) -> std::optional<CellRef> {
      for (std::uint32_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return CellRef{kind, i};
      return std::nullopt;
    };
    if (auto r = scan(vertex_names, CellKind::Vertex)) return r;
    if (auto r = scan(edge_names, CellKind::Edge)) return r;
    if (auto r = scan(face_names, CellKind::Face)) return r;
    if (auto r = parse_cell_ref(name); r && contains(*r)) {
      // Canonical forms are only valid for windows without stored names
      // of that kind (a loaded file may call an edge "v3").
      const bool shadowed = (r->kind == CellKind::Vertex && !vertex_names.empty()) ||
                            (r->kind == CellKind::Edge && !edge_names.empty()) ||
                            (r->kind == CellKind::Face && !face_names.empty());
      if (!shadowed) return r;
    }
    return std::nullopt;
  }
};

/// Vertex indices appearing on a face's boundary, in cyclic order.
inline std::vector<std::uint32_t> face_vertices(const TilingWindow& w, std::uint32_t f) {
  std::vector<std::uint32_t> out;
  for (CellRef c : w.faces.at(f).boundary)
    if (c.kind == CellKind::Vertex) out.push_back(c.index);
  return out;
}

/// Edge indices appearing on a face's boundary, in cyclic order.
inline std::vector<std::uint32_t> face_edges(const TilingWindow& w, std::uint32_t f) {
  std::vector<std::uint32_t> out;
  for (CellRef c : w.faces.at(f).boundary)
    if (c.kind == CellKind::Edge) out.push_back(c.index);
  return out;
}

/// All cells listed in x's own incidence record (one hop of the
/// incidence relation). Exact for complete cells; partial on the rim.
inline std::vector<CellRef> incident_cells(const TilingWindow& w, CellRef x) {
  if (!w.contains(x)) throw std::invalid_argument("incident_cells: unknown cell " + to_string(x));
  std::vector<CellRef> out;
  switch (x.kind) {
    case CellKind::Vertex: {
      const auto& v = w.vertices[x.index];
      for (auto e : v.edges) out.push_back(edge_ref(e));
      for (auto f : v.faces) out.push_back(face_ref(f));
      break;
    }
    case CellKind::Edge: {
      const auto& e = w.edges[x.index];
      for (auto v : e.endpoints) out.push_back(vertex_ref(v));
      for (auto f : e.sides) out.push_back(face_ref(f));
      break;
    }
    case CellKind::Face:
      out = w.faces[x.index].boundary;
      break;
  }
  return out;
}

/// True iff every cell within `depth` incidence hops of x (x included)
/// is complete. Expansion stops at the first incomplete cell, so rim
/// records are never relied upon.
inline bool star_complete(const TilingWindow& w, CellRef x, int depth) {
  if (!w.contains(x)) throw std::invalid_argument("star_complete: unknown cell " + to_string(x));
  if (!w.is_complete(x)) return false;
  if (depth <= 0) return true;
  const CellLayout layout = w.layout();
  detail::BitVec seen(layout.total());
  seen.set(layout.id(x));
  std::vector<CellRef> frontier{x};
  for (int hop = 0; hop < depth; ++hop) {
    std::vector<CellRef> next;
    for (CellRef c : frontier) {
      for (CellRef n : incident_cells(w, c)) {
        const CellId id = layout.id(n);
        if (seen.test(id)) continue;
        seen.set(id);
        if (!w.is_complete(n)) return false;
        next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

/// Maximum number of faces meeting at a complete vertex. On a window of
/// one of the built-in periodic tilings this equals the tiling's true
/// supremum; for arbitrary loaded windows it is a lower bound.
inline int delta(const TilingWindow& w) {
  int best = 0;
  bool any = false;
  for (const auto& v : w.vertices) {
    if (!v.complete) continue;
    any = true;
    best = std::max(best, static_cast<int>(v.faces.size()));
  }
  if (!any) throw MarginError("delta: window too small, no complete vertex");
  return best;
}

/// One validation failure: which rule broke, where, and a description.
struct Violation {
  std::string axiom;
  std::vector<CellRef> cells;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

namespace detail {

inline bool vertex_lists_edge(const VertexRecord& v, std::uint32_t e) {
  return std::find(v.edges.begin(), v.edges.end(), e) != v.edges.end();
}
inline bool vertex_lists_face(const VertexRecord& v, std::uint32_t f) {
  return std::find(v.faces.begin(), v.faces.end(), f) != v.faces.end();
}
inline bool boundary_lists(const FaceRecord& f, CellRef c) {
  return std::find(f.boundary.begin(), f.boundary.end(), c) != f.boundary.end();
}

}  // namespace detail

/// Checks the tiling axioms on the complete cells of a window.
/// Violations are collected, never thrown.
inline ValidationReport validate_tiling(const TilingWindow& w) {
  ValidationReport report;
  auto flag = [&](std::string axiom, std::vector<CellRef> cells, std::string message) {
    report.ok = false;
    report.violations.push_back({std::move(axiom), std::move(cells), std::move(message)});
  };

  // Edges: two distinct endpoints, two distinct side faces.
  for (std::uint32_t ei = 0; ei < w.edges.size(); ++ei) {
    const auto& e = w.edges[ei];
    if (!e.complete) continue;
    if (e.endpoints.size() != 2 || e.endpoints[0] == e.endpoints[1])
      flag("edge-endpoints", {edge_ref(ei)}, "complete edge must have two distinct endpoint vertices");
    if (e.sides.size() != 2)
      flag("edge-sides", {edge_ref(ei)}, "complete edge must have exactly two side faces");
    else if (e.sides[0] == e.sides[1])
      flag("edge-sides-distinct", {edge_ref(ei)}, "edge sides distinct: the two side faces coincide");
    for (auto v : e.endpoints)
      if (v >= w.vertices.size())
        flag("edge-ref", {edge_ref(ei)}, "edge references unknown vertex");
    for (auto f : e.sides)
      if (f >= w.faces.size())
        flag("edge-ref", {edge_ref(ei)}, "edge references unknown face");
  }

  // Faces: even alternating boundary of length >= 4, matching edge endpoints.
  for (std::uint32_t fi = 0; fi < w.faces.size(); ++fi) {
    const auto& f = w.faces[fi];
    if (!f.complete) continue;
    const auto& b = f.boundary;
    const std::size_t n = b.size();
    bool shape_ok = true;
    if (n < 4 || n % 2 != 0) {
      flag("face-alternation", {face_ref(fi)},
           "complete face boundary must alternate vertex/edge with even length >= 4");
      shape_ok = false;
    }
    for (std::size_t i = 0; shape_ok && i < n; ++i) {
      const CellKind expect = (i % 2 == 0) ? CellKind::Vertex : CellKind::Edge;
      if (b[i].kind != expect) {
        flag("face-alternation", {face_ref(fi)}, "face boundary does not alternate vertex/edge");
        shape_ok = false;
      }
    }
    for (CellRef c : b)
      if (!w.contains(c)) {
        flag("face-ref", {face_ref(fi)}, "face boundary references unknown cell " + to_string(c));
        shape_ok = false;
      }
    if (!shape_ok) continue;
    // No repeated cell.
    std::vector<CellRef> sorted(b.begin(), b.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      flag("face-simple", {face_ref(fi)}, "face boundary repeats a cell");
    // Each boundary edge joins its two cyclic vertex neighbours.
    for (std::size_t i = 1; i < n; i += 2) {
      const std::uint32_t e = b[i].index;
      const std::uint32_t va = b[i - 1].index;
      const std::uint32_t vb = b[(i + 1) % n].index;
      const auto& er = w.edges[e];
      std::vector<std::uint32_t> got(er.endpoints);
      std::sort(got.begin(), got.end());
      std::vector<std::uint32_t> want{std::min(va, vb), std::max(va, vb)};
      if (er.complete && got != want)
        flag("face-edge-endpoints", {face_ref(fi), edge_ref(e)},
             "boundary edge endpoints are not the adjacent boundary vertices");
    }
  }

  // Vertices: at least three tiles, equal edge/face counts, coherent cyclic order.
  for (std::uint32_t vi = 0; vi < w.vertices.size(); ++vi) {
    const auto& v = w.vertices[vi];
    if (!v.complete) continue;
    const std::size_t k = v.edges.size();
    if (k < 3 || v.faces.size() != k) {
      flag("vertex-degree", {vertex_ref(vi)},
           "complete vertex must have |E_v| = |F_v| >= 3");
      continue;
    }
    std::vector<std::uint32_t> es(v.edges), fs(v.faces);
    std::sort(es.begin(), es.end());
    std::sort(fs.begin(), fs.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end() ||
        std::adjacent_find(fs.begin(), fs.end()) != fs.end()) {
      flag("vertex-simple", {vertex_ref(vi)}, "vertex lists a cell twice");
      continue;
    }
    bool refs_ok = true;
    for (auto e : v.edges)
      if (e >= w.edges.size()) refs_ok = false;
    for (auto f : v.faces)
      if (f >= w.faces.size()) refs_ok = false;
    if (!refs_ok) {
      flag("vertex-ref", {vertex_ref(vi)}, "vertex references unknown cell");
      continue;
    }
    // Consecutive edges must share exactly the face stored between them.
    for (std::size_t i = 0; i < k; ++i) {
      const auto& ea = w.edges[v.edges[i]];
      const auto& eb = w.edges[v.edges[(i + 1) % k]];
      std::vector<std::uint32_t> shared;
      for (auto f : ea.sides)
        if (std::find(eb.sides.begin(), eb.sides.end(), f) != eb.sides.end())
          shared.push_back(f);
      std::sort(shared.begin(), shared.end());
      shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
      if (!(ea.complete && eb.complete)) continue;
      if (shared.size() != 1 || shared[0] != v.faces[i])
        flag("vertex-cyclic-order", {vertex_ref(vi), edge_ref(v.edges[i]), edge_ref(v.edges[(i + 1) % k])},
             "consecutive edges at a vertex must share exactly the face between them");
    }
  }

  // Incidence symmetry between complete cells.
  for (std::uint32_t vi = 0; vi < w.vertices.size(); ++vi) {
    const auto& v = w.vertices[vi];
    if (!v.complete) continue;
    for (auto e : v.edges) {
      if (e >= w.edges.size()) continue;
      const auto& er = w.edges[e];
      if (er.complete &&
          std::find(er.endpoints.begin(), er.endpoints.end(), vi) == er.endpoints.end())
        flag("incidence-symmetry", {vertex_ref(vi), edge_ref(e)}, "vertex lists edge but edge does not list vertex");
    }
    for (auto f : v.faces) {
      if (f >= w.faces.size()) continue;
      if (w.faces[f].complete && !detail::boundary_lists(w.faces[f], vertex_ref(vi)))
        flag("incidence-symmetry", {vertex_ref(vi), face_ref(f)}, "vertex lists face but face boundary omits vertex");
    }
  }
  for (std::uint32_t ei = 0; ei < w.edges.size(); ++ei) {
    const auto& e = w.edges[ei];
    if (!e.complete) continue;
    for (auto v : e.endpoints) {
      if (v >= w.vertices.size()) continue;
      if (w.vertices[v].complete && !detail::vertex_lists_edge(w.vertices[v], ei))
        flag("incidence-symmetry", {edge_ref(ei), vertex_ref(v)}, "edge lists endpoint but vertex omits edge");
    }
    for (auto f : e.sides) {
      if (f >= w.faces.size()) continue;
      if (w.faces[f].complete && !detail::boundary_lists(w.faces[f], edge_ref(ei)))
        flag("incidence-symmetry", {edge_ref(ei), face_ref(f)}, "edge lists side face but face boundary omits edge");
    }
  }
  for (std::uint32_t fi = 0; fi < w.faces.size(); ++fi) {
    const auto& f = w.faces[fi];
    if (!f.complete) continue;
    for (CellRef c : f.boundary) {
      if (!w.contains(c)) continue;
      if (c.kind == CellKind::Vertex && w.vertices[c.index].complete &&
          !detail::vertex_lists_face(w.vertices[c.index], fi))
        flag("incidence-symmetry", {face_ref(fi), c}, "face lists vertex but vertex omits face");
      if (c.kind == CellKind::Edge && w.edges[c.index].complete) {
        const auto& er = w.edges[c.index];
        if (std::find(er.sides.begin(), er.sides.end(), fi) == er.sides.end())
          flag("incidence-symmetry", {face_ref(fi), c}, "face lists edge but edge omits face");
      }
    }
  }

  // Two complete faces meet in vertices and edges only, each listed on both
  // boundaries; window-local reading of the finite-intersection axiom
  // (checkable for complete cell pairs only).
  // Shared cells are exactly the boundary cells the two faces have in common,
  // which the symmetry checks above already pin down; what remains is that
  // the complete-cell structure is connected.
  {
    const CellLayout layout = w.layout();
    std::vector<CellRef> complete_cells;
    for (std::uint32_t i = 0; i < w.vertices.size(); ++i)
      if (w.vertices[i].complete) complete_cells.push_back(vertex_ref(i));
    for (std::uint32_t i = 0; i < w.edges.size(); ++i)
      if (w.edges[i].complete) complete_cells.push_back(edge_ref(i));
    for (std::uint32_t i = 0; i < w.faces.size(); ++i)
      if (w.faces[i].complete) complete_cells.push_back(face_ref(i));
    if (complete_cells.size() > 1) {
      detail::BitVec seen(layout.total());
      std::deque<CellRef> queue{complete_cells.front()};
      seen.set(layout.id(complete_cells.front()));
      std::size_t reached = 1;
      while (!queue.empty()) {
        const CellRef c = queue.front();
        queue.pop_front();
        for (CellRef n : incident_cells(w, c)) {
          if (!w.contains(n) || !w.is_complete(n)) continue;
          const CellId id = layout.id(n);
          if (seen.test(id)) continue;
          seen.set(id);
          ++reached;
          queue.push_back(n);
        }
      }
      if (reached != complete_cells.size())
        flag("connectivity", {}, "complete cells do not form a connected incidence structure");
    }
  }

  return report;
}

}  // namespace tiletopo
