#pragma once

// Shared fixture builders for the test suites: canonical curves on the
// built-in windows, constructed from window records (never from magic
// index constants).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tiletopo/tiletopo.hpp"

namespace tthelpers {

using namespace tiletopo;

inline std::uint32_t square_face(int cols, int x, int y) {
  return static_cast<std::uint32_t>(y * cols + x);
}

inline std::uint32_t square_vertex(const TilingWindow& w, int x, int y) {
  for (std::uint32_t i = 0; i < w.vertices.size(); ++i)
    if (w.vertex_coords[i][0] == x && w.vertex_coords[i][1] == y) return i;
  throw std::runtime_error("square_vertex: no vertex at lattice point");
}

inline CellSet to_set(const TilingWindow& w, const std::vector<CellRef>& cells) {
  CellSet s(w.layout());
  for (CellRef c : cells) s.insert(c);
  return s;
}

/// Boundary of one tile as an ordered 2n-cycle (vertices and edges).
inline std::vector<CellRef> tile_boundary_curve(const TilingWindow& w, std::uint32_t face) {
  return w.faces.at(face).boundary;
}

inline std::optional<std::uint32_t> shared_edge(const TilingWindow& w, std::uint32_t f1,
                                                std::uint32_t f2) {
  auto e1 = face_edges(w, f1), e2 = face_edges(w, f2);
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  std::vector<std::uint32_t> shared;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
  if (shared.size() != 1) return std::nullopt;
  return shared.front();
}

inline std::vector<std::uint32_t> shared_vertices(const TilingWindow& w, std::uint32_t f1,
                                                  std::uint32_t f2) {
  auto v1 = face_vertices(w, f1), v2 = face_vertices(w, f2);
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  std::vector<std::uint32_t> shared;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(shared));
  return shared;
}

/// Orders a face set into a cycle alternating face, shared edge, face, ...
/// Each face must have exactly two edge-neighbours within the set.
inline std::vector<CellRef> edge_linked_face_cycle(const TilingWindow& w,
                                                   std::vector<std::uint32_t> faces) {
  std::sort(faces.begin(), faces.end());
  auto neighbours = [&](std::uint32_t f) {
    std::vector<std::uint32_t> out;
    for (auto g : faces)
      if (g != f && shared_edge(w, f, g)) out.push_back(g);
    return out;
  };
  std::vector<CellRef> cycle;
  const std::uint32_t start = faces.front();
  auto nb = neighbours(start);
  if (nb.size() != 2) throw std::runtime_error("edge_linked_face_cycle: not a face ring");
  std::uint32_t prev = start, cur = std::min(nb[0], nb[1]);
  cycle.push_back(face_ref(start));
  cycle.push_back(edge_ref(*shared_edge(w, start, cur)));
  while (cur != start) {
    cycle.push_back(face_ref(cur));
    auto cn = neighbours(cur);
    if (cn.size() != 2) throw std::runtime_error("edge_linked_face_cycle: not a face ring");
    const std::uint32_t next = (cn[0] == prev) ? cn[1] : cn[0];
    cycle.push_back(edge_ref(*shared_edge(w, cur, next)));
    prev = cur;
    cur = next;
  }
  return cycle;
}

/// Orders a face set into a cycle alternating face, shared vertex, face.
/// Consecutive faces must share exactly one vertex.
inline std::vector<CellRef> vertex_linked_face_cycle(const TilingWindow& w,
                                                     std::vector<std::uint32_t> faces) {
  std::sort(faces.begin(), faces.end());
  auto neighbours = [&](std::uint32_t f) {
    std::vector<std::uint32_t> out;
    for (auto g : faces)
      if (g != f && !shared_vertices(w, f, g).empty()) out.push_back(g);
    return out;
  };
  std::vector<CellRef> cycle;
  const std::uint32_t start = faces.front();
  auto nb = neighbours(start);
  if (nb.size() != 2) throw std::runtime_error("vertex_linked_face_cycle: not a face ring");
  std::uint32_t prev = start, cur = std::min(nb[0], nb[1]);
  auto link = [&](std::uint32_t a, std::uint32_t b) {
    const auto sv = shared_vertices(w, a, b);
    if (sv.size() != 1)
      throw std::runtime_error("vertex_linked_face_cycle: faces share more than a vertex");
    return sv.front();
  };
  cycle.push_back(face_ref(start));
  cycle.push_back(vertex_ref(link(start, cur)));
  while (cur != start) {
    cycle.push_back(face_ref(cur));
    auto cn = neighbours(cur);
    if (cn.size() != 2) throw std::runtime_error("vertex_linked_face_cycle: not a face ring");
    const std::uint32_t next = (cn[0] == prev) ? cn[1] : cn[0];
    cycle.push_back(vertex_ref(link(cur, next)));
    prev = cur;
    cur = next;
  }
  return cycle;
}

/// The 2k-cycle of faces and edges around a vertex (interleaved from the
/// stored cyclic order): the minimal open curve whose interior is {v}.
inline std::vector<CellRef> vertex_star_curve(const TilingWindow& w, std::uint32_t vi) {
  const auto& v = w.vertices.at(vi);
  if (!v.complete) throw std::runtime_error("vertex_star_curve: incomplete vertex");
  std::vector<CellRef> cycle;
  const std::size_t k = v.edges.size();
  for (std::size_t i = 0; i < k; ++i) {
    cycle.push_back(face_ref(v.faces[i]));
    cycle.push_back(edge_ref(v.edges[(i + 1) % k]));
  }
  return cycle;
}

/// Least-index complete vertex whose star is complete to `depth` hops.
inline std::uint32_t central_vertex(const TilingWindow& w, int depth) {
  for (std::uint32_t i = 0; i < w.vertices.size(); ++i)
    if (star_complete(w, vertex_ref(i), depth)) return i;
  throw std::runtime_error("central_vertex: no vertex with the requested margin");
}

/// Least-index face whose star is complete to `depth` hops.
inline std::uint32_t central_face(const TilingWindow& w, int depth) {
  for (std::uint32_t i = 0; i < w.faces.size(); ++i)
    if (star_complete(w, face_ref(i), depth)) return i;
  throw std::runtime_error("central_face: no face with the requested margin");
}

/// Faces sharing an edge with f, one per boundary edge with two sides.
inline std::vector<std::uint32_t> edge_neighbor_faces(const TilingWindow& w, std::uint32_t f) {
  std::vector<std::uint32_t> out;
  for (auto e : face_edges(w, f)) {
    const auto& er = w.edges[e];
    if (er.sides.size() != 2) continue;
    out.push_back(er.sides[0] == f ? er.sides[1] : er.sides[0]);
  }
  return out;
}

/// Faces sharing at least one vertex with f (f excluded).
inline std::vector<std::uint32_t> vertex_neighbor_faces(const TilingWindow& w, std::uint32_t f) {
  std::vector<std::uint32_t> out;
  for (auto v : face_vertices(w, f))
    for (auto g : w.vertices[v].faces)
      if (g != f) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// 16-cell square ring: the 8 faces around a center face interleaved with
/// the 8 edges consecutive ring faces share.
inline std::vector<CellRef> square_ring16(const TilingWindow& w, std::uint32_t center) {
  return edge_linked_face_cycle(w, vertex_neighbor_faces(w, center));
}

/// 12-cell hex ring: the 6 edge-neighbours of a hex face and their shared
/// edges.
inline std::vector<CellRef> hex_ring12(const TilingWindow& w, std::uint32_t center) {
  return edge_linked_face_cycle(w, edge_neighbor_faces(w, center));
}

/// 24-cell triangular ring: the 12 faces vertex-adjacent to one triangle,
/// interleaved with their shared edges.
inline std::vector<CellRef> tri_ring24(const TilingWindow& w, std::uint32_t center) {
  return edge_linked_face_cycle(w, vertex_neighbor_faces(w, center));
}

/// 12-cell vertex-Jordan ring on the hexagonal tiling: the 6 neighbours
/// of a center face linked through the outer endpoint of each shared
/// edge (the endpoint that is not a vertex of the center).
inline std::vector<CellRef> hex_vertex_ring12(const TilingWindow& w, std::uint32_t center) {
  const auto ring = edge_neighbor_faces(w, center);
  if (ring.size() != 6) throw std::runtime_error("hex_vertex_ring12: not a hex interior face");
  auto center_vs = face_vertices(w, center);
  std::sort(center_vs.begin(), center_vs.end());
  std::vector<CellRef> cycle;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    cycle.push_back(face_ref(ring[i]));
    const auto e = shared_edge(w, ring[i], ring[(i + 1) % ring.size()]);
    if (!e) throw std::runtime_error("hex_vertex_ring12: ring faces do not share an edge");
    std::uint32_t outer = UINT32_MAX;
    for (auto v : w.edges[*e].endpoints)
      if (!std::binary_search(center_vs.begin(), center_vs.end(), v)) outer = v;
    if (outer == UINT32_MAX)
      throw std::runtime_error("hex_vertex_ring12: no outer endpoint found");
    cycle.push_back(vertex_ref(outer));
  }
  return cycle;
}

/// 8-cell diagonal diamond on the square tiling: N, E, S, W neighbours of
/// a center face linked through its four corner vertices.
inline std::vector<CellRef> square_diamond4(const TilingWindow& w, std::uint32_t center) {
  return vertex_linked_face_cycle(w, edge_neighbor_faces(w, center));
}

/// 16-cell diamond of 8 faces at Chebyshev-ish offsets (+-2,0),(0,+-2),
/// (+-1,+-1) from a center face, linked through single corner vertices.
inline std::vector<CellRef> square_diamond8(const TilingWindow& w, int cols, int cx, int cy) {
  static constexpr int kOffsets[8][2] = {{2, 0}, {1, 1},  {0, 2},  {-1, 1},
                                         {-2, 0}, {-1, -1}, {0, -2}, {1, -1}};
  std::vector<std::uint32_t> faces;
  for (const auto& d : kOffsets)
    faces.push_back(square_face(cols, cx + d[0], cy + d[1]));
  return vertex_linked_face_cycle(w, faces);
}

}  // namespace tthelpers
