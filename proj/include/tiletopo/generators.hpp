#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tiletopo/tiling.hpp"

namespace tiletopo {
namespace detail {

/// Assembles a TilingWindow from faces given as cyclic corner walks over
/// an integer lattice. Edges are interned from consecutive corner pairs;
/// vertex cyclic orders and completeness flags are derived by walking the
/// edge-face chain around each vertex, so no geometry enters the result.
class WindowBuilder {
 public:
  using Key = std::pair<long long, long long>;

  std::uint32_t intern_vertex(Key key, double x, double y) {
    auto [it, inserted] = vertex_ids_.try_emplace(key, static_cast<std::uint32_t>(coords_.size()));
    if (inserted) coords_.push_back({x, y});
    return it->second;
  }

  void add_face(const std::vector<std::uint32_t>& corners) {
    face_corners_.push_back(corners);
  }

  TilingWindow finish() {
    TilingWindow w;
    w.vertices.resize(coords_.size());
    w.vertex_coords = coords_;
    w.faces.resize(face_corners_.size());

    // Intern edges from consecutive corners; collect side faces.
    auto& edge_ids = edge_ids_;
    for (std::uint32_t fi = 0; fi < face_corners_.size(); ++fi) {
      const auto& corners = face_corners_[fi];
      const std::size_t n = corners.size();
      auto& face = w.faces[fi];
      face.complete = true;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t a = corners[i];
        const std::uint32_t b = corners[(i + 1) % n];
        const auto key = std::minmax(a, b);
        auto [it, inserted] =
            edge_ids.try_emplace(key, static_cast<std::uint32_t>(w.edges.size()));
        if (inserted) {
          EdgeRecord e;
          e.endpoints = {key.first, key.second};
          w.edges.push_back(std::move(e));
        }
        w.edges[it->second].sides.push_back(fi);
        face.boundary.push_back(vertex_ref(a));
        face.boundary.push_back(edge_ref(it->second));
      }
    }
    for (auto& e : w.edges) {
      std::sort(e.sides.begin(), e.sides.end());
      e.complete = e.sides.size() == 2;
    }

    // Incident edges and faces per vertex, in index order.
    std::vector<std::vector<std::uint32_t>> v_edges(coords_.size());
    std::vector<std::vector<std::uint32_t>> v_faces(coords_.size());
    for (std::uint32_t ei = 0; ei < w.edges.size(); ++ei)
      for (auto v : w.edges[ei].endpoints) v_edges[v].push_back(ei);
    for (std::uint32_t fi = 0; fi < face_corners_.size(); ++fi)
      for (auto v : face_corners_[fi]) v_faces[v].push_back(fi);

    for (std::uint32_t vi = 0; vi < coords_.size(); ++vi)
      build_vertex(w, vi, v_edges[vi], v_faces[vi]);

    return w;
  }

 private:
  // Walks the edge-face chain around a vertex. The chain closes into one
  // cycle exactly when the full star is inside the window.
  void build_vertex(TilingWindow& w, std::uint32_t vi,
                    std::vector<std::uint32_t> edges, std::vector<std::uint32_t> faces) {
    auto& v = w.vertices[vi];
    std::sort(edges.begin(), edges.end());
    std::sort(faces.begin(), faces.end());

    // For each incident face, its two edges at this vertex.
    std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> face_pair;
    bool regular = true;
    for (auto fi : faces) {
      const auto& corners = face_corners_[fi];
      const std::size_t n = corners.size();
      std::size_t pos = n;
      for (std::size_t i = 0; i < n; ++i)
        if (corners[i] == vi) { pos = i; break; }
      const std::uint32_t prev = corners[(pos + n - 1) % n];
      const std::uint32_t next = corners[(pos + 1) % n];
      const std::uint32_t ea = edge_index(w, vi, prev);
      const std::uint32_t eb = edge_index(w, vi, next);
      face_pair[fi] = {ea, eb};
    }
    std::map<std::uint32_t, std::vector<std::uint32_t>> edge_links;  // edge -> faces at v
    for (auto& [fi, pair] : face_pair) {
      edge_links[pair.first].push_back(fi);
      edge_links[pair.second].push_back(fi);
    }
    for (auto e : edges)
      if (edge_links[e].size() != 2) regular = false;

    if (regular && edges.size() >= 3 && faces.size() == edges.size()) {
      // Closed chain: walk it, storing the interleaved cyclic order.
      std::vector<std::uint32_t> cyc_edges, cyc_faces;
      const std::uint32_t start = edges.front();
      std::uint32_t cur = start;
      std::uint32_t face = std::min(edge_links[start][0], edge_links[start][1]);
      bool closed = true;
      std::vector<bool> face_seen(face_corners_.size(), false);
      for (std::size_t step = 0; step < faces.size(); ++step) {
        cyc_edges.push_back(cur);
        cyc_faces.push_back(face);
        if (face_seen[face]) { closed = false; break; }
        face_seen[face] = true;
        const auto pair = face_pair[face];
        cur = (pair.first == cur) ? pair.second : pair.first;
        if (step + 1 < faces.size()) {
          const auto& links = edge_links[cur];
          face = (links[0] == face) ? links[1] : links[0];
        }
      }
      if (closed && cur == start && cyc_edges.size() == edges.size()) {
        v.edges = std::move(cyc_edges);
        v.faces = std::move(cyc_faces);
        v.complete = true;
        return;
      }
    }
    v.edges = std::move(edges);
    v.faces = std::move(faces);
    v.complete = false;
  }

  std::uint32_t edge_index(const TilingWindow&, std::uint32_t a, std::uint32_t b) const {
    // finish() interns every consecutive corner pair before vertices are built.
    const auto it = edge_ids_.find(std::minmax(a, b));
    if (it == edge_ids_.end()) throw StructureError("window builder: edge lookup failed");
    return it->second;
  }

  std::map<Key, std::uint32_t> vertex_ids_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_ids_;
  std::vector<std::array<double, 2>> coords_;
  std::vector<std::vector<std::uint32_t>> face_corners_;
};

}  // namespace detail

/// cols x rows window of the unit-square tiling. Interior cells come out
/// complete, the outer frame incomplete.
inline TilingWindow build_square_window(int cols, int rows) {
  if (cols < 2 || rows < 2)
    throw std::invalid_argument("build_square_window: need cols >= 2 and rows >= 2");
  detail::WindowBuilder b;
  auto vid = [&](int x, int y) {
    return b.intern_vertex({x, y}, static_cast<double>(x), static_cast<double>(y));
  };
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x)
      b.add_face({vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1)});
  return b.finish();
}

/// Hexagonal disk window: all hexagons at hex distance <= radius from a
/// center face, on the regular hexagon tiling.
inline TilingWindow build_hexagonal_window(int radius) {
  if (radius < 1) throw std::invalid_argument("build_hexagonal_window: need radius >= 1");
  detail::WindowBuilder b;
  const double sqrt3_2 = std::sqrt(3.0) / 2.0;
  // Corner lattice: positions are exact integers (x doubled, y in
  // half-sqrt(3) units), so shared corners coincide without rounding.
  auto vid = [&](long long x, long long y) {
    return b.intern_vertex({x, y}, 0.5 * static_cast<double>(x), sqrt3_2 * static_cast<double>(y));
  };
  static constexpr int kCorner[6][2] = {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}};
  for (int q = -radius; q <= radius; ++q) {
    for (int r = std::max(-radius, -q - radius); r <= std::min(radius, -q + radius); ++r) {
      const long long cx = 3LL * q;
      const long long cy = static_cast<long long>(q) + 2LL * r;
      std::vector<std::uint32_t> corners;
      corners.reserve(6);
      for (const auto& d : kCorner) corners.push_back(vid(cx + d[0], cy + d[1]));
      b.add_face(corners);
    }
  }
  return b.finish();
}

/// Rhombic window of the unit-triangle tiling: 2*size*size triangles over
/// a size x size rhombus of lattice cells.
inline TilingWindow build_triangular_window(int size) {
  if (size < 2) throw std::invalid_argument("build_triangular_window: need size >= 2");
  detail::WindowBuilder b;
  const double sqrt3_2 = std::sqrt(3.0) / 2.0;
  auto vid = [&](int i, int j) {
    return b.intern_vertex({i, j}, i + 0.5 * j, sqrt3_2 * j);
  };
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      b.add_face({vid(i, j), vid(i + 1, j), vid(i, j + 1)});
      b.add_face({vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  return b.finish();
}

}  // namespace tiletopo
