#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tiletopo {

/// The three kinds of points of the digital version of a tiling.
/// The numeric order (Vertex < Edge < Face) is the canonical cell order
/// used everywhere a deterministic ordering is required.
enum class CellKind : std::uint8_t { Vertex = 0, Edge = 1, Face = 2 };

inline constexpr char kind_letter(CellKind k) {
  switch (k) {
    case CellKind::Vertex: return 'v';
    case CellKind::Edge: return 'e';
    case CellKind::Face: return 'f';
  }
  return '?';
}

/// Reference to one cell of a tiling window: a kind plus a dense,
/// per-kind index. Ordered by (kind, index).
struct CellRef {
  CellKind kind = CellKind::Vertex;
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const CellRef&, const CellRef&) = default;
};

inline constexpr CellRef vertex_ref(std::uint32_t i) { return {CellKind::Vertex, i}; }
inline constexpr CellRef edge_ref(std::uint32_t i) { return {CellKind::Edge, i}; }
inline constexpr CellRef face_ref(std::uint32_t i) { return {CellKind::Face, i}; }

/// Canonical textual form: "v12", "e7", "f3".
inline std::string to_string(CellRef c) {
  return kind_letter(c.kind) + std::to_string(c.index);
}

/// Parses the canonical textual form. Returns nullopt for anything else.
inline std::optional<CellRef> parse_cell_ref(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  CellKind kind;
  switch (s[0]) {
    case 'v': kind = CellKind::Vertex; break;
    case 'e': kind = CellKind::Edge; break;
    case 'f': kind = CellKind::Face; break;
    default: return std::nullopt;
  }
  std::uint64_t value = 0;
  for (char ch : s.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    if (value > 0xffffffffULL) return std::nullopt;
  }
  return CellRef{kind, static_cast<std::uint32_t>(value)};
}

/// Dense id of a cell within a fixed window layout. Ids enumerate all
/// cells in canonical (kind, index) order: vertices, then edges, then faces.
using CellId = std::uint32_t;

/// Per-kind cell counts of a window; maps CellRef <-> dense CellId.
struct CellLayout {
  std::uint32_t vertices = 0;
  std::uint32_t edges = 0;
  std::uint32_t faces = 0;

  friend constexpr bool operator==(const CellLayout&, const CellLayout&) = default;

  constexpr std::uint32_t total() const { return vertices + edges + faces; }

  constexpr bool contains(CellRef c) const {
    switch (c.kind) {
      case CellKind::Vertex: return c.index < vertices;
      case CellKind::Edge: return c.index < edges;
      case CellKind::Face: return c.index < faces;
    }
    return false;
  }

  constexpr CellId id(CellRef c) const {
    switch (c.kind) {
      case CellKind::Vertex: return c.index;
      case CellKind::Edge: return vertices + c.index;
      case CellKind::Face: return vertices + edges + c.index;
    }
    return 0;
  }

  constexpr CellRef ref(CellId id) const {
    if (id < vertices) return {CellKind::Vertex, id};
    id -= vertices;
    if (id < edges) return {CellKind::Edge, id};
    return {CellKind::Face, id - edges};
  }
};

}  // namespace tiletopo
