#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiletopo/jordan.hpp"

namespace tiletopo {

/// The six closed-curve conditions, each computed independently from
/// primitive operators. For a digital Jordan curve they are equivalent;
/// the reports exist so that equivalence can be tested, not assumed.
///
/// Exterior-side conditions are window-local: incomplete cells beyond the
/// rim count as exterior, so O-side openness/density is checked against
/// J and I(J) rather than against the truncated window complement.
struct ClosedCurveReport {
  bool a_closed = false;
  bool b_int_ext_open = false;
  bool c_nowhere_dense = false;
  bool d_complement_dense = false;
  bool e_no_faces = false;
  bool f_boundary_of_interior = false;

  bool all_agree() const {
    return a_closed == b_int_ext_open && a_closed == c_nowhere_dense &&
           a_closed == d_complement_dense && a_closed == e_no_faces &&
           a_closed == f_boundary_of_interior;
  }
  bool value() const { return a_closed; }
};

/// The three open-curve conditions of the dual proposition.
struct OpenCurveReport {
  bool a_open = false;
  bool b_int_ext_closed = false;
  bool c_no_vertices = false;

  bool all_agree() const {
    return a_open == b_int_ext_closed && a_open == c_no_vertices;
  }
  bool value() const { return a_open; }
};

namespace detail {

inline void require_jordan_with_margin(const DigitalSpace& space, const CellSet& J,
                                       int margin, const char* op) {
  const auto verdict = is_jordan_curve(space, J);
  if (!verdict.is_jordan)
    throw std::invalid_argument(std::string(op) + ": not a digital Jordan curve (" +
                                verdict.describe() + ")");
  J.for_each([&](CellRef c) {
    if (!star_complete(space.window(), c, margin))
      throw MarginError(std::string(op) + ": insufficient margin at " + to_string(c));
  });
}

}  // namespace detail

inline ClosedCurveReport classify_closed(const DigitalSpace& space, const CellSet& J,
                                         const ComplementSplit& split, int margin = 2) {
  detail::require_jordan_with_margin(space, J, margin, "classify_closed");
  const CellSet& I = split.interior;
  const CellSet& O = split.exterior;
  ClosedCurveReport r;

  r.a_closed = detail::closure_union(space, J) == J;

  bool open_sides = detail::interior_members(space, I) == I;
  if (open_sides) {
    const CellSet blocked = J | I;
    O.for_each([&](CellRef c) {
      if (open_sides && space.smallest_neighborhood(c).intersects(blocked)) open_sides = false;
    });
  }
  r.b_int_ext_open = open_sides;

  r.c_nowhere_dense = detail::interior_members(space, detail::closure_union(space, J)).empty();

  // Density of I u O: every complete cell lies in some member's closure.
  {
    CellSet cu = detail::closure_union(space, I | O);
    bool dense = true;
    const auto& layout = space.layout();
    for (CellId id = 0; dense && id < layout.total(); ++id)
      if (space.is_complete_id(id) && !cu.contains_id(id)) dense = false;
    r.d_complement_dense = dense;
  }

  r.e_no_faces = J.count_kind(CellKind::Face) == 0;

  r.f_boundary_of_interior =
      (detail::closure_union(space, I) - detail::interior_members(space, I)) == J;

  return r;
}

inline OpenCurveReport classify_open(const DigitalSpace& space, const CellSet& J,
                                     const ComplementSplit& split, int margin = 2) {
  detail::require_jordan_with_margin(space, J, margin, "classify_open");
  const CellSet& I = split.interior;
  const CellSet& O = split.exterior;
  OpenCurveReport r;

  r.a_open = detail::interior_members(space, J) == J;

  const bool interior_closed = detail::closure_union(space, I) == I;
  const bool exterior_closed = !detail::closure_union(space, O).intersects(J | I);
  r.b_int_ext_closed = interior_closed && exterior_closed;

  r.c_no_vertices = J.count_kind(CellKind::Vertex) == 0;

  return r;
}

/// For an open digital Jordan curve the interior always contains a
/// vertex. Throws when the curve is not open.
inline bool open_interior_vertex_check(const DigitalSpace& space, const CellSet& J,
                                       const ComplementSplit& split) {
  if (!(detail::interior_members(space, J) == J))
    throw std::invalid_argument("open_interior_vertex_check: curve is not open");
  return split.interior.count_kind(CellKind::Vertex) > 0;
}

/// Well-behavedness with a witness: false iff some vertex of some curve
/// face has all of its faces inside the curve.
struct WellBehavedResult {
  bool well_behaved = true;
  std::optional<std::pair<CellRef, CellRef>> witness;  // (face C, vertex x)
};

inline WellBehavedResult is_well_behaved(const DigitalSpace& space, const CellSet& J) {
  const TilingWindow& w = space.window();
  WellBehavedResult result;
  J.for_each([&](CellRef c) {
    if (!result.well_behaved || c.kind != CellKind::Face) return;
    auto vs = face_vertices(w, c.index);
    std::sort(vs.begin(), vs.end());
    for (auto vi : vs) {
      if (!w.vertices[vi].complete)
        throw MarginError("is_well_behaved: vertex " + to_string(vertex_ref(vi)) +
                          " of curve face " + to_string(c) + " has incomplete star");
      bool all_in = true;
      for (auto f : w.vertices[vi].faces)
        if (!J.contains(face_ref(f))) { all_in = false; break; }
      if (all_in) {
        result.well_behaved = false;
        result.witness = std::make_pair(c, vertex_ref(vi));
        return;
      }
    }
  });
  return result;
}

/// A well-behaved curve whose interior holds a vertex also holds a face.
/// Assertion surface for tests; throws when the preconditions fail.
inline bool well_behaved_interior_face(const DigitalSpace& space, const CellSet& J,
                                       const ComplementSplit& split) {
  if (!is_well_behaved(space, J).well_behaved)
    throw std::invalid_argument("well_behaved_interior_face: curve is not well-behaved");
  if (split.interior.count_kind(CellKind::Vertex) == 0)
    throw std::invalid_argument("well_behaved_interior_face: interior contains no vertex");
  return split.interior.count_kind(CellKind::Face) > 0;
}

namespace detail {

inline void require_complete_face(const TilingWindow& w, CellRef c, const char* op) {
  if (c.kind != CellKind::Face || !w.contains(c))
    throw std::invalid_argument(std::string(op) + ": " + to_string(c) + " is not a face");
  if (!w.faces[c.index].complete)
    throw MarginError(std::string(op) + ": incomplete face " + to_string(c));
}

inline bool sorted_intersects(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return true;
  }
  return false;
}

}  // namespace detail

/// Faces sharing an edge (the generalized 4-neighbour relation).
inline bool edge_adjacent(const TilingWindow& w, CellRef c1, CellRef c2) {
  detail::require_complete_face(w, c1, "edge_adjacent");
  detail::require_complete_face(w, c2, "edge_adjacent");
  if (c1 == c2) throw std::invalid_argument("edge_adjacent: faces must be distinct");
  auto e1 = face_edges(w, c1.index), e2 = face_edges(w, c2.index);
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  return detail::sorted_intersects(e1, e2);
}

/// Faces sharing a vertex (the generalized 8-neighbour relation).
/// edge_adjacent implies vertex_adjacent.
inline bool vertex_adjacent(const TilingWindow& w, CellRef c1, CellRef c2) {
  detail::require_complete_face(w, c1, "vertex_adjacent");
  detail::require_complete_face(w, c2, "vertex_adjacent");
  if (c1 == c2) throw std::invalid_argument("vertex_adjacent: faces must be distinct");
  auto v1 = face_vertices(w, c1.index), v2 = face_vertices(w, c2.index);
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  return detail::sorted_intersects(v1, v2);
}

enum class FaceAdjacency { Edge, Vertex };

inline const char* to_string(FaceAdjacency m) {
  return m == FaceAdjacency::Edge ? "edge" : "vertex";
}

/// Connectivity of a face set under the chosen face adjacency.
/// Empty and singleton sets count as connected.
inline bool faces_connected(const TilingWindow& w, const CellSet& faces, FaceAdjacency mode) {
  std::vector<CellRef> members = faces.cells();
  for (CellRef c : members) detail::require_complete_face(w, c, "faces_connected");
  if (members.size() <= 1) return true;

  std::vector<std::vector<std::uint32_t>> keys(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    keys[i] = (mode == FaceAdjacency::Edge) ? face_edges(w, members[i].index)
                                            : face_vertices(w, members[i].index);
    std::sort(keys[i].begin(), keys[i].end());
  }
  std::vector<bool> seen(members.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (seen[i] || !detail::sorted_intersects(keys[cur], keys[i])) continue;
      seen[i] = true;
      ++reached;
      stack.push_back(i);
    }
  }
  return reached == members.size();
}

/// Whether a curve qualifies as edge-/vertex-Jordan. A curve without any
/// face is NotApplicable rather than vacuously a member of either class.
enum class KindStatus { Yes, No, NotApplicable };

inline const char* to_string(KindStatus s) {
  switch (s) {
    case KindStatus::Yes: return "yes";
    case KindStatus::No: return "no";
    case KindStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace detail {

inline std::vector<CellRef> curve_faces(const CellSet& J) {
  std::vector<CellRef> out;
  J.for_each([&](CellRef c) {
    if (c.kind == CellKind::Face) out.push_back(c);
  });
  return out;
}

inline std::size_t adjacent_curve_faces(const TilingWindow& w, CellRef face,
                                        const std::vector<CellRef>& faces,
                                        FaceAdjacency mode) {
  std::size_t n = 0;
  for (CellRef other : faces) {
    if (other == face) continue;
    const bool adj = (mode == FaceAdjacency::Edge) ? edge_adjacent(w, face, other)
                                                   : vertex_adjacent(w, face, other);
    n += adj ? 1 : 0;
  }
  return n;
}

}  // namespace detail

/// Edge-Jordan: an open digital Jordan curve each of whose faces has
/// exactly two edge-adjacent faces inside the curve.
inline KindStatus edge_jordan_status(const DigitalSpace& space, const CellSet& J) {
  if (!is_jordan_curve(space, J).is_jordan) return KindStatus::No;
  const auto faces = detail::curve_faces(J);
  if (faces.empty()) return KindStatus::NotApplicable;
  bool open = true;
  J.for_each([&](CellRef c) {
    if (open && !space.smallest_neighborhood(c).subset_of(J)) open = false;
  });
  if (!open) return KindStatus::No;
  for (CellRef c : faces)
    if (detail::adjacent_curve_faces(space.window(), c, faces, FaceAdjacency::Edge) != 2)
      return KindStatus::No;
  return KindStatus::Yes;
}

/// Vertex-Jordan: a digital Jordan curve of faces and vertices each of
/// whose faces has exactly two vertex-adjacent faces inside the curve.
inline KindStatus vertex_jordan_status(const DigitalSpace& space, const CellSet& J) {
  if (!is_jordan_curve(space, J).is_jordan) return KindStatus::No;
  const auto faces = detail::curve_faces(J);
  if (faces.empty()) return KindStatus::NotApplicable;
  if (J.count_kind(CellKind::Edge) != 0) return KindStatus::No;
  for (CellRef c : faces)
    if (detail::adjacent_curve_faces(space.window(), c, faces, FaceAdjacency::Vertex) != 2)
      return KindStatus::No;
  return KindStatus::Yes;
}

inline bool is_edge_jordan(const DigitalSpace& space, const CellSet& J) {
  return edge_jordan_status(space, J) == KindStatus::Yes;
}
inline bool is_vertex_jordan(const DigitalSpace& space, const CellSet& J) {
  return vertex_jordan_status(space, J) == KindStatus::Yes;
}

enum class JordanKind { EdgeJordan, VertexJordan };

inline const char* to_string(JordanKind k) {
  return k == JordanKind::EdgeJordan ? "edge-jordan" : "vertex-jordan";
}

/// Verification record for the generalized Rosenfeld theorems. When the
/// face-count hypothesis holds, every conclusion field must come out
/// true; the report states what was actually computed either way.
/// Exterior connectivity is evaluated over complete faces only.
struct RosenfeldReport {
  JordanKind curve_kind = JordanKind::EdgeJordan;
  int face_count = 0;
  int delta = 0;
  bool hypothesis_met = false;
  bool well_behaved = false;
  bool interior_has_face = false;
  bool exterior_has_face = false;
  bool interior_faces_connected = false;
  bool exterior_faces_connected = false;
  FaceAdjacency connectivity_mode = FaceAdjacency::Vertex;

  bool conclusions_hold() const {
    return well_behaved && interior_has_face && exterior_has_face &&
           interior_faces_connected && exterior_faces_connected;
  }
};

inline RosenfeldReport rosenfeld_report(const DigitalSpace& space, const CellSet& J,
                                        JordanKind kind, int margin = 2) {
  const KindStatus status = (kind == JordanKind::EdgeJordan) ? edge_jordan_status(space, J)
                                                             : vertex_jordan_status(space, J);
  if (status != KindStatus::Yes)
    throw std::invalid_argument(std::string("rosenfeld_report: curve is not ") +
                                to_string(kind) + " (" + to_string(status) + ")");

  const auto split = jordan_complement(space, J, margin);
  (J | split.interior).for_each([&](CellRef c) {
    if (!star_complete(space.window(), c, margin))
      throw MarginError("rosenfeld_report: insufficient margin at " + to_string(c));
  });

  const TilingWindow& w = space.window();
  RosenfeldReport r;
  r.curve_kind = kind;
  r.face_count = static_cast<int>(J.count_kind(CellKind::Face));
  r.delta = delta(w);
  r.hypothesis_met = r.face_count >= r.delta + 1;
  r.well_behaved = is_well_behaved(space, J).well_behaved;
  r.connectivity_mode =
      (kind == JordanKind::EdgeJordan) ? FaceAdjacency::Vertex : FaceAdjacency::Edge;

  CellSet interior_faces(space.layout()), exterior_faces(space.layout());
  split.interior.for_each([&](CellRef c) {
    if (c.kind == CellKind::Face) interior_faces.insert(c);
  });
  split.exterior.for_each([&](CellRef c) {
    if (c.kind == CellKind::Face) exterior_faces.insert(c);
  });
  r.interior_has_face = !interior_faces.empty();
  r.exterior_has_face = !exterior_faces.empty();
  r.interior_faces_connected = faces_connected(w, interior_faces, r.connectivity_mode);
  r.exterior_faces_connected = faces_connected(w, exterior_faces, r.connectivity_mode);
  return r;
}

}  // namespace tiletopo
