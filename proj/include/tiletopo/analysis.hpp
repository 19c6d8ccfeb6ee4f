#pragma once

#include <optional>
#include <vector>

#include "tiletopo/curve_classes.hpp"
#include "tiletopo/jordan.hpp"

namespace tiletopo {

/// Everything the analyze command reports about one curve: both Jordan
/// validators, the complement split, both classification reports, the
/// well-behavedness and edge/vertex-Jordan findings, and the Rosenfeld
/// report when one applies.
struct AnalysisReport {
  std::size_t curve_size = 0;
  CurveVerdict verdict_fast;
  CurveVerdict verdict_deletion;
  bool is_jordan = false;

  // Populated only when the curve is a digital Jordan curve.
  std::vector<CellRef> cycle;
  bool faces_alternate = false;
  std::size_t interior_size = 0;
  std::size_t exterior_size = 0;
  std::optional<CellRef> rim_witness;
  bool interior_contact = false;
  ClosedCurveReport closed;
  OpenCurveReport open;
  std::optional<bool> open_interior_vertex;
  WellBehavedResult well_behaved;
  std::optional<bool> wb_interior_face;
  KindStatus edge_kind = KindStatus::NotApplicable;
  KindStatus vertex_kind = KindStatus::NotApplicable;
  std::optional<RosenfeldReport> rosenfeld;
};

/// Runs the full analysis pipeline on a cell set. Requires the standard
/// completeness margin around the curve when it is Jordan.
inline AnalysisReport analyze_curve(const DigitalSpace& space, const CellSet& J,
                                    int margin = 2) {
  AnalysisReport r;
  r.curve_size = J.size();
  r.verdict_fast = is_jordan_curve(space, J);
  r.verdict_deletion = is_jordan_curve_by_deletion(space, J);
  r.is_jordan = r.verdict_fast.is_jordan;
  if (!r.is_jordan) return r;

  r.cycle = curve_cycle_order(space, J);
  {
    // Informational flag: half the cells are faces and they alternate
    // with the non-face cells around the cycle.
    const std::size_t n = r.cycle.size();
    bool alt = n % 2 == 0 && J.count_kind(CellKind::Face) * 2 == n;
    const bool even_faces = alt && r.cycle[0].kind == CellKind::Face;
    for (std::size_t i = 0; alt && i < n; ++i)
      if ((r.cycle[i].kind == CellKind::Face) != (i % 2 == 0 ? even_faces : !even_faces))
        alt = false;
    r.faces_alternate = alt;
  }

  const ComplementSplit split = jordan_complement(space, J, margin);
  r.interior_size = split.interior.size();
  r.exterior_size = split.exterior.size();
  r.rim_witness = split.rim_witness;
  r.interior_contact = interior_adjacency_check(space, J, split);
  r.closed = classify_closed(space, J, split, margin);
  r.open = classify_open(space, J, split, margin);
  if (r.open.a_open)
    r.open_interior_vertex = open_interior_vertex_check(space, J, split);
  r.well_behaved = is_well_behaved(space, J);
  if (r.well_behaved.well_behaved && split.interior.count_kind(CellKind::Vertex) > 0)
    r.wb_interior_face = well_behaved_interior_face(space, J, split);
  r.edge_kind = edge_jordan_status(space, J);
  r.vertex_kind = vertex_jordan_status(space, J);
  if (r.edge_kind == KindStatus::Yes)
    r.rosenfeld = rosenfeld_report(space, J, JordanKind::EdgeJordan, margin);
  else if (r.vertex_kind == KindStatus::Yes)
    r.rosenfeld = rosenfeld_report(space, J, JordanKind::VertexJordan, margin);
  return r;
}

}  // namespace tiletopo
