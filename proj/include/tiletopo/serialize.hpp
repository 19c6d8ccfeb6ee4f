#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "tiletopo/analysis.hpp"
#include "tiletopo/tiling.hpp"

namespace tiletopo {

/// Structured-report serialization. Key order is fixed (insertion order
/// of ordered_json), so output is byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json to_json(const TilingWindow& w, const ValidationReport& r) {
  Json out;
  out["ok"] = r.ok;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["axiom"] = v.axiom;
    Json cells = Json::array();
    for (CellRef c : v.cells) cells.push_back(w.cell_name(c));
    item["cells"] = std::move(cells);
    item["message"] = v.message;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

inline Json to_json(const TilingWindow& w, const CurveVerdict& v) {
  Json out;
  out["is_jordan"] = v.is_jordan;
  out["reason"] = to_string(v.reason);
  if (v.chord)
    out["chord"] = Json::array({w.cell_name(v.chord->first), w.cell_name(v.chord->second)});
  if (v.cell) out["cell"] = w.cell_name(*v.cell);
  return out;
}

inline Json to_json(const ClosedCurveReport& r) {
  Json out;
  out["a_closed"] = r.a_closed;
  out["b_int_ext_open"] = r.b_int_ext_open;
  out["c_nowhere_dense"] = r.c_nowhere_dense;
  out["d_complement_dense"] = r.d_complement_dense;
  out["e_no_faces"] = r.e_no_faces;
  out["f_boundary_of_interior"] = r.f_boundary_of_interior;
  out["all_agree"] = r.all_agree();
  return out;
}

inline Json to_json(const OpenCurveReport& r) {
  Json out;
  out["a_open"] = r.a_open;
  out["b_int_ext_closed"] = r.b_int_ext_closed;
  out["c_no_vertices"] = r.c_no_vertices;
  out["all_agree"] = r.all_agree();
  return out;
}

inline Json to_json(const RosenfeldReport& r) {
  Json out;
  out["curve_kind"] = to_string(r.curve_kind);
  out["face_count"] = r.face_count;
  out["delta"] = r.delta;
  out["hypothesis_met"] = r.hypothesis_met;
  out["well_behaved"] = r.well_behaved;
  out["interior_has_face"] = r.interior_has_face;
  out["exterior_has_face"] = r.exterior_has_face;
  out["interior_faces_connected"] = r.interior_faces_connected;
  out["exterior_faces_connected"] = r.exterior_faces_connected;
  out["connectivity_mode"] = to_string(r.connectivity_mode);
  out["conclusions_hold"] = r.conclusions_hold();
  return out;
}

inline Json to_json(const TilingWindow& w, const AnalysisReport& r) {
  Json out;
  out["curve_size"] = r.curve_size;
  out["induced_cycle_check"] = to_json(w, r.verdict_fast);
  out["deletion_check"] = to_json(w, r.verdict_deletion);
  out["is_jordan"] = r.is_jordan;
  if (!r.is_jordan) return out;
  Json cycle = Json::array();
  for (CellRef c : r.cycle) cycle.push_back(w.cell_name(c));
  out["cycle"] = std::move(cycle);
  out["faces_alternate"] = r.faces_alternate;
  out["interior_size"] = r.interior_size;
  out["exterior_size"] = r.exterior_size;
  if (r.rim_witness) out["rim_witness"] = w.cell_name(*r.rim_witness);
  out["interior_contact"] = r.interior_contact;
  out["closed"] = to_json(r.closed);
  out["open"] = to_json(r.open);
  if (r.open_interior_vertex) out["open_interior_vertex"] = *r.open_interior_vertex;
  out["well_behaved"] = r.well_behaved.well_behaved;
  if (r.well_behaved.witness)
    out["well_behaved_witness"] = Json::array({w.cell_name(r.well_behaved.witness->first),
                                               w.cell_name(r.well_behaved.witness->second)});
  if (r.wb_interior_face) out["well_behaved_interior_face"] = *r.wb_interior_face;
  out["edge_jordan"] = to_string(r.edge_kind);
  out["vertex_jordan"] = to_string(r.vertex_kind);
  if (r.rosenfeld) out["rosenfeld"] = to_json(*r.rosenfeld);
  return out;
}

inline void write_validation_text(std::ostream& out, const TilingWindow& w,
                                  const ValidationReport& r) {
  if (r.ok) {
    out << "ok: all axioms hold on complete cells\n";
    return;
  }
  out << "invalid: " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) {
    out << "  [" << v.axiom << "]";
    for (CellRef c : v.cells) out << ' ' << w.cell_name(c);
    out << ": " << v.message << "\n";
  }
}

inline void write_analysis_text(std::ostream& out, const TilingWindow& w,
                                const AnalysisReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "curve size:            " << r.curve_size << "\n";
  out << "induced-cycle check:   " << r.verdict_fast.describe() << "\n";
  out << "deletion check:        " << r.verdict_deletion.describe() << "\n";
  out << "digital Jordan curve:  " << yn(r.is_jordan) << "\n";
  if (!r.is_jordan) return;
  out << "cycle:                ";
  for (CellRef c : r.cycle) out << ' ' << w.cell_name(c);
  out << "\n";
  out << "faces alternate:       " << yn(r.faces_alternate) << "\n";
  out << "|I(J)|:                " << r.interior_size << "\n";
  out << "|O(J) in window|:      " << r.exterior_size << "\n";
  if (r.rim_witness) out << "rim witness:           " << w.cell_name(*r.rim_witness) << "\n";
  out << "A(x) meets I(J) all x: " << yn(r.interior_contact) << "\n";
  out << "closed-curve reports:  a=" << yn(r.closed.a_closed)
      << " b=" << yn(r.closed.b_int_ext_open) << " c=" << yn(r.closed.c_nowhere_dense)
      << " d=" << yn(r.closed.d_complement_dense) << " e=" << yn(r.closed.e_no_faces)
      << " f=" << yn(r.closed.f_boundary_of_interior)
      << " (agree=" << yn(r.closed.all_agree()) << ")\n";
  out << "open-curve reports:    a=" << yn(r.open.a_open)
      << " b=" << yn(r.open.b_int_ext_closed) << " c=" << yn(r.open.c_no_vertices)
      << " (agree=" << yn(r.open.all_agree()) << ")\n";
  if (r.open_interior_vertex)
    out << "interior has vertex:   " << yn(*r.open_interior_vertex) << "\n";
  out << "well-behaved:          " << yn(r.well_behaved.well_behaved);
  if (r.well_behaved.witness)
    out << "  (witness face " << w.cell_name(r.well_behaved.witness->first) << ", vertex "
        << w.cell_name(r.well_behaved.witness->second) << ")";
  out << "\n";
  if (r.wb_interior_face)
    out << "interior has face:     " << yn(*r.wb_interior_face) << "\n";
  out << "edge-Jordan:           " << to_string(r.edge_kind) << "\n";
  out << "vertex-Jordan:         " << to_string(r.vertex_kind) << "\n";
  if (r.rosenfeld) {
    const auto& rr = *r.rosenfeld;
    out << "rosenfeld report (" << to_string(rr.curve_kind) << "):\n";
    out << "  faces=" << rr.face_count << " delta=" << rr.delta
        << " hypothesis(faces>=delta+1)=" << yn(rr.hypothesis_met) << "\n";
    out << "  well_behaved=" << yn(rr.well_behaved)
        << " interior_has_face=" << yn(rr.interior_has_face)
        << " exterior_has_face=" << yn(rr.exterior_has_face) << "\n";
    out << "  " << to_string(rr.connectivity_mode)
        << "-connectivity: interior=" << yn(rr.interior_faces_connected)
        << " exterior=" << yn(rr.exterior_faces_connected) << "\n";
  }
}

}  // namespace tiletopo
