#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "tiletopo/cell_set.hpp"
#include "tiletopo/jordan.hpp"
#include "tiletopo/tiling.hpp"

namespace tiletopo {

struct RenderOptions {
  double scale = 42.0;
  double pad = 0.6;  // in tiling units
};

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0
  return buf;
}

}  // namespace detail

/// Deterministic SVG drawing of a window: one <polygon> per face, one
/// <path> per edge, one <circle> per vertex, in index order. Curve cells
/// are highlighted and interior cells shaded when given. Requires vertex
/// coordinates (generators attach them; loaded files need `coords`).
inline std::string render_svg(const TilingWindow& w, const CellSet* curve = nullptr,
                              const ComplementSplit* split = nullptr,
                              const RenderOptions& opt = {}) {
  if (!w.has_coords())
    throw Error("render_svg: window has no vertex coordinates");

  double minx = w.vertex_coords[0][0], maxx = minx;
  double miny = w.vertex_coords[0][1], maxy = miny;
  for (const auto& c : w.vertex_coords) {
    minx = std::min(minx, c[0]);
    maxx = std::max(maxx, c[0]);
    miny = std::min(miny, c[1]);
    maxy = std::max(maxy, c[1]);
  }
  const double width = (maxx - minx + 2 * opt.pad) * opt.scale;
  const double height = (maxy - miny + 2 * opt.pad) * opt.scale;
  auto px = [&](double x) { return (x - minx + opt.pad) * opt.scale; };
  auto py = [&](double y) { return (maxy - y + opt.pad) * opt.scale; };

  auto in_curve = [&](CellRef c) { return curve && curve->contains(c); };
  auto in_interior = [&](CellRef c) { return split && split->interior.contains(c); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << detail::fmt2(width) << "\" height=\"" << detail::fmt2(height) << "\" viewBox=\"0 0 "
      << detail::fmt2(width) << ' ' << detail::fmt2(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (std::uint32_t fi = 0; fi < w.faces.size(); ++fi) {
    const CellRef ref = face_ref(fi);
    std::string fill = w.faces[fi].complete ? "#f2f1ec" : "#fbfbf9";
    std::string stroke = "#c8c8c0";
    std::string stroke_width = "1";
    if (in_interior(ref)) fill = "#cfe3f5";
    if (in_curve(ref)) {
      fill = "#f6d1cb";
      stroke = "#c0392b";
      stroke_width = "2.5";
    }
    out << "<polygon points=\"";
    bool first = true;
    for (auto v : face_vertices(w, fi)) {
      if (!first) out << ' ';
      first = false;
      out << detail::fmt2(px(w.vertex_coords[v][0])) << ',' << detail::fmt2(py(w.vertex_coords[v][1]));
    }
    out << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << stroke_width << "\"/>\n";
  }

  for (std::uint32_t ei = 0; ei < w.edges.size(); ++ei) {
    const auto& e = w.edges[ei];
    if (e.endpoints.size() != 2) continue;
    const CellRef ref = edge_ref(ei);
    std::string stroke = e.complete ? "#8a8a82" : "#d5d5cd";
    std::string width_attr = "1.2";
    if (in_interior(ref)) {
      stroke = "#2e6da4";
      width_attr = "3";
    }
    if (in_curve(ref)) {
      stroke = "#c0392b";
      width_attr = "3.5";
    }
    const auto& a = w.vertex_coords[e.endpoints[0]];
    const auto& b = w.vertex_coords[e.endpoints[1]];
    out << "<path d=\"M " << detail::fmt2(px(a[0])) << ' ' << detail::fmt2(py(a[1])) << " L "
        << detail::fmt2(px(b[0])) << ' ' << detail::fmt2(py(b[1])) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << width_attr << "\" fill=\"none\"/>\n";
  }

  for (std::uint32_t vi = 0; vi < w.vertices.size(); ++vi) {
    const CellRef ref = vertex_ref(vi);
    std::string fill = w.vertices[vi].complete ? "#55534e" : "#c9c9c1";
    std::string radius = "2.6";
    if (in_interior(ref)) {
      fill = "#2e6da4";
      radius = "5";
    }
    if (in_curve(ref)) {
      fill = "#c0392b";
      radius = "5.5";
    }
    out << "<circle cx=\"" << detail::fmt2(px(w.vertex_coords[vi][0])) << "\" cy=\""
        << detail::fmt2(py(w.vertex_coords[vi][1])) << "\" r=\"" << radius << "\" fill=\"" << fill
        << "\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace tiletopo
