#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tiletopo/generators.hpp"
#include "tiletopo/tiling.hpp"

namespace tiletopo {
namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      const auto piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

inline std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

/// Loads a tiling window from its line-oriented text form:
///
///   [vertices]
///   v0 edges=e0,e1,e2 faces=f0,f1 complete=1 coords=0,1.5
///   [edges]
///   e0 endpoints=v0,v1 sides=f0,f1 complete=1
///   [faces]
///   f0 boundary=v0,e0,v1,e1 complete=1
///
/// Ids are arbitrary strings, unique across all sections; unknown keys
/// are ignored. Records are stored verbatim (face boundaries are rotated
/// to start at a vertex); validate_tiling is NOT run implicitly.
inline TilingWindow load_tiling(std::istream& in, const std::string& source = "<stream>") {
  struct Line {
    int number;
    std::string id;
    std::map<std::string, std::string> fields;
  };
  std::vector<Line> vlines, elines, flines;
  std::map<std::string, CellRef> by_id;

  auto fail = [&](int line, const std::string& msg) -> void {
    throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
  };

  std::string raw;
  int lineno = 0;
  int section = -1;  // 0 vertices, 1 edges, 2 faces
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line == "[vertices]") section = 0;
      else if (line == "[edges]") section = 1;
      else if (line == "[faces]") section = 2;
      else fail(lineno, "unknown section " + line);
      continue;
    }
    if (section < 0) fail(lineno, "cell line before any section header");
    std::istringstream tokens(line);
    std::string id;
    tokens >> id;
    Line rec{lineno, id, {}};
    std::string tok;
    while (tokens >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) fail(lineno, "expected key=value, got '" + tok + "'");
      rec.fields[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    CellRef ref;
    if (section == 0) ref = vertex_ref(static_cast<std::uint32_t>(vlines.size()));
    else if (section == 1) ref = edge_ref(static_cast<std::uint32_t>(elines.size()));
    else ref = face_ref(static_cast<std::uint32_t>(flines.size()));
    if (!by_id.emplace(id, ref).second) fail(lineno, "duplicate cell id '" + id + "'");
    (section == 0 ? vlines : section == 1 ? elines : flines).push_back(std::move(rec));
  }

  auto resolve = [&](const std::string& id, CellKind kind, int line) -> std::uint32_t {
    const auto it = by_id.find(id);
    if (it == by_id.end()) fail(line, "dangling reference to undefined cell '" + id + "'");
    if (it->second.kind != kind)
      fail(line, "cell '" + id + "' is not a " +
                     std::string(1, kind_letter(kind)) + "-cell as required here");
    return it->second.index;
  };
  auto parse_bool = [&](const std::string& v, int line) -> bool {
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    fail(line, "bad boolean '" + v + "'");
    return false;
  };

  TilingWindow w;
  w.vertices.resize(vlines.size());
  w.edges.resize(elines.size());
  w.faces.resize(flines.size());
  bool any_coords = false;
  for (const auto& rec : vlines) any_coords |= rec.fields.count("coords") > 0;
  if (any_coords) w.vertex_coords.assign(vlines.size(), {0.0, 0.0});

  for (std::size_t i = 0; i < vlines.size(); ++i) {
    const auto& rec = vlines[i];
    auto& v = w.vertices[i];
    w.vertex_names.push_back(rec.id);
    if (auto it = rec.fields.find("edges"); it != rec.fields.end())
      for (const auto& id : detail::split(it->second, ','))
        v.edges.push_back(resolve(id, CellKind::Edge, rec.number));
    if (auto it = rec.fields.find("faces"); it != rec.fields.end())
      for (const auto& id : detail::split(it->second, ','))
        v.faces.push_back(resolve(id, CellKind::Face, rec.number));
    if (auto it = rec.fields.find("complete"); it != rec.fields.end())
      v.complete = parse_bool(it->second, rec.number);
    if (auto it = rec.fields.find("coords"); it != rec.fields.end()) {
      const auto parts = detail::split(it->second, ',');
      if (parts.size() != 2) fail(rec.number, "coords needs two numbers");
      try {
        w.vertex_coords[i] = {std::stod(parts[0]), std::stod(parts[1])};
      } catch (const std::exception&) {
        fail(rec.number, "bad coordinate number");
      }
    }
  }
  for (std::size_t i = 0; i < elines.size(); ++i) {
    const auto& rec = elines[i];
    auto& e = w.edges[i];
    w.edge_names.push_back(rec.id);
    if (auto it = rec.fields.find("endpoints"); it != rec.fields.end())
      for (const auto& id : detail::split(it->second, ','))
        e.endpoints.push_back(resolve(id, CellKind::Vertex, rec.number));
    if (auto it = rec.fields.find("sides"); it != rec.fields.end())
      for (const auto& id : detail::split(it->second, ','))
        e.sides.push_back(resolve(id, CellKind::Face, rec.number));
    if (auto it = rec.fields.find("complete"); it != rec.fields.end())
      e.complete = parse_bool(it->second, rec.number);
  }
  for (std::size_t i = 0; i < flines.size(); ++i) {
    const auto& rec = flines[i];
    auto& f = w.faces[i];
    w.face_names.push_back(rec.id);
    if (auto it = rec.fields.find("boundary"); it != rec.fields.end()) {
      for (const auto& id : detail::split(it->second, ',')) {
        const auto found = by_id.find(id);
        if (found == by_id.end())
          fail(rec.number, "dangling reference to undefined cell '" + id + "'");
        if (found->second.kind == CellKind::Face)
          fail(rec.number, "face boundary may only contain vertices and edges");
        f.boundary.push_back(found->second);
      }
      // Cyclic lists are stored starting at a vertex when possible.
      if (!f.boundary.empty() && f.boundary.front().kind == CellKind::Edge &&
          f.boundary.back().kind == CellKind::Vertex) {
        std::rotate(f.boundary.begin(), f.boundary.end() - 1, f.boundary.end());
      }
    }
    if (auto it = rec.fields.find("complete"); it != rec.fields.end())
      f.complete = parse_bool(it->second, rec.number);
  }

  if (w.cell_count() == 0) throw ParseError(source + ": document defines no cells");
  return w;
}

inline TilingWindow load_tiling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open tiling file");
  return load_tiling(in, path);
}

inline void save_tiling(std::ostream& out, const TilingWindow& w) {
  auto name = [&](CellRef c) { return w.cell_name(c); };
  out << "# tiletopo tiling\n";
  out << "[vertices]\n";
  for (std::uint32_t i = 0; i < w.vertices.size(); ++i) {
    const auto& v = w.vertices[i];
    out << name(vertex_ref(i));
    out << " edges=";
    for (std::size_t k = 0; k < v.edges.size(); ++k)
      out << (k ? "," : "") << name(edge_ref(v.edges[k]));
    out << " faces=";
    for (std::size_t k = 0; k < v.faces.size(); ++k)
      out << (k ? "," : "") << name(face_ref(v.faces[k]));
    out << " complete=" << (v.complete ? 1 : 0);
    if (w.has_coords())
      out << " coords=" << detail::format_coord(w.vertex_coords[i][0]) << ','
          << detail::format_coord(w.vertex_coords[i][1]);
    out << "\n";
  }
  out << "[edges]\n";
  for (std::uint32_t i = 0; i < w.edges.size(); ++i) {
    const auto& e = w.edges[i];
    out << name(edge_ref(i)) << " endpoints=";
    for (std::size_t k = 0; k < e.endpoints.size(); ++k)
      out << (k ? "," : "") << name(vertex_ref(e.endpoints[k]));
    out << " sides=";
    for (std::size_t k = 0; k < e.sides.size(); ++k)
      out << (k ? "," : "") << name(face_ref(e.sides[k]));
    out << " complete=" << (e.complete ? 1 : 0) << "\n";
  }
  out << "[faces]\n";
  for (std::uint32_t i = 0; i < w.faces.size(); ++i) {
    const auto& f = w.faces[i];
    out << name(face_ref(i)) << " boundary=";
    for (std::size_t k = 0; k < f.boundary.size(); ++k)
      out << (k ? "," : "") << name(f.boundary[k]);
    out << " complete=" << (f.complete ? 1 : 0) << "\n";
  }
}

inline void save_tiling_file(const std::string& path, const TilingWindow& w) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot write tiling file");
  save_tiling(out, w);
  if (!out.good()) throw Error(path + ": write failed");
}

/// A curve document: a tiling reference plus cell ids in intended cyclic
/// order. The order is validated against the curve, never trusted.
struct CurveDocument {
  std::string tiling_ref;
  std::vector<std::string> cells;
};

inline CurveDocument load_curve(std::istream& in, const std::string& source = "<stream>") {
  CurveDocument doc;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (doc.tiling_ref.empty()) {
      constexpr std::string_view kPrefix = "tiling:";
      if (line.rfind(kPrefix, 0) != 0)
        throw ParseError(source + ":" + std::to_string(lineno) +
                         ": curve file must start with 'tiling: <ref>'");
      doc.tiling_ref = detail::trim(std::string_view(line).substr(kPrefix.size()));
      if (doc.tiling_ref.empty())
        throw ParseError(source + ":" + std::to_string(lineno) + ": empty tiling reference");
      continue;
    }
    doc.cells.push_back(line);
  }
  if (doc.tiling_ref.empty()) throw ParseError(source + ": missing 'tiling:' header");
  return doc;
}

inline CurveDocument load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open curve file");
  return load_curve(in, path);
}

inline void save_curve(std::ostream& out, const std::string& tiling_ref,
                       const TilingWindow& w, const std::vector<CellRef>& cycle) {
  out << "tiling: " << tiling_ref << "\n";
  for (CellRef c : cycle) out << w.cell_name(c) << "\n";
}

inline void save_curve_file(const std::string& path, const std::string& tiling_ref,
                            const TilingWindow& w, const std::vector<CellRef>& cycle) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot write curve file");
  save_curve(out, tiling_ref, w, cycle);
}

/// Opens a tiling by reference: "builtin:square:WxH", "builtin:hex:R",
/// "builtin:tri:S", or a path to a tiling file.
inline TilingWindow open_tiling_ref(const std::string& ref) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (ref.rfind(kBuiltin, 0) != 0) return load_tiling_file(ref);
  const auto parts = detail::split(std::string_view(ref).substr(kBuiltin.size()), ':');
  auto parse_int = [&](const std::string& s) -> int {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad builtin tiling reference '" + ref + "'");
    }
  };
  if (parts.size() == 2 && parts[0] == "square") {
    const auto dims = detail::split(parts[1], 'x');
    if (dims.size() != 2) throw ParseError("bad builtin tiling reference '" + ref + "'");
    return build_square_window(parse_int(dims[0]), parse_int(dims[1]));
  }
  if (parts.size() == 2 && parts[0] == "hex") return build_hexagonal_window(parse_int(parts[1]));
  if (parts.size() == 2 && parts[0] == "tri") return build_triangular_window(parse_int(parts[1]));
  throw ParseError("bad builtin tiling reference '" + ref + "'");
}

}  // namespace tiletopo
