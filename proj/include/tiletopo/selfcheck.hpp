#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tiletopo/digital_space.hpp"

namespace tiletopo {

/// Independent reference implementations used to cross-check the main
/// algorithms (selftest command and the test suites). Each oracle takes a
/// deliberately different route from the code it checks: components via a
/// transitive-closure matrix over definitional adjacency, arcs via
/// homeomorphism with a Khalimsky-line interval, and window equality via
/// canonical traversal of the combinatorial map.

/// Components of s computed with a reachability matrix built from the
/// definitional adjacency (N u cl) \ {x}; no BFS, no cached table.
inline std::vector<CellSet> components_by_transitive_closure(const DigitalSpace& space,
                                                             const CellSet& s) {
  const auto ids = s.ids();
  const std::size_t n = ids.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<CellSet> adj;
  adj.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    adj.push_back(space.adjacency_set_from_definition(space.layout().ref(ids[i])));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i].contains_id(ids[j])) reach[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (reach[k][j]) reach[i][j] = 1;
    }
  std::vector<char> assigned(n, 0);
  std::vector<CellSet> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    CellSet comp(space.layout());
    for (std::size_t j = i; j < n; ++j)
      if (reach[i][j]) {
        comp.insert_id(ids[j]);
        assigned[j] = 1;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

/// Digital arc test via the original formulation: the sequence must be a
/// digital path whose underlying set is the homeomorphic image of a
/// finite interval of the Khalimsky line. Finite-space homeomorphism is
/// decided as an isomorphism of closure relations, trying both interval
/// parities.
inline bool is_digital_arc_by_interval(const DigitalSpace& space,
                                       std::span<const CellRef> seq) {
  if (!is_digital_path(space, seq)) return false;
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (seq[i] == seq[j]) return false;
  if (n <= 1) return true;

  // x in cl{y} within the subspace, from the closure table.
  auto in_closure = [&](CellRef x, CellRef y) {
    return space.closure_of(y).contains(x);
  };
  // In the Khalimsky interval starting with parity p, m lies in cl{k}
  // iff m == k, or |m-k| == 1 with m even and k odd.
  for (int parity = 0; parity < 2; ++parity) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      for (std::size_t j = 0; j < n && match; ++j) {
        if (i == j) continue;
        const bool interval = (i + 1 == j || j + 1 == i) &&
                              (static_cast<int>(i) + parity) % 2 == 0 &&
                              (static_cast<int>(j) + parity) % 2 == 1;
        if (in_closure(seq[i], seq[j]) != interval) match = false;
      }
    }
    if (match) return true;
  }
  return false;
}

/// Arc test over an unordered set: true iff some ordering realizes an
/// interval homeomorphism.
inline bool set_is_digital_arc_by_interval(const DigitalSpace& space, const CellSet& s) {
  const auto cells = s.cells();
  if (cells.empty()) return false;
  if (cells.size() == 1) return true;
  // Locate the two endpoints of the would-be path and walk it.
  std::vector<std::vector<CellRef>> nbr(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (i != j && space.adjacent(cells[i], cells[j])) nbr[i].push_back(cells[j]);
  std::size_t start = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (nbr[i].size() > 2) return false;
    if (nbr[i].size() == 1 && start == cells.size()) start = i;
  }
  if (start == cells.size()) return false;  // no endpoint: not a path
  std::vector<CellRef> order{cells[start]};
  CellRef prev = cells[start];
  CellRef cur = nbr[start][0];
  while (order.size() < cells.size()) {
    order.push_back(cur);
    std::size_t ci = 0;
    while (cells[ci] != cur) ++ci;
    if (nbr[ci].size() == 1) break;
    const CellRef next = (nbr[ci][0] == prev) ? nbr[ci][1] : nbr[ci][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != cells.size()) return false;
  return is_digital_arc_by_interval(space, order);
}

namespace detail {

/// Traversal string of the face-edge incidence map anchored at one flag
/// (face, boundary position, direction). Labels are first-visit ordinals,
/// so the string is independent of the window's own ids.
inline std::string anchored_signature(const TilingWindow& w, std::uint32_t root,
                                      std::size_t start, int dir) {
  std::vector<int> vlabel(w.vertices.size(), -1), elabel(w.edges.size(), -1),
      flabel(w.faces.size(), -1);
  int next_v = 0, next_e = 0, next_f = 0;
  std::ostringstream out;
  std::vector<std::tuple<std::uint32_t, std::size_t, int>> queue;
  queue.emplace_back(root, start, dir);
  flabel[root] = next_f++;
  std::size_t head = 0;
  while (head < queue.size()) {
    auto [fi, at, d] = queue[head++];
    const auto& b = w.faces[fi].boundary;
    const std::size_t n = b.size();
    out << 'F' << flabel[fi] << (w.faces[fi].complete ? '+' : '-') << '[';
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = (at + n + (d > 0 ? k : n - k)) % n;
      const CellRef c = b[idx];
      if (c.kind == CellKind::Vertex) {
        if (vlabel[c.index] < 0) vlabel[c.index] = next_v++;
        out << 'v' << vlabel[c.index] << (w.vertices[c.index].complete ? '+' : '-');
      } else {
        if (elabel[c.index] < 0) elabel[c.index] = next_e++;
        out << 'e' << elabel[c.index] << (w.edges[c.index].complete ? '+' : '-');
        // Cross complete edges to the face on the other side.
        const auto& e = w.edges[c.index];
        if (e.sides.size() == 2) {
          const std::uint32_t other = (e.sides[0] == fi) ? e.sides[1] : e.sides[0];
          if (flabel[other] < 0) {
            flabel[other] = next_f++;
            // Enter the neighbour at this edge, keeping rotation sense.
            const auto& ob = w.faces[other].boundary;
            std::size_t op = 0;
            for (std::size_t i = 0; i < ob.size(); ++i)
              if (ob[i] == c) { op = i; break; }
            queue.emplace_back(other, op, d);
          }
        }
      }
    }
    out << ']';
  }
  out << "|v" << next_v << "e" << next_e << "f" << next_f;
  return out.str();
}

}  // namespace detail

/// Canonical signature of a window's combinatorial map: the least
/// anchored traversal over all flags. Equal signatures mean the windows
/// are identical up to relabeling of cells.
inline std::string canonical_map_signature(const TilingWindow& w) {
  std::string best;
  for (std::uint32_t fi = 0; fi < w.faces.size(); ++fi) {
    const std::size_t n = w.faces[fi].boundary.size();
    for (std::size_t at = 0; at < n; ++at) {
      for (int dir : {+1, -1}) {
        std::string sig = detail::anchored_signature(w, fi, at, dir);
        if (best.empty() || sig < best) best = std::move(sig);
      }
    }
  }
  if (best.empty()) best = "<no faces>";
  return best;
}

inline bool windows_isomorphic(const TilingWindow& a, const TilingWindow& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.faces.size() != b.faces.size())
    return false;
  return canonical_map_signature(a) == canonical_map_signature(b);
}

}  // namespace tiletopo
