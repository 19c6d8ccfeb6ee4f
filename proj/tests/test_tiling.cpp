#include <sstream>

#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tiletopo/tiletopo.hpp"

using namespace tiletopo;
using namespace tthelpers;

TEST_CASE("square window counts and completeness") {
  const auto w = build_square_window(2, 2);
  CHECK(w.faces.size() == 4);
  CHECK(w.edges.size() == 12);
  CHECK(w.vertices.size() == 9);

  int complete_vertices = 0;
  for (const auto& v : w.vertices) complete_vertices += v.complete ? 1 : 0;
  CHECK(complete_vertices == 1);

  for (int cols : {2, 3, 5}) {
    for (int rows : {2, 4, 7}) {
      const auto win = build_square_window(cols, rows);
      CHECK(win.faces.size() == static_cast<std::size_t>(cols * rows));
      CHECK(win.edges.size() == static_cast<std::size_t>(cols * (rows + 1) + rows * (cols + 1)));
      CHECK(win.vertices.size() == static_cast<std::size_t>((cols + 1) * (rows + 1)));
    }
  }
}

TEST_CASE("square 3x3 central face") {
  const auto w = build_square_window(3, 3);
  const auto& center = w.faces[square_face(3, 1, 1)];
  CHECK(center.complete);
  CHECK(center.boundary.size() == 8);
}

TEST_CASE("generator preconditions") {
  CHECK_THROWS_AS(build_square_window(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_square_window(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hexagonal_window(0), std::invalid_argument);
  CHECK_THROWS_AS(build_triangular_window(1), std::invalid_argument);
}

TEST_CASE("hexagonal window structure") {
  const auto w1 = build_hexagonal_window(1);
  CHECK(w1.faces.size() == 7);
  CHECK(w1.faces[0].complete);

  const auto w = build_hexagonal_window(2);
  CHECK(w.faces.size() == 19);
  int complete_vertices = 0;
  for (const auto& v : w.vertices) {
    if (!v.complete) continue;
    ++complete_vertices;
    CHECK(v.faces.size() == 3);
    CHECK(v.edges.size() == 3);
  }
  CHECK(complete_vertices > 0);
  for (const auto& f : w.faces) {
    REQUIRE(f.complete);
    CHECK(f.boundary.size() == 12);
  }
}

TEST_CASE("triangular window structure") {
  const auto w = build_triangular_window(3);
  CHECK(w.faces.size() == 18);
  bool saw_complete_vertex = false;
  for (const auto& v : w.vertices) {
    if (!v.complete) continue;
    saw_complete_vertex = true;
    CHECK(v.faces.size() == 6);
    CHECK(v.edges.size() == 6);
  }
  CHECK(saw_complete_vertex);
  for (const auto& f : w.faces) CHECK(f.boundary.size() == 6);
}

TEST_CASE("generators validate for all sizes up to 10") {
  for (int s = 2; s <= 10; ++s) {
    CAPTURE(s);
    CHECK(validate_tiling(build_square_window(s, s)).ok);
    CHECK(validate_tiling(build_triangular_window(s)).ok);
  }
  for (int r = 1; r <= 10; ++r) {
    CAPTURE(r);
    CHECK(validate_tiling(build_hexagonal_window(r)).ok);
  }
}

TEST_CASE("face vertex and edge counts agree on complete faces") {
  for (const auto& w : {build_square_window(4, 4), build_hexagonal_window(2),
                        build_triangular_window(4)}) {
    for (std::uint32_t f = 0; f < w.faces.size(); ++f) {
      if (!w.faces[f].complete) continue;
      CHECK(face_vertices(w, f).size() == face_edges(w, f).size());
    }
  }
}

TEST_CASE("complete edges sit between their side faces' vertices") {
  for (const auto& w : {build_square_window(4, 4), build_hexagonal_window(2),
                        build_triangular_window(4)}) {
    for (std::uint32_t ei = 0; ei < w.edges.size(); ++ei) {
      const auto& e = w.edges[ei];
      if (!e.complete) continue;
      REQUIRE(e.sides.size() == 2);
      REQUIRE(e.sides[0] != e.sides[1]);
      for (auto f : e.sides) {
        auto vs = face_vertices(w, f);
        std::sort(vs.begin(), vs.end());
        for (auto v : e.endpoints) CHECK(std::binary_search(vs.begin(), vs.end(), v));
      }
    }
  }
}

TEST_CASE("validator catches record mutations") {
  // Swapped cyclic face order at a vertex.
  {
    auto w = build_square_window(3, 3);
    const auto vi = central_vertex(w, 0);
    std::swap(w.vertices[vi].faces[0], w.vertices[vi].faces[1]);
    const auto report = validate_tiling(w);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) found |= v.axiom == "vertex-cyclic-order";
    CHECK(found);
  }
  // Duplicate endpoint on an edge.
  {
    auto w = build_square_window(3, 3);
    std::uint32_t target = 0;
    for (std::uint32_t e = 0; e < w.edges.size(); ++e)
      if (w.edges[e].complete) target = e;
    w.edges[target].endpoints[1] = w.edges[target].endpoints[0];
    const auto report = validate_tiling(w);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) found |= v.axiom == "edge-endpoints";
    CHECK(found);
  }
  // Repeated cell on a face boundary.
  {
    auto w = build_square_window(3, 3);
    auto& boundary = w.faces[square_face(3, 1, 1)].boundary;
    boundary[2] = boundary[0];
    const auto report = validate_tiling(w);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations)
      found |= v.axiom == "face-simple" || v.axiom == "face-edge-endpoints";
    CHECK(found);
  }
  // Vertex listing fewer than three tiles.
  {
    auto w = build_square_window(3, 3);
    const auto vi = central_vertex(w, 0);
    w.vertices[vi].faces.pop_back();
    w.vertices[vi].edges.pop_back();
    const auto report = validate_tiling(w);
    REQUIRE_FALSE(report.ok);
  }
}

TEST_CASE("delta per tiling") {
  const auto sq = build_square_window(3, 3);
  const auto hx = build_hexagonal_window(2);
  const auto tr = build_triangular_window(3);
  CHECK(delta(sq) == 4);
  CHECK(delta(hx) == 3);
  CHECK(delta(tr) == 6);
}

static const char* kSingleTileDoc = R"(# one square tile
[vertices]
a edges=ab,da faces=F complete=0 coords=0,0
b edges=ab,bc faces=F complete=0 coords=1,0
c edges=bc,cd faces=F complete=0 coords=1,1
d edges=cd,da faces=F complete=0 coords=0,1
[edges]
ab endpoints=a,b sides=F complete=0
bc endpoints=b,c sides=F complete=0
cd endpoints=c,d sides=F complete=0
da endpoints=d,a sides=F complete=0
[faces]
F boundary=a,ab,b,bc,c,cd,d,da complete=1
)";

TEST_CASE("delta requires a complete vertex") {
  std::istringstream in(kSingleTileDoc);
  const auto w = load_tiling(in, "single");
  CHECK_THROWS_AS(delta(w), MarginError);
}

TEST_CASE("star_complete") {
  const auto w = build_square_window(5, 5);
  const auto center = face_ref(square_face(5, 2, 2));
  CHECK(star_complete(w, center, 0));
  CHECK(star_complete(w, center, 2));
  CHECK(star_complete(w, center, 4));
  CHECK_FALSE(star_complete(w, center, 5));  // five hops reach the frame

  const auto rim = w.rim();
  REQUIRE_FALSE(rim.empty());
  CHECK_FALSE(star_complete(w, rim.front(), 0));
  CHECK_THROWS_AS(star_complete(w, face_ref(999), 0), std::invalid_argument);
}

TEST_CASE("load single tile document") {
  std::istringstream in(kSingleTileDoc);
  const auto w = load_tiling(in, "single");
  CHECK(w.cell_count() == 9);
  CHECK(w.faces.size() == 1);
  CHECK(w.faces[0].complete);
  CHECK(w.rim().size() == 8);
  CHECK(validate_tiling(w).ok);
  CHECK(w.find_cell("ab").has_value());
  CHECK(w.cell_name(face_ref(0)) == "F");
}

TEST_CASE("loader rejects dangling references and duplicates") {
  {
    std::istringstream in("[edges]\ne0 endpoints=v0,v1 sides= complete=0\n");
    CHECK_THROWS_AS(load_tiling(in), ParseError);
  }
  {
    std::istringstream in("[vertices]\nv0 edges= faces= complete=0\nv0 edges= faces= complete=0\n");
    CHECK_THROWS_AS(load_tiling(in), ParseError);
  }
  {
    std::istringstream in("v0 edges= faces=\n");
    CHECK_THROWS_AS(load_tiling(in), ParseError);  // cell before section
  }
}

TEST_CASE("loader ignores unknown keys") {
  std::istringstream in(
      "[vertices]\na edges=e faces=F complete=0 color=red\n"
      "b edges=e faces=F complete=0\n"
      "[edges]\ne endpoints=a,b sides=F complete=0 weight=3\n"
      "[faces]\nF boundary=a,e complete=0 label=tile\n");
  const auto w = load_tiling(in);
  CHECK(w.cell_count() == 4);
}

TEST_CASE("validator flags broken windows") {
  // Edge whose two side faces coincide.
  {
    std::istringstream in(
        "[vertices]\na edges=e1,e2,e3 faces=F,F,F complete=0\n"
        "b edges=e1,e2,e3 faces=F,F,F complete=0\n"
        "[edges]\ne1 endpoints=a,b sides=F,F complete=1\n"
        "e2 endpoints=a,b sides=F complete=0\n"
        "e3 endpoints=a,b sides=F complete=0\n"
        "[faces]\nF boundary=a,e1,b,e2 complete=0\n");
    const auto w = load_tiling(in);
    const auto report = validate_tiling(w);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) found |= v.axiom == "edge-sides-distinct";
    CHECK(found);
  }
  // Odd, non-alternating face boundary.
  {
    std::istringstream in(
        "[vertices]\na edges=e complete=0\nb edges=e complete=0\nc edges= complete=0\n"
        "[edges]\ne endpoints=a,b sides=F complete=0\n"
        "[faces]\nF boundary=a,e,b,e,c complete=1\n");
    const auto w = load_tiling(in);
    const auto report = validate_tiling(w);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) found |= v.axiom == "face-alternation";
    CHECK(found);
  }
}

TEST_CASE("save and load round trip is the identity") {
  for (const auto& w : {build_square_window(3, 4), build_hexagonal_window(2),
                        build_triangular_window(3)}) {
    std::ostringstream out;
    save_tiling(out, w);
    std::istringstream in(out.str());
    const auto back = load_tiling(in, "roundtrip");
    REQUIRE(back.vertices.size() == w.vertices.size());
    REQUIRE(back.edges.size() == w.edges.size());
    REQUIRE(back.faces.size() == w.faces.size());
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      CHECK(back.vertices[i].edges == w.vertices[i].edges);
      CHECK(back.vertices[i].faces == w.vertices[i].faces);
      CHECK(back.vertices[i].complete == w.vertices[i].complete);
    }
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      CHECK(back.edges[i].endpoints == w.edges[i].endpoints);
      CHECK(back.edges[i].sides == w.edges[i].sides);
      CHECK(back.edges[i].complete == w.edges[i].complete);
    }
    for (std::size_t i = 0; i < w.faces.size(); ++i) {
      CHECK(back.faces[i].boundary == w.faces[i].boundary);
      CHECK(back.faces[i].complete == w.faces[i].complete);
    }
    CHECK(windows_isomorphic(w, back));
  }
}

TEST_CASE("hex_fig8 fixture loads and matches the built hexagonal window") {
  const auto fixture = load_tiling_file(std::string(TILETOPO_FIXTURE_DIR) + "/hex_fig8.tiling");
  const auto built = build_hexagonal_window(2);
  CHECK(fixture.cell_count() == built.cell_count());
  CHECK(windows_isomorphic(fixture, built));
  // The relabeling is not the identity, so signatures must do real work.
  CHECK(fixture.find_cell("f0") == std::nullopt);
}

TEST_CASE("window signatures distinguish different windows") {
  const auto a = build_square_window(3, 3);
  const auto b = build_square_window(3, 4);
  const auto c = build_hexagonal_window(1);
  CHECK(windows_isomorphic(a, build_square_window(3, 3)));
  CHECK_FALSE(windows_isomorphic(a, b));
  CHECK_FALSE(windows_isomorphic(a, c));
}
