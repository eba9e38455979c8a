#include <doctest.h>

#include <algorithm>
#include <set>

#include "polycell/complex.hpp"
#include "polycell/corpus.hpp"

using namespace polycell;

namespace {

ComplexData dunce_data() {
  ComplexData d;
  d.skeleton.vertices = {"v"};
  d.skeleton.edges = {{"e", "v", "v"}};
  d.faces.push_back({"f", {{"e", true}, {"e", true}, {"e", false}}});
  return d;
}

}  // namespace

TEST_CASE("construction validates face walks") {
  ComplexData d = dunce_data();
  CHECK(!validate(d));

  ComplexData unknown = d;
  unknown.faces[0].steps[1].first = "zz";
  auto bad = validate(unknown);
  REQUIRE(bad.has_value());
  CHECK(bad->code == Errc::UnknownEdge);
  CHECK_THROWS_AS(Complex{unknown}, Error);

  ComplexData open = d;
  open.skeleton.vertices.push_back("w");
  open.skeleton.edges.push_back({"g", "v", "w"});
  open.faces[0].steps.push_back({"g", true});  // walk no longer closes
  auto bad2 = validate(open);
  REQUIRE(bad2.has_value());
  CHECK(bad2->code == Errc::InvalidWalk);

  ComplexData empty = d;
  empty.faces[0].steps.clear();
  auto bad3 = validate(empty);
  REQUIRE(bad3.has_value());
  CHECK(bad3->code == Errc::EmptyWalk);

  ComplexData dup = d;
  dup.faces.push_back(dup.faces[0]);
  auto bad4 = validate(dup);
  REQUIRE(bad4.has_value());
  CHECK(bad4->code == Errc::DuplicateId);
}

TEST_CASE("faces are sorted by id regardless of input order") {
  ComplexData d;
  d.skeleton.vertices = {"a", "b", "c"};
  d.skeleton.edges = {{"e0", "a", "b"}, {"e1", "b", "c"}, {"e2", "c", "a"}};
  std::vector<std::pair<std::string, bool>> tri = {{"e0", true}, {"e1", true}, {"e2", true}};
  d.faces.push_back({"zz", tri});
  d.faces.push_back({"aa", tri});
  Complex x(d);
  CHECK(x.face(0).id == "aa");
  CHECK(x.face(1).id == "zz");
  CHECK(x.face_index("zz") == 1);
  CHECK(x.face_index("missing") == -1);
  CHECK_THROWS_AS(x.require_face("missing"), Error);
}

TEST_CASE("dunce hat has six flags on one corner-rich vertex") {
  Complex x(dunce_data());
  CHECK(x.skeleton().vertex_count() == 1);
  CHECK(x.face_count() == 1);
  std::vector<Flag> fl = flags(x);
  CHECK(fl.size() == 6);
  // face of length 3: corners at positions 0,1,2, each with two sides
  std::set<Flag> distinct(fl.begin(), fl.end());
  CHECK(distinct.size() == 6);
  std::vector<int> off = flag_offsets(x);  // per-face offsets plus total
  REQUIRE(off.size() == 2);
  CHECK(off[0] == 0);
  CHECK(off[1] == 6);
}

TEST_CASE("corner vertices and darts follow the walk") {
  Complex x = polygon(4);
  const Face& f = x.face(0);
  for (int j = 0; j < 4; ++j) {
    Corner c{0, j};
    CHECK(corner_vertex(x, c) == step_source(x.skeleton(), f.boundary.steps[j]));
    // side 1 is the dart the walk enters at position j
    int d = corner_dart(x, c, 1);
    CHECK(x.skeleton().dart_vertex(d) == corner_vertex(x, c));
  }
  CHECK_THROWS_AS(corner_vertex(x, Corner{0, 4}), Error);
  CHECK_THROWS_AS(corner_vertex(x, Corner{0, -1}), Error);
}

TEST_CASE("link of a tetrahedron vertex is a triangle") {
  Complex x = tetrahedron();
  for (int v = 0; v < 4; ++v) {
    LinkGraph l = link(x, v);
    CHECK(l.graph.vertex_count() == 3);
    CHECK(l.graph.edge_count() == 3);
    CHECK(is_connected(l.graph));
    for (int u = 0; u < 3; ++u) CHECK(l.graph.degree(u) == 2);
    // labels point back at real darts and corners
    for (int u = 0; u < 3; ++u)
      CHECK(x.skeleton().dart_vertex(l.dart_of_vertex[u]) == v);
    for (std::size_t e = 0; e < l.corner_of_edge.size(); ++e)
      CHECK(corner_vertex(x, l.corner_of_edge[e]) == v);
  }
}

TEST_CASE("link of the dunce hat vertex sees both loop darts") {
  Complex x(dunce_data());
  LinkGraph l = link(x, 0);
  CHECK(l.graph.vertex_count() == 2);  // the two ends of the loop
  CHECK(l.graph.edge_count() == 3);    // one per corner
  int loops = 0;
  for (int e = 0; e < 3; ++e) loops += l.graph.is_loop(e) ? 1 : 0;
  CHECK(loops == 2);  // corners e+/e+ and e-/e+ sit on one dart each
}

TEST_CASE("euler characteristic of the standard fixtures") {
  CHECK(euler_characteristic(polygon(3)) == 1);
  CHECK(euler_characteristic(polygon(8)) == 1);
  CHECK(euler_characteristic(tetrahedron()) == 2);
  CHECK(euler_characteristic(cube_surface()) == 2);
  CHECK(euler_characteristic(hex_torus(3, 4)) == 0);
  CHECK(euler_characteristic(Complex(dunce_data())) == 1);
  CHECK(euler_characteristic(strip(3, true)) == 0);   // Mobius band
  CHECK(euler_characteristic(strip(3, false)) == 0);  // annulus
}

TEST_CASE("first homology: spheres, torus, dunce hat, torsion") {
  CHECK(homology_h1(tetrahedron()) == Homology{0, {}});
  CHECK(homology_h1(cube_surface()) == Homology{0, {}});
  CHECK(homology_h1(Complex(dunce_data())) == Homology{0, {}});
  CHECK(homology_h1(hex_torus(3, 4)) == Homology{2, {}});
  CHECK(homology_h1(strip(3, true)) == Homology{1, {}});
  // a 15-gon wrapped five times around a triangle kills 5x the generator
  CHECK(homology_h1(wrapped_polygon(15, 3)) == Homology{0, {5}});
  CHECK(homology_h1(wrapped_polygon(6, 2)) == Homology{0, {3}});
}

TEST_CASE("necessary simple-connectivity conditions") {
  CHECK(simply_connected_necessary(tetrahedron()) == SimplyConnectedVerdict::Passes);
  CHECK(simply_connected_necessary(polygon(5)) == SimplyConnectedVerdict::Passes);
  CHECK(simply_connected_necessary(hex_torus(3, 4)) != SimplyConnectedVerdict::Passes);
  CHECK(simply_connected_necessary(strip(3, false)) != SimplyConnectedVerdict::Passes);
}

TEST_CASE("polygonal test accepts embeddings and rejects self-meetings") {
  CHECK(is_polygonal(tetrahedron()));
  CHECK(is_polygonal(cube_surface()));
  CHECK(is_polygonal(polygon(5)));
  CHECK(!is_polygonal(Complex(dunce_data())));     // face meets itself along e
  CHECK(!is_polygonal(wrapped_polygon(15, 3)));    // attaching map not injective
  CHECK(!is_polygonal(one_gon()));
}

TEST_CASE("simple complexes: duplicates and wrapping are rejected") {
  CHECK(is_simple_complex(tetrahedron()));
  CHECK(is_simple_complex(polygon(3)));
  CHECK(!is_simple_complex(wrapped_polygon(15, 3)));  // multiply wrapped
  CHECK(!is_simple_complex(complete(4)));             // no faces at all

  // duplicate boundary cycle: the same triangle attached twice
  ComplexData d;
  d.skeleton.vertices = {"a", "b", "c"};
  d.skeleton.edges = {{"e0", "a", "b"}, {"e1", "b", "c"}, {"e2", "c", "a"}};
  d.faces.push_back({"f", {{"e0", true}, {"e1", true}, {"e2", true}}});
  d.faces.push_back({"g", {{"e1", true}, {"e2", true}, {"e0", true}}});
  CHECK(!is_simple_complex(Complex(d)));
  // with reversal ignored, a reflected copy still counts as a duplicate
  ComplexData r = d;
  r.faces[1] = {"g", {{"e2", false}, {"e1", false}, {"e0", false}}};
  CHECK(!is_simple_complex(Complex(r), true));
  CHECK(is_simple_complex(Complex(r), false));
}

TEST_CASE("elementary and ordinary classifications on the corpus") {
  CHECK(is_elementary(polygon(6)));
  CHECK(is_ordinary(polygon(6)));
  CHECK(!is_elementary(polygon(5)));  // odd length
  CHECK(is_elementary(necklace(4, 6)));
  CHECK(is_ordinary(necklace(4, 6)));
  CHECK(!is_ordinary(necklace(2, 6)));  // two corners of a bead meet the same face
  CHECK(is_ordinary(necklace(3, 6)));
  CHECK(is_elementary(hex_torus(3, 4)));
  CHECK(is_ordinary(hex_torus(3, 4)));
  CHECK(!is_elementary(hex_torus(1, 2)));  // antipodal corners collide
  CHECK(is_ordinary(strip(3, false)));
  CHECK(!is_ordinary(strip(2, false)));
}

TEST_CASE("corners_at_vertex covers every corner exactly once") {
  for (Complex x : {tetrahedron(), necklace(3, 6), strip(3, true)}) {
    std::size_t total = 0;
    for (int v = 0; v < x.skeleton().vertex_count(); ++v) {
      for (const Corner& c : corners_at_vertex(x, v)) CHECK(corner_vertex(x, c) == v);
      total += corners_at_vertex(x, v).size();
    }
    std::size_t walk_positions = 0;
    for (const Face& f : x.faces()) walk_positions += f.boundary.length();
    CHECK(total == walk_positions);
  }
}

TEST_CASE("component complexes keep ids and split faces with their vertices") {
  // two disjoint triangles, one with a face
  ComplexData d;
  d.skeleton.vertices = {"a", "b", "c", "x", "y", "z"};
  d.skeleton.edges = {{"e0", "a", "b"}, {"e1", "b", "c"}, {"e2", "c", "a"},
                      {"f0", "x", "y"}, {"f1", "y", "z"}, {"f2", "z", "x"}};
  d.faces.push_back({"left", {{"e0", true}, {"e1", true}, {"e2", true}}});
  Complex x(d);
  Complex left = component_complex(x, x.skeleton().vertex_index("a"));
  Complex right = component_complex(x, x.skeleton().vertex_index("y"));
  CHECK(left.skeleton().vertex_count() == 3);
  CHECK(left.face_count() == 1);
  CHECK(left.skeleton().vertex_index("a") >= 0);
  CHECK(right.face_count() == 0);
  CHECK(right.skeleton().vertex_index("z") >= 0);
  CHECK(complexes_equal(left, component_complex(x, x.skeleton().vertex_index("b"))));
  CHECK(!complexes_equal(left, right));
}

TEST_CASE("data round-trips through the constructor") {
  for (Complex x : {tetrahedron(), necklace(3, 6), wrapped_polygon(15, 3)}) {
    Complex y(x.data());
    CHECK(complexes_equal(x, y));
  }
}
