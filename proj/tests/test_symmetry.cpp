#include <doctest.h>

#include <algorithm>
#include <set>

#include "polycell/complex_products.hpp"
#include "polycell/corpus.hpp"
#include "polycell/rng.hpp"
#include "polycell/symmetry.hpp"

using namespace polycell;

namespace {

std::shared_ptr<const MultiGraph> sp(MultiGraph g) { return shared_graph(std::move(g)); }
std::shared_ptr<const Complex> sc(Complex x) { return shared_complex(std::move(x)); }

// Oracle: factorial automorphism count of K_n by full permutation check.
long long brute_graph_autos(const MultiGraph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  long long n = 0;
  do {
    bool ok = true;
    for (int u = 0; u < g.vertex_count() && ok; ++u)
      for (int v = u; v < g.vertex_count() && ok; ++v)
        ok = g.multiplicity(u, v) == g.multiplicity(perm[u], perm[v]);
    if (ok) ++n;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n;
}

}  // namespace

TEST_CASE("graph automorphism counts match the permutation oracle") {
  for (MultiGraph g : {cycle_graph(4), cycle_graph(5), complete_graph(4), path_graph(4),
                       star_graph(4), complete_bipartite_graph(2, 3)}) {
    long long want = brute_graph_autos(g);
    PermGroup grp = graph_automorphism_group(sp(std::move(g)));
    CHECK(grp.order() == want);
  }
}

TEST_CASE("known orders: cycles, cliques, bicliques") {
  CHECK(graph_automorphism_group(sp(cycle_graph(7))).order() == 14);
  CHECK(graph_automorphism_group(sp(complete_graph(4))).order() == 24);
  CHECK(graph_automorphism_group(sp(complete_bipartite_graph(3, 3))).order() == 72);
  CHECK(graph_automorphism_group(sp(complete_bipartite_graph(4, 4))).order() == 1152);
}

TEST_CASE("multigraph automorphisms act on darts") {
  // doubled edge: swapping the parallel edges is a non-identity automorphism
  PermGroup grp = graph_automorphism_group(sp(cycle_graph(2)));
  CHECK(grp.order() == 4);  // vertex swap x edge swap
  // loop: exchanging the two loop darts
  PermGroup lg = graph_automorphism_group(sp(loop_graph()));
  CHECK(lg.order() == 2);
}

TEST_CASE("complex automorphism groups of the fixtures") {
  CHECK(complex_automorphism_group(sc(polygon(3))).order() == 6);
  CHECK(complex_automorphism_group(sc(polygon(6))).order() == 12);
  CHECK(complex_automorphism_group(sc(tetrahedron())).order() == 24);
  CHECK(complex_automorphism_group(sc(cube_surface())).order() == 48);
  CHECK(complex_automorphism_group(sc(one_gon())).order() == 2);
}

TEST_CASE("faces constrain the group: tetrahedron skeleton vs complex") {
  auto x = sc(tetrahedron());
  PermGroup skel = graph_automorphism_group(x->skeleton_ptr());
  PermGroup cx = complex_automorphism_group(x);
  CHECK(skel.order() == 24);
  CHECK(cx.order() == 24);  // every K4 symmetry preserves the face set
  // dropping one face breaks the symmetry
  std::vector<Face> three(x->faces().begin(), x->faces().end() - 1);
  PermGroup broken = complex_automorphism_group(sc(Complex(x->skeleton_ptr(), three)));
  CHECK(broken.order() == 6);  // stabilizer of the missing face
}

TEST_CASE("graph isomorphism finds maps and rejects non-isomorphic pairs") {
  auto c6 = sp(cycle_graph(6));
  // relabeled copy
  GraphData d;
  for (int i : {3, 1, 4, 0, 5, 2}) d.vertices.push_back("w" + std::to_string(i));
  for (int i = 0; i < 6; ++i)
    d.edges.push_back({"f" + std::to_string(i), "w" + std::to_string((i * 5 + 3) % 6),
                       "w" + std::to_string(((i + 1) * 5 + 3) % 6)});
  auto copy = sp(MultiGraph(d));
  auto iso = graph_isomorphism(c6, copy);
  REQUIRE(iso.has_value());
  CHECK(is_graph_homomorphism(*iso));
  CHECK(iso->is_bijective());

  // same degree sequence, different component structure
  GraphData two;
  for (int i = 0; i < 6; ++i) two.vertices.push_back("u" + std::to_string(i));
  for (int i = 0; i < 3; ++i) {
    two.edges.push_back({"a" + std::to_string(i), "u" + std::to_string(i),
                         "u" + std::to_string((i + 1) % 3)});
    two.edges.push_back({"b" + std::to_string(i), "u" + std::to_string(3 + i),
                         "u" + std::to_string(3 + (i + 1) % 3)});
  }
  CHECK(!graph_isomorphism(c6, sp(MultiGraph(two))).has_value());
}

TEST_CASE("complex isomorphism respects faces") {
  auto a = sc(polygon(4));
  auto b = sc(polygon(4));
  CHECK(complex_isomorphism(a, b).has_value());
  // same skeleton, face wrapped differently
  CHECK(!complex_isomorphism(sc(wrapped_polygon(8, 4)), sc(polygon(8))).has_value());
  auto iso = complex_isomorphism(sc(tetrahedron()), sc(tetrahedron()));
  REQUIRE(iso.has_value());
  CHECK(is_complex_homomorphism(*iso));
}

TEST_CASE("permutations compose and invert consistently") {
  auto x = sc(polygon(5));
  PermGroup g = complex_automorphism_group(x);
  CHECK(g.order() == 10);
  for (const Permutation& p : g.elements) {
    CHECK(g.contains(p));
    CHECK(p.after(p.inverse()).is_identity());
    Permutation id = Permutation::identity(
        static_cast<int>(p.vperm.size()), static_cast<int>(p.dperm.size()),
        static_cast<int>(p.fperm.size()));
    CHECK(p.after(id) == p);
  }
}

TEST_CASE("close_generators: pentagon rotation and reflection generate dihedral") {
  auto x = sc(polygon(5));
  PermGroup g = complex_automorphism_group(x);
  // find a rotation of order 5 and one reflection among the elements
  const Permutation* rot = nullptr;
  const Permutation* refl = nullptr;
  for (const Permutation& p : g.elements) {
    if (p.is_identity()) continue;
    // count fixed vertices: rotations fix none, reflections fix one
    int fixed = 0;
    for (std::size_t v = 0; v < p.vperm.size(); ++v)
      if (p.vperm[v] == static_cast<int>(v)) ++fixed;
    if (fixed == 0 && !rot) rot = &p;
    if (fixed == 1 && !refl) refl = &p;
  }
  REQUIRE(rot);
  REQUIRE(refl);
  PermGroup closed = close_generators(5, 10, 1, {*rot, *refl});
  CHECK(closed.order() == 10);
  CHECK(closed.same_group(g));
  PermGroup rotations = close_generators(5, 10, 1, {*rot});
  CHECK(rotations.order() == 5);
  CHECK(rotations.is_subgroup_of(g));
  CHECK(!g.is_subgroup_of(rotations));
}

TEST_CASE("transitivity predicates on standard graphs") {
  CHECK(is_vertex_transitive(sp(cycle_graph(5))));
  CHECK(is_edge_transitive(sp(cycle_graph(5))));
  CHECK(is_arc_transitive(sp(cycle_graph(5))));
  CHECK(!is_vertex_transitive(sp(path_graph(3))));
  CHECK(is_edge_transitive(sp(star_graph(3))));
  CHECK(!is_vertex_transitive(sp(star_graph(3))));
  CHECK(is_vertex_transitive(sp(complete_graph(4))));
  // tensor product of odd cycles keeps arc-transitivity
  GraphProduct p = tensor_product(sp(cycle_graph(3)), sp(cycle_graph(5)));
  CHECK(is_edge_transitive(p.product));
  CHECK(is_arc_transitive(p.product));
}

TEST_CASE("flag transitivity of the corpus fixtures") {
  CHECK(is_flag_transitive(sc(polygon(3))));
  CHECK(is_flag_transitive(sc(polygon(6))));
  CHECK(is_flag_transitive(sc(tetrahedron())));
  CHECK(is_flag_transitive(sc(cube_surface())));
  CHECK(!is_flag_transitive(sc(strip(2, false))));
  CHECK(is_flag_transitive(sc(complete(4))));  // no faces: vacuous
}

TEST_CASE("cartesian subgroup of a square product is generated correctly") {
  auto tri = sc(polygon(3));
  NaryComplexProduct p = nary_complex_tensor_product({tri, tri});
  PermGroup cart = cartesian_subgroup(p);
  CHECK(cart.order() == 72);  // 6 * 6 * 2
  PermGroup full = complex_automorphism_group(p.product);
  CHECK(full.same_group(cart));
}

TEST_CASE("cartesian subgroup without the swap when factors differ") {
  auto tri = sc(polygon(3));
  auto pent = sc(polygon(5));
  NaryComplexProduct p = nary_complex_tensor_product({tri, pent});
  PermGroup cart = cartesian_subgroup(p);
  CHECK(cart.order() == 60);  // 6 * 10, no factor swap
}

TEST_CASE("restricted cartesian subgroup acts on a component") {
  auto c6 = sp(cycle_graph(6));
  NaryGraphProduct p = nary_tensor_product({c6, c6});
  ComponentSplit split = components(*p.product);
  REQUIRE(split.vertex_sets.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    PermGroup cart = cartesian_subgroup(p, &split.vertex_sets[i]);
    PermGroup full = graph_automorphism_group(sp(split.subgraphs[i]));
    CHECK(cart.order() == 144);
    CHECK(cart.same_group(full));
  }
}

TEST_CASE("vertex actions and cycle notation") {
  auto x = sc(polygon(3));
  PermGroup g = complex_automorphism_group(x);
  for (const Permutation& p : g.elements) {
    if (p.is_identity())
      CHECK(cycle_notation(p, x->skeleton().vertex_ids(), dart_labels(x->skeleton()),
                           face_id_labels(*x)) == "id");
  }
  PermGroup va = vertex_action(g);
  CHECK(va.order() == 6);  // faithful on vertices for the triangle
  // the loop's only symmetry swaps darts, so the vertex action collapses
  PermGroup lva = vertex_action(graph_automorphism_group(sp(loop_graph())));
  CHECK(lva.order() == 1);
}

TEST_CASE("budget exhaustion raises instead of silently truncating") {
  auto big = sp(complete_bipartite_graph(4, 4));
  CHECK_THROWS_AS(enumerate_graph_automorphisms(big, 3), Error);
  bool budget_code = false;
  try {
    enumerate_graph_automorphisms(big, 3);
  } catch (const Error& e) {
    budget_code = e.code() == Errc::Budget || e.code() == Errc::TooLarge;
  }
  CHECK(budget_code);
}

TEST_CASE("isomorphism is invariant under relabeling (randomized)") {
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    MultiGraph g = random_multigraph(rng, 5, 6);
    // shuffle ids
    GraphData d = g.data();
    std::vector<int> vp(d.vertices.size());
    std::iota(vp.begin(), vp.end(), 0);
    for (int i = static_cast<int>(vp.size()) - 1; i > 0; --i)
      std::swap(vp[i], vp[rng.below(i + 1)]);
    GraphData shuffled;
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
      shuffled.vertices.push_back("n" + std::to_string(vp[i]));
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      int a = vp[MultiGraph(d).vertex_index(d.edges[e].end0)];
      int b = vp[MultiGraph(d).vertex_index(d.edges[e].end1)];
      shuffled.edges.push_back(
          {"m" + std::to_string(e), "n" + std::to_string(a), "n" + std::to_string(b)});
    }
    auto iso = graph_isomorphism(sp(g), sp(MultiGraph(shuffled)));
    REQUIRE(iso.has_value());
    CHECK(is_graph_homomorphism(*iso));
    CHECK(iso->is_bijective());
  }
}
