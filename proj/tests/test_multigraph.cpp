#include <doctest.h>

#include <algorithm>
#include <set>

#include "polycell/multigraph.hpp"
#include "polycell/rng.hpp"

using namespace polycell;

namespace {

MultiGraph make(std::vector<std::string> vs,
                std::vector<std::array<std::string, 3>> es) {
  GraphData d;
  d.vertices = std::move(vs);
  for (auto& e : es) d.edges.push_back({e[0], e[1], e[2]});
  return MultiGraph(d);
}

MultiGraph cycle_graph(int n) {
  GraphData d;
  for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    d.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string((i + 1) % n)});
  return MultiGraph(d);
}

MultiGraph complete_graph(int n) {
  GraphData d;
  for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      d.edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j),
                         "v" + std::to_string(i), "v" + std::to_string(j)});
  return MultiGraph(d);
}

// Oracle: smallest period of the step sequence by direct check of every prefix.
int brute_force_period(const Walk& w) {
  const int n = w.length();
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (!(w.steps[i] == w.steps[i % p])) ok = false;
    if (ok) return p;
  }
  return n;
}

// Oracle: rotation (+ optional reversal) equivalence by exhaustive comparison.
bool walks_equivalent(const MultiGraph& g, const Walk& a, const Walk& b, bool reversal) {
  if (a.length() != b.length()) return false;
  const int n = a.length();
  for (int k = 0; k < n; ++k)
    if (rotate_walk(g, a, k).steps == b.steps) return true;
  if (reversal) {
    Walk ra = reverse_walk(g, a);
    for (int k = 0; k < n; ++k)
      if (rotate_walk(g, ra, k).steps == b.steps) return true;
  }
  return false;
}

Walk random_closed_walk(const MultiGraph& g, Rng& rng, int max_len) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int start = static_cast<int>(rng.below(g.vertex_count()));
    if (g.degree(start) == 0) continue;
    Walk w;
    w.start = start;
    int at = start;
    for (int i = 0; i < max_len; ++i) {
      const auto& inc = g.incident_darts(at);
      auto [e, side] = inc[rng.below(inc.size())];
      w.steps.push_back({e, side == 0});
      at = g.edge(e).ends[side == 0 ? 1 : 0];
      if (at == start && rng.coin()) break;
    }
    if (at == start && !w.steps.empty()) return w;
  }
  return Walk{0, {}};
}

}  // namespace

TEST_CASE("validation reports the first violation") {
  GraphData ok;
  ok.vertices = {"a", "b"};
  ok.edges = {{"e", "a", "b"}};
  CHECK(!validate(ok));

  GraphData dangling = ok;
  dangling.edges.push_back({"f", "a", "zz"});
  auto bad = validate(dangling);
  REQUIRE(bad.has_value());
  CHECK(bad->code == Errc::DanglingEdge);

  GraphData dup = ok;
  dup.vertices.push_back("a");
  auto bad2 = validate(dup);
  REQUIRE(bad2.has_value());
  CHECK(bad2->code == Errc::DuplicateId);

  GraphData dupe = ok;
  dupe.edges.push_back({"e", "b", "a"});
  auto bad3 = validate(dupe);
  REQUIRE(bad3.has_value());
  CHECK(bad3->code == Errc::DuplicateId);

  CHECK_THROWS_AS(MultiGraph{dangling}, Error);
}

TEST_CASE("canonical ordering is independent of input order") {
  MultiGraph g1 = make({"b", "a", "c"}, {{"z", "a", "b"}, {"y", "b", "c"}});
  MultiGraph g2 = make({"c", "b", "a"}, {{"y", "b", "c"}, {"z", "a", "b"}});
  CHECK(g1.vertex_ids() == g2.vertex_ids());
  CHECK(g1.edge(0).id == "y");
  CHECK(g1.edge(1).id == "z");
  CHECK(g2.edge(0).ends == g1.edge(0).ends);
}

TEST_CASE("degrees: loops contribute two darts and sums match") {
  MultiGraph g = make({"u", "v"}, {{"l", "u", "u"}, {"e", "u", "v"}, {"f", "u", "v"}});
  CHECK(g.degree(g.require_vertex("u")) == 4);
  CHECK(g.degree(g.require_vertex("v")) == 2);
  int total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
  CHECK(total == 2 * g.edge_count());
  CHECK(g.multiplicity(g.require_vertex("u"), g.require_vertex("v")) == 2);
  CHECK(g.multiplicity(g.require_vertex("u"), g.require_vertex("u")) == 1);
}

TEST_CASE("degree sum equals twice the edge count on random multigraphs") {
  Rng rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    int nv = 1 + static_cast<int>(rng.below(6));
    int ne = static_cast<int>(rng.below(9));
    GraphData d;
    for (int i = 0; i < nv; ++i) d.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < ne; ++i)
      d.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(rng.below(nv)),
                         "v" + std::to_string(rng.below(nv))});
    MultiGraph g(d);
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("components and connectivity") {
  MultiGraph g = make({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "c"}});
  auto split = components(g);
  CHECK(split.vertex_sets.size() == 3);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle_graph(5)));
  // induced subgraphs keep ids
  bool found_loop_part = false;
  for (const auto& sub : split.subgraphs)
    if (sub.vertex_count() == 1 && sub.edge_count() == 1) {
      CHECK(sub.vertex_id(0) == "c");
      found_loop_part = true;
    }
  CHECK(found_loop_part);
}

TEST_CASE("bipartiteness: even cycles yes, odd cycles and loops no") {
  CHECK(is_bipartite(cycle_graph(4)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK_FALSE(is_bipartite(make({"v"}, {{"l", "v", "v"}})));
  MultiGraph two_parallel = make({"a", "b"}, {{"e", "a", "b"}, {"f", "a", "b"}});
  CHECK(is_bipartite(two_parallel));  // a 2-cycle is even
}

TEST_CASE("r-thinness ignores multiplicity; loops are self-neighbours") {
  CHECK(is_r_thin(complete_graph(4)));
  CHECK_FALSE(is_r_thin(cycle_graph(4)));  // opposite vertices share both neighbours
  // doubling an edge must not change neighbour sets
  MultiGraph doubled = make({"a", "b", "c"},
                            {{"e", "a", "b"}, {"e2", "a", "b"}, {"f", "b", "c"}});
  auto sets = neighbor_sets(doubled);
  CHECK(sets[doubled.require_vertex("a")] == std::vector<int>{doubled.require_vertex("b")});
  // a loop makes the vertex its own neighbour
  MultiGraph loopy = make({"a", "b"}, {{"l", "a", "a"}, {"e", "a", "b"}});
  auto sets2 = neighbor_sets(loopy);
  std::vector<int> expect{loopy.require_vertex("a"), loopy.require_vertex("b")};
  CHECK(sets2[loopy.require_vertex("a")] == expect);
}

TEST_CASE("class carriers: s0 and simple") {
  CHECK(in_s0(make({"v"}, {{"l", "v", "v"}})));
  CHECK_FALSE(is_simple(make({"v"}, {{"l", "v", "v"}})));
  CHECK_FALSE(in_s0(make({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}})));
  CHECK(is_simple(complete_graph(3)));
}

TEST_CASE("walk mechanics: traversal directions and chaining") {
  MultiGraph g = cycle_graph(3);
  Walk w;
  w.start = g.require_vertex("v0");
  w.steps = {{g.require_edge("e0"), true}, {g.require_edge("e1"), true}, {g.require_edge("e2"), true}};
  CHECK(walk_closed(g, w));
  auto verts = walk_vertices(g, w);
  CHECK(verts == std::vector<int>{g.require_vertex("v0"), g.require_vertex("v1"),
                                  g.require_vertex("v2"), g.require_vertex("v0")});

  Walk bad = w;
  std::swap(bad.steps[0], bad.steps[1]);
  CHECK_FALSE(walk_valid(g, bad));

  Walk rev = reverse_walk(g, w);
  CHECK(walk_closed(g, rev));
  CHECK(rev.steps[0].edge == g.require_edge("e2"));
  CHECK_FALSE(rev.steps[0].forward);

  Walk rot = rotate_walk(g, w, 1);
  CHECK(rot.start == g.require_vertex("v1"));
  CHECK(walk_closed(g, rot));
}

TEST_CASE("reduce_closed_walk finds the primitive cycle") {
  MultiGraph g = cycle_graph(3);
  Walk once;
  once.start = 0;
  once.start = g.require_vertex("v0");
  once.steps = {{0, true}, {1, true}, {2, true}};
  Walk five = repeat_walk(g, once, 5);
  auto red = reduce_closed_walk(g, five);
  CHECK(red.multiplicity == 5);
  CHECK(red.primitive.steps == once.steps);
  CHECK(brute_force_period(five) == 3);

  auto red1 = reduce_closed_walk(g, once);
  CHECK(red1.multiplicity == 1);

  CHECK_THROWS_AS(reduce_closed_walk(g, Walk{0, {}}), Error);
}

TEST_CASE("reduction matches the brute-force period on random walks") {
  MultiGraph g = make({"a", "b"}, {{"e", "a", "b"}, {"f", "a", "b"}, {"l", "a", "a"}});
  Rng rng(777);
  for (int trial = 0; trial < 80; ++trial) {
    Walk w = random_closed_walk(g, rng, 8);
    if (w.steps.empty()) continue;
    for (int times = 1; times <= 3; ++times) {
      Walk rep = repeat_walk(g, w, times);
      auto red = reduce_closed_walk(g, rep);
      CHECK(red.primitive.length() == brute_force_period(rep));
      CHECK(red.multiplicity * red.primitive.length() == rep.length());
    }
  }
}

TEST_CASE("cycle keys agree with exhaustive rotation/reversal equivalence") {
  MultiGraph g = make({"a", "b"}, {{"e", "a", "b"}, {"f", "a", "b"}, {"l", "a", "a"}});
  Rng rng(4242);
  std::vector<Walk> walks;
  for (int i = 0; i < 40; ++i) {
    Walk w = random_closed_walk(g, rng, 6);
    if (!w.steps.empty()) walks.push_back(w);
  }
  for (const Walk& a : walks)
    for (const Walk& b : walks) {
      for (bool reversal : {true, false}) {
        bool same_key = canonical_cycle_key(g, a, reversal) == canonical_cycle_key(g, b, reversal);
        CHECK(same_key == walks_equivalent(g, a, b, reversal));
      }
    }
}

TEST_CASE("cycle keys: reversal flag distinguishes a chiral walk") {
  MultiGraph g = cycle_graph(3);
  Walk w;
  w.start = g.require_vertex("v0");
  w.steps = {{0, true}, {1, true}, {2, true}};
  Walk r = reverse_walk(g, w);
  CHECK(canonical_cycle_key(g, w, true) == canonical_cycle_key(g, r, true));
  CHECK(canonical_cycle_key(g, w, false) != canonical_cycle_key(g, r, false));
}

TEST_CASE("shortest path distances") {
  MultiGraph g = cycle_graph(6);
  CHECK(shortest_path_distance(g, g.require_vertex("v0"), g.require_vertex("v3")) == 3);
  CHECK(shortest_path_distance(g, 0, 0) == 0);
  MultiGraph two = make({"a", "b"}, {});
  CHECK(shortest_path_distance(two, 0, 1) == -1);
  CHECK_THROWS_AS(shortest_path_distance(two, 0, 7), Error);
}

TEST_CASE("disjoint union keeps both sides intact") {
  MultiGraph g = disjoint_union(cycle_graph(3), cycle_graph(4), "L.", "R.");
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 7);
  CHECK(components(g).vertex_sets.size() == 2);
}
