#include "polycell/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace polycell {

namespace {

std::string num(int i) { return std::to_string(i); }

void require_positive(int n, const char* what) {
  if (n < 1) raise(Errc::BadParameter, std::string(what) + " must be positive");
}

}  // namespace

MultiGraph cycle_graph(int n) {
  require_positive(n, "cycle length");
  GraphData d;
  for (int i = 0; i < n; ++i) d.vertices.push_back(num(i));
  for (int i = 0; i < n; ++i) d.edges.push_back({"e" + num(i), num(i), num((i + 1) % n)});
  return MultiGraph(d);
}

MultiGraph complete_graph(int n) {
  require_positive(n, "vertex count");
  GraphData d;
  for (int i = 0; i < n; ++i) d.vertices.push_back(num(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.edges.push_back({num(i) + "-" + num(j), num(i), num(j)});
  return MultiGraph(d);
}

MultiGraph path_graph(int n) {
  require_positive(n, "vertex count");
  GraphData d;
  for (int i = 0; i < n; ++i) d.vertices.push_back(num(i));
  for (int i = 0; i + 1 < n; ++i) d.edges.push_back({"e" + num(i), num(i), num(i + 1)});
  return MultiGraph(d);
}

MultiGraph star_graph(int leaves) {
  if (leaves < 0) raise(Errc::BadParameter, "leaf count must be non-negative");
  GraphData d;
  d.vertices.push_back("c");
  for (int i = 0; i < leaves; ++i) {
    d.vertices.push_back("l" + num(i));
    d.edges.push_back({"e" + num(i), "c", "l" + num(i)});
  }
  return MultiGraph(d);
}

MultiGraph complete_bipartite_graph(int a, int b) {
  require_positive(a, "part size");
  require_positive(b, "part size");
  GraphData d;
  for (int i = 0; i < a; ++i) d.vertices.push_back("a" + num(i));
  for (int j = 0; j < b; ++j) d.vertices.push_back("b" + num(j));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      d.edges.push_back({"a" + num(i) + "b" + num(j), "a" + num(i), "b" + num(j)});
  return MultiGraph(d);
}

MultiGraph loop_graph() {
  GraphData d;
  d.vertices.push_back("v");
  d.edges.push_back({"l", "v", "v"});
  return MultiGraph(d);
}

Complex polygon(int n) {
  require_positive(n, "polygon length");
  ComplexData d;
  d.skeleton = cycle_graph(n).data();
  ComplexData::FaceSpec f;
  f.id = "f";
  for (int i = 0; i < n; ++i) f.steps.emplace_back("e" + num(i), true);
  d.faces.push_back(std::move(f));
  return Complex(d);
}

Complex one_gon() { return polygon(1); }

Complex wrapped_polygon(int total, int core) {
  require_positive(total, "total length");
  require_positive(core, "core length");
  if (total % core != 0) raise(Errc::BadParameter, "core length must divide total length");
  ComplexData d;
  d.skeleton = cycle_graph(core).data();
  ComplexData::FaceSpec f;
  f.id = "f";
  for (int i = 0; i < total; ++i) f.steps.emplace_back("e" + num(i % core), true);
  d.faces.push_back(std::move(f));
  return Complex(d);
}

Complex cycle(int n) { return Complex(cycle_graph(n), {}); }

Complex complete(int n) { return Complex(complete_graph(n), {}); }

Complex dunce_hat() {
  ComplexData d;
  d.skeleton.vertices = {"v"};
  d.skeleton.edges = {{"e", "v", "v"}};
  d.faces.push_back({"f", {{"e", true}, {"e", true}, {"e", false}}});
  return Complex(d);
}

Complex tetrahedron() {
  ComplexData d;
  d.skeleton.vertices = {"1", "2", "3", "4"};
  d.skeleton.edges = {{"12", "1", "2"}, {"13", "1", "3"}, {"14", "1", "4"},
                      {"23", "2", "3"}, {"24", "2", "4"}, {"34", "3", "4"}};
  d.faces.push_back({"f123", {{"12", true}, {"23", true}, {"13", false}}});
  d.faces.push_back({"f124", {{"12", true}, {"24", true}, {"14", false}}});
  d.faces.push_back({"f134", {{"13", true}, {"34", true}, {"14", false}}});
  d.faces.push_back({"f234", {{"23", true}, {"34", true}, {"24", false}}});
  return Complex(d);
}

Complex cube_surface() {
  ComplexData d;
  auto name = [](int mask) {
    std::string s(3, '0');
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) s[b] = '1';
    return s;
  };
  for (int m = 0; m < 8; ++m) d.skeleton.vertices.push_back(name(m));
  for (int m = 0; m < 8; ++m)
    for (int b = 0; b < 3; ++b)
      if (!(m & (1 << b)))
        d.skeleton.edges.push_back({name(m) + "-" + name(m | (1 << b)), name(m), name(m | (1 << b))});
  // One square per fixed coordinate/value; corners in gray-code order.
  const int gray[4] = {0, 1, 3, 2};
  for (int axis = 0; axis < 3; ++axis) {
    int lo = (axis + 1) % 3, hi = (axis + 2) % 3;
    for (int val = 0; val < 2; ++val) {
      ComplexData::FaceSpec f;
      f.id = std::string("q") + char('x' + axis) + num(val);
      for (int k = 0; k < 4; ++k) {
        int a = gray[k], b = gray[(k + 1) % 4];
        int ma = (val << axis) | (((a >> 0) & 1) << lo) | (((a >> 1) & 1) << hi);
        int mb = (val << axis) | (((b >> 0) & 1) << lo) | (((b >> 1) & 1) << hi);
        bool fwd = ma < mb;
        int u = std::min(ma, mb), w = std::max(ma, mb);
        f.steps.emplace_back(name(u) + "-" + name(w), fwd);
      }
      d.faces.push_back(std::move(f));
    }
  }
  return Complex(d);
}

Complex strip(int squares, bool twisted) {
  require_positive(squares, "square count");
  const int k = squares;
  ComplexData d;
  for (int i = 0; i < k; ++i) {
    d.skeleton.vertices.push_back("a" + num(i));
    d.skeleton.vertices.push_back("b" + num(i));
  }
  auto a = [&](int i) { return "a" + num(((i % k) + k) % k); };
  auto b = [&](int i) { return "b" + num(((i % k) + k) % k); };
  for (int i = 0; i < k; ++i) {
    d.skeleton.edges.push_back({"r" + num(i), a(i), b(i)});
    bool last = (i == k - 1);
    // Top edge runs a_i -> a_{i+1}; the twisted seam crosses over to b_0.
    d.skeleton.edges.push_back({"t" + num(i), a(i), (last && twisted) ? b(0) : a(i + 1)});
    d.skeleton.edges.push_back({"u" + num(i), b(i), (last && twisted) ? a(0) : b(i + 1)});
  }
  for (int i = 0; i < k; ++i) {
    bool last = (i == k - 1);
    ComplexData::FaceSpec f;
    f.id = "s" + num(i);
    if (last && twisted) {
      // a_i -t-> b_0 -r0^- -> a_0 -u^- -> b_i -r^- -> a_i
      f.steps = {{"t" + num(i), true}, {"r0", false}, {"u" + num(i), false}, {"r" + num(i), false}};
    } else {
      f.steps = {{"t" + num(i), true},
                 {"r" + num((i + 1) % k), true},
                 {"u" + num(i), false},
                 {"r" + num(i), false}};
    }
    d.faces.push_back(std::move(f));
  }
  return Complex(d);
}

Complex necklace(int beads, int face_len) {
  require_positive(beads, "bead count");
  if (face_len < 2 || face_len % 2 != 0) raise(Errc::BadParameter, "face length must be even and >= 2");
  const int n = face_len / 2;
  ComplexData d;
  for (int i = 0; i < beads; ++i) {
    d.skeleton.vertices.push_back("p" + num(i));
    for (int j = 1; j < n; ++j) {
      d.skeleton.vertices.push_back("t" + num(i) + "_" + num(j));
      d.skeleton.vertices.push_back("u" + num(i) + "_" + num(j));
    }
  }
  auto p = [&](int i) { return "p" + num(i % beads); };
  for (int i = 0; i < beads; ++i) {
    auto t = [&](int j) { return "t" + num(i) + "_" + num(j); };
    auto u = [&](int j) { return "u" + num(i) + "_" + num(j); };
    for (int j = 0; j < n; ++j) {
      std::string from = (j == 0) ? p(i) : t(j);
      std::string to = (j == n - 1) ? p(i + 1) : t(j + 1);
      d.skeleton.edges.push_back({"et" + num(i) + "_" + num(j), from, to});
    }
    for (int j = 0; j < n; ++j) {
      std::string from = (j == 0) ? p(i + 1) : u(j);
      std::string to = (j == n - 1) ? p(i) : u(j + 1);
      d.skeleton.edges.push_back({"eu" + num(i) + "_" + num(j), from, to});
    }
    ComplexData::FaceSpec f;
    f.id = "f" + num(i);
    for (int j = 0; j < n; ++j) f.steps.emplace_back("et" + num(i) + "_" + num(j), true);
    for (int j = 0; j < n; ++j) f.steps.emplace_back("eu" + num(i) + "_" + num(j), true);
    d.faces.push_back(std::move(f));
  }
  return Complex(d);
}

Complex hex_torus(int a, int b) {
  require_positive(a, "column count");
  if (b < 2 || b % 2 != 0) raise(Errc::BadParameter, "row count must be even and >= 2");
  const int w = 2 * a;
  ComplexData d;
  auto v = [&](int i, int j) { return num(((i % w) + w) % w) + "," + num(((j % b) + b) % b); };
  auto h = [&](int i, int j) { return "h" + v(i, j); };
  auto ve = [&](int i, int j) { return "v" + v(i, j); };
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < w; ++i) d.skeleton.vertices.push_back(v(i, j));
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < w; ++i) {
      d.skeleton.edges.push_back({h(i, j), v(i, j), v(i + 1, j)});
      if (i % 2 == j % 2) d.skeleton.edges.push_back({ve(i, j), v(i, j), v(i, j + 1)});
    }
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < w; ++i) {
      if (i % 2 != j % 2) continue;
      ComplexData::FaceSpec f;
      f.id = "F" + v(i, j);
      f.steps = {{h(i, j), true},      {h(i + 1, j), true},  {ve((i + 2) % w, j), true},
                 {h(i + 1, j + 1), false}, {h(i, j + 1), false}, {ve(i, j), false}};
      d.faces.push_back(std::move(f));
    }
  return Complex(d);
}

std::shared_ptr<const MultiGraph> shared_graph(MultiGraph g) {
  return std::make_shared<const MultiGraph>(std::move(g));
}

std::shared_ptr<const Complex> shared_complex(Complex x) {
  return std::make_shared<const Complex>(std::move(x));
}

MultiGraph random_multigraph(Rng& rng, int max_vertices, int max_edges) {
  if (max_vertices < 1 || max_edges < 0) raise(Errc::BadParameter, "bad size bounds");
  int nv = 1 + static_cast<int>(rng.below(max_vertices));
  int ne = static_cast<int>(rng.below(max_edges + 1));
  GraphData d;
  for (int i = 0; i < nv; ++i) d.vertices.push_back("v" + num(i));
  for (int e = 0; e < ne; ++e) {
    int x = static_cast<int>(rng.below(nv));
    int y = static_cast<int>(rng.below(nv));
    d.edges.push_back({"e" + num(e), "v" + num(x), "v" + num(y)});
  }
  return MultiGraph(d);
}

MultiGraph random_connected_simple_graph(Rng& rng, int max_vertices) {
  if (max_vertices < 2) raise(Errc::BadParameter, "need at least two vertices");
  int nv = 2 + static_cast<int>(rng.below(max_vertices - 1));
  std::set<std::pair<int, int>> used;
  GraphData d;
  for (int i = 0; i < nv; ++i) d.vertices.push_back("v" + num(i));
  auto add = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    if (x == y || !used.insert({x, y}).second) return;
    d.edges.push_back({"e" + num(x) + "_" + num(y), "v" + num(x), "v" + num(y)});
  };
  for (int i = 1; i < nv; ++i) add(static_cast<int>(rng.below(i)), i);  // spanning tree
  int extra = static_cast<int>(rng.below(nv + 1));
  for (int t = 0; t < extra; ++t)
    add(static_cast<int>(rng.below(nv)), static_cast<int>(rng.below(nv)));
  return MultiGraph(d);
}

std::optional<Walk> random_closed_walk(const MultiGraph& g, Rng& rng, int max_len, int attempts) {
  if (g.edge_count() == 0 || max_len < 1) return std::nullopt;
  for (int t = 0; t < attempts; ++t) {
    int start = static_cast<int>(rng.below(g.vertex_count()));
    if (g.degree(start) == 0) continue;
    Walk w{start, {}};
    int at = start;
    for (int s = 0; s < max_len; ++s) {
      const auto& darts = g.incident_darts(at);
      auto [edge, side] = darts[rng.below(darts.size())];
      Step st{edge, side == 0};
      w.steps.push_back(st);
      at = step_target(g, st);
      if (at == start && rng.coin()) break;
    }
    if (at == start && !w.steps.empty()) return w;
  }
  return std::nullopt;
}

Complex random_complex(Rng& rng, int max_vertices, int max_edges, int max_faces,
                       int max_face_len) {
  MultiGraph skel = random_multigraph(rng, max_vertices, max_edges);
  std::vector<Face> faces;
  int nf = static_cast<int>(rng.below(max_faces + 1));
  for (int i = 0; i < nf; ++i) {
    auto w = random_closed_walk(skel, rng, max_face_len);
    if (!w) break;
    faces.push_back({"f" + num(static_cast<int>(faces.size())), *w});
  }
  return Complex(std::move(skel), std::move(faces));
}

std::vector<MultiGraph> all_multigraphs(int vertices, int edges) {
  if (vertices < 1 || edges < 0) raise(Errc::BadParameter, "bad enumeration bounds");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < vertices; ++i)
    for (int j = i; j < vertices; ++j) pairs.emplace_back(i, j);
  std::vector<std::string> vids;
  for (int i = 0; i < vertices; ++i) vids.push_back("v" + num(i));

  std::vector<MultiGraph> out;
  std::vector<int> pick(edges, 0);  // non-decreasing indices into pairs
  while (true) {
    GraphData d;
    d.vertices = vids;
    for (int e = 0; e < edges; ++e)
      d.edges.push_back({"e" + num(e), vids[pairs[pick[e]].first], vids[pairs[pick[e]].second]});
    out.push_back(MultiGraph(d));
    int k = edges - 1;
    while (k >= 0 && pick[k] == static_cast<int>(pairs.size()) - 1) --k;
    if (k < 0) break;
    int next = pick[k] + 1;
    for (int j = k; j < edges; ++j) pick[j] = next;
  }
  return out;
}

}  // namespace polycell
