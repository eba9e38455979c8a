#include "polycell/factorization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "polycell/error.hpp"

namespace polycell {

namespace {

struct Adj {
  int n = 0;
  std::vector<std::vector<char>> a;
  std::vector<int> deg;  // |N(v)|, loop counts once
  long long t = 0;       // ordered adjacent pairs, loops once

  explicit Adj(int size) : n(size), a(size, std::vector<char>(size, 0)) {}

  void finish() {
    deg.assign(n, 0);
    t = 0;
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (a[v][w]) {
          ++deg[v];
          ++t;
        }
  }
};

Adj adjacency_of(const MultiGraph& g) {
  Adj a(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto ends = g.edge(e).ends;
    a.a[ends[0]][ends[1]] = 1;
    a.a[ends[1]][ends[0]] = 1;
  }
  a.finish();
  return a;
}

bool adj_connected(const Adj& a) {
  if (a.n == 0) return true;
  std::vector<char> seen(a.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < a.n; ++w)
      if (a.a[v][w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == a.n;
}

bool adj_bipartite(const Adj& a) {
  std::vector<int> color(a.n, -1);
  for (int s = 0; s < a.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (a.a[v][v]) return false;
      for (int w = 0; w < a.n; ++w)
        if (a.a[v][w]) {
          if (color[w] < 0) {
            color[w] = 1 - color[v];
            stack.push_back(w);
          } else if (color[w] == color[v])
            return false;
        }
    }
  }
  return true;
}

MultiGraph graph_of_adjacency(const Adj& a) {
  GraphData d;
  for (int v = 0; v < a.n; ++v) d.vertices.push_back(std::to_string(v));
  int e = 0;
  for (int v = 0; v < a.n; ++v)
    for (int w = v; w < a.n; ++w)
      if (a.a[v][w])
        d.edges.push_back({"e" + std::to_string(e++), std::to_string(v), std::to_string(w)});
  return MultiGraph(d);
}

// One found division of g into candidate A times an inferred B, with the
// coordinate assignment realizing the bijection V(g) -> V(A) x V(B).
struct DivisionResult {
  Adj a, b;
  std::vector<int> va, vc;  // per g-vertex: A-coordinate, B-coordinate
};

// Backtracking division: assign each g-vertex an (A-coordinate, B-class)
// pair; B adjacency entries are forced along the way and verified exactly at
// the end by rebuilding the product.
struct Division {
  const Adj& g;
  const Adj& a;
  int nb;
  bool allow_loops;  // may B carry loops?
  std::uint64_t* nodes;
  std::uint64_t budget;

  std::vector<int> va, vc, dbc;  // dbc: forced B-degree per class, -1 unknown
  std::vector<std::vector<signed char>> beta;
  std::vector<std::vector<char>> slot;
  int classes = 0;

  Division(const Adj& gg, const Adj& aa, int nb_, bool allow_loops_, std::uint64_t* nodes_,
           std::uint64_t budget_)
      : g(gg), a(aa), nb(nb_), allow_loops(allow_loops_), nodes(nodes_), budget(budget_) {
    va.assign(g.n, -1);
    vc.assign(g.n, -1);
    dbc.assign(nb, -1);
    beta.assign(nb, std::vector<signed char>(nb, -1));
    slot.assign(a.n, std::vector<char>(nb, 0));
  }

  bool set_beta(int i, int j, signed char val, std::vector<std::pair<int, int>>& trail) {
    if (beta[i][j] == val) return true;
    if (beta[i][j] != -1) return false;
    beta[i][j] = val;
    beta[j][i] = val;
    trail.push_back({i, j});
    return true;
  }

  bool solve(int v) {
    if (v == g.n) return classes == nb;
    int climit = std::min(classes, nb - 1);
    for (int av = 0; av < a.n; ++av) {
      if (a.deg[av] == 0 || g.deg[v] % a.deg[av] != 0) continue;
      int db = g.deg[v] / a.deg[av];
      for (int c = 0; c <= climit; ++c) {
        if (slot[av][c]) continue;
        if (dbc[c] >= 0 && dbc[c] != db) continue;
        if (++*nodes > budget) raise(Errc::Budget, "division search exceeded its budget");
        std::vector<std::pair<int, int>> trail;
        bool ok = true;
        for (int w = 0; w <= v && ok; ++w) {
          int aw = w == v ? av : va[w];
          int cw = w == v ? c : vc[w];
          if (g.a[v][w]) {
            if (!a.a[av][aw])
              ok = false;
            else if (!allow_loops && c == cw)  // would force a loop into B
              ok = false;
            else
              ok = set_beta(c, cw, 1, trail);
          } else if (a.a[av][aw])
            ok = set_beta(c, cw, 0, trail);
        }
        if (ok) {
          va[v] = av;
          vc[v] = c;
          slot[av][c] = 1;
          int saved_classes = classes;
          int saved_db = dbc[c];
          if (c == classes) ++classes;
          dbc[c] = db;
          if (solve(v + 1)) return true;
          dbc[c] = saved_db;
          classes = saved_classes;
          slot[av][c] = 0;
          va[v] = -1;
          vc[v] = -1;
        }
        for (auto [i, j] : trail) {
          beta[i][j] = -1;
          beta[j][i] = -1;
        }
      }
    }
    return false;
  }

  std::optional<DivisionResult> result() {
    if (!solve(0)) return std::nullopt;
    Adj b(nb);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) b.a[i][j] = beta[i][j] == 1 ? 1 : 0;
    b.finish();
    // exact re-verification of the product structure
    for (int v = 0; v < g.n; ++v)
      for (int w = 0; w < g.n; ++w) {
        bool prod = a.a[va[v]][va[w]] && b.a[vc[v]][vc[w]];
        if (prod != (g.a[v][w] != 0)) return std::nullopt;
      }
    return DivisionResult{a, b, va, vc};
  }
};

// Enumerate candidate small factors and run the division search. Candidate
// side sizes run over divisor pairs with 2 <= na <= nb, so the enumeration on
// the small side stays exhaustive at desk scale.
std::vector<DivisionResult> find_divisions(const MultiGraph& graph, bool allow_loops,
                                           std::uint64_t budget, bool first_only) {
  std::vector<DivisionResult> out;
  Adj g = adjacency_of(graph);
  if (g.n < 4 || g.t == 0) return out;
  bool g_connected = adj_connected(g);
  bool g_nonbip = !adj_bipartite(g);
  std::uint64_t nodes = 0;
  for (int na = 2; na * na <= g.n; ++na) {
    if (g.n % na != 0) continue;
    int nb = g.n / na;
    int pair_bits = na * (na - 1) / 2;
    int loop_bits = allow_loops ? na : 0;
    long long masks = 1ll << (pair_bits + loop_bits);
    for (long long mask = 1; mask < masks; ++mask) {
      if (++nodes > budget) raise(Errc::Budget, "division search exceeded its budget");
      Adj a(na);
      int bit = 0;
      for (int i = 0; i < na; ++i)
        for (int j = i + 1; j < na; ++j, ++bit)
          if (mask >> bit & 1) a.a[i][j] = a.a[j][i] = 1;
      for (int i = 0; i < loop_bits; ++i)
        if (mask >> (pair_bits + i) & 1) a.a[i][i] = 1;
      a.finish();
      if (a.t == 0 || g.t % a.t != 0) continue;
      if (g_connected && !adj_connected(a)) continue;
      if (g_nonbip && adj_bipartite(a)) continue;
      Division d(g, a, nb, allow_loops, &nodes, budget);
      auto res = d.result();
      if (!res) continue;
      out.push_back(std::move(*res));
      if (first_only) return out;
    }
  }
  return out;
}

std::vector<long long> graph_order_key(const MultiGraph& g) {
  std::vector<long long> key{g.vertex_count(), g.edge_count()};
  int loops = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) ++loops;
  key.push_back(loops);
  std::vector<int> degs;
  for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  for (int d : degs) key.push_back(d);
  std::vector<std::vector<int>> profiles;
  auto ns = neighbor_sets(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> prof;
    for (int w : ns[v]) prof.push_back(g.degree(w));
    std::sort(prof.begin(), prof.end());
    profiles.push_back(std::move(prof));
  }
  std::sort(profiles.begin(), profiles.end());
  for (const auto& p : profiles) {
    key.push_back(-1);
    for (int d : p) key.push_back(d);
  }
  return key;
}

bool composite(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return true;
  return false;
}

}  // namespace

bool is_prime_graph(std::shared_ptr<const MultiGraph> g, FactorClass cls, std::uint64_t budget) {
  const MultiGraph& graph = *g;
  if (cls == FactorClass::S ? !is_simple(graph) : !in_s0(graph))
    raise(Errc::HypothesisViolated, cls == FactorClass::S ? "graph is not simple"
                                                          : "graph has parallel edges");
  if (graph.vertex_count() <= 1) raise(Errc::HypothesisViolated, "graph has at most one vertex");
  if (!is_connected(graph)) raise(Errc::HypothesisViolated, "graph is disconnected");
  return find_divisions(graph, cls == FactorClass::S0, budget, true).empty();
}

GraphFactorization graph_prime_factorization(std::shared_ptr<const MultiGraph> g, FactorClass cls,
                                             std::uint64_t budget) {
  const MultiGraph& graph = *g;
  if (cls == FactorClass::S ? !is_simple(graph) : !in_s0(graph))
    raise(Errc::HypothesisViolated, cls == FactorClass::S ? "graph is not simple"
                                                          : "graph has parallel edges");
  if (graph.vertex_count() <= 1) raise(Errc::HypothesisViolated, "graph has at most one vertex");
  if (!is_connected(graph)) raise(Errc::HypothesisViolated, "graph is disconnected");
  if (is_bipartite(graph)) raise(Errc::HypothesisViolated, "graph is bipartite");

  std::vector<std::shared_ptr<const MultiGraph>> primes;
  std::function<void(std::shared_ptr<const MultiGraph>)> split_rec =
      [&](std::shared_ptr<const MultiGraph> h) {
        auto divs = find_divisions(*h, cls == FactorClass::S0, budget, true);
        if (divs.empty()) {
          primes.push_back(std::move(h));
          return;
        }
        split_rec(std::make_shared<const MultiGraph>(graph_of_adjacency(divs[0].a)));
        split_rec(std::make_shared<const MultiGraph>(graph_of_adjacency(divs[0].b)));
      };
  split_rec(g);
  std::stable_sort(primes.begin(), primes.end(),
                   [](const auto& lhs, const auto& rhs) {
                     return graph_order_key(*lhs) < graph_order_key(*rhs);
                   });

  GraphFactorization out;
  out.cls = cls;
  out.factors = std::move(primes);
  if (out.factors.size() == 1) {
    out.rebuilt = g;
    if (cls == FactorClass::S) out.assembly = nary_tensor_product({g});
    out.certificate = identity_hom(g);
    return out;
  }
  if (cls == FactorClass::S) {
    out.assembly = nary_tensor_product(out.factors);
    out.rebuilt = out.assembly->product;
  } else {
    std::shared_ptr<const MultiGraph> p = out.factors[0];
    for (std::size_t i = 1; i < out.factors.size(); ++i)
      p = direct_product_s0(p, out.factors[i]).product;
    out.rebuilt = p;
  }
  auto cert = graph_isomorphism(out.rebuilt, g, budget);
  if (!cert) raise(Errc::Budget, "factor certificate search failed");
  out.certificate = std::move(*cert);
  return out;
}

std::vector<SkeletonSplit> enumerate_skeleton_splits(std::shared_ptr<const MultiGraph> g,
                                                     std::uint64_t budget) {
  std::vector<SkeletonSplit> out;
  if (!is_simple(*g) || g->vertex_count() < 4) return out;
  auto divs = find_divisions(*g, false, budget, false);

  // one division per unordered factor pair up to isomorphism
  std::vector<std::pair<std::shared_ptr<const MultiGraph>, std::shared_ptr<const MultiGraph>>>
      kept;
  std::vector<const DivisionResult*> kept_div;
  for (const auto& d : divs) {
    auto ga = std::make_shared<const MultiGraph>(graph_of_adjacency(d.a));
    auto gb = std::make_shared<const MultiGraph>(graph_of_adjacency(d.b));
    bool dup = false;
    for (const auto& [ka, kb] : kept) {
      if (ka->vertex_count() == ga->vertex_count() && graph_isomorphism(ka, ga, budget) &&
          graph_isomorphism(kb, gb, budget)) {
        dup = true;
        break;
      }
      if (ka->vertex_count() == gb->vertex_count() && graph_isomorphism(ka, gb, budget) &&
          graph_isomorphism(kb, ga, budget)) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    kept.push_back({ga, gb});
    kept_div.push_back(&d);
  }

  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto& [ga, gb] = kept[k];
    const DivisionResult& d = *kept_div[k];
    GraphProduct p = tensor_product(ga, gb);

    std::vector<int> vmap(g->vertex_count());
    for (int v = 0; v < g->vertex_count(); ++v) vmap[v] = p.vertex_of_pair(d.va[v], d.vc[v]);
    std::map<std::pair<int, int>, int> edge_at;
    for (int e = 0; e < p.product->edge_count(); ++e) {
      auto ends = p.product->edge(e).ends;
      edge_at[{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])}] = e;
    }
    std::vector<int> dmap(g->dart_count());
    for (int e = 0; e < g->edge_count(); ++e) {
      auto ends = g->edge(e).ends;
      int u = vmap[ends[0]], w = vmap[ends[1]];
      int pe = edge_at.at({std::min(u, w), std::max(u, w)});
      int s = p.product->edge(pe).ends[0] == u ? 0 : 1;
      dmap[2 * e] = 2 * pe + s;
      dmap[2 * e + 1] = 2 * pe + 1 - s;
    }
    GraphHom psi0{g, p.product, std::move(vmap), std::move(dmap)};

    // Identifications differing by a Cartesian automorphism of the product
    // classify faces identically; keep one representative per coset.
    auto full = enumerate_graph_automorphisms(p.product, budget);
    PermGroup cart = cartesian_subgroup(nary_tensor_product({ga, gb}), nullptr, budget);
    std::set<Permutation> covered;
    for (const auto& hom : full) {
      Permutation s = permutation_of(hom);
      if (covered.count(s)) continue;
      for (const auto& c : cart.elements) covered.insert(c.after(s));
      out.push_back({p, compose(hom, psi0)});
    }
  }
  return out;
}

namespace {

void check_split(const Complex& x, const SkeletonSplit& split) {
  if (split.iso.source.get() != x.skeleton_ptr().get() ||
      split.iso.target.get() != split.product.product.get() || !split.iso.is_bijective())
    raise(Errc::InvalidSplit, "split does not identify this complex's skeleton with the product");
}

}  // namespace

Face reductive_projection(const Complex& x, const SkeletonSplit& split, const std::string& face_id,
                          Side which) {
  check_split(x, split);
  const Face& f = x.face(x.require_face(face_id));
  Walk w = split.iso.walk_image(f.boundary);
  GraphHom proj = tensor_projection(split.product, which);
  Walk pw = proj.walk_image(w);
  const MultiGraph& side = which == Side::Left ? *split.product.left : *split.product.right;
  ReducedWalk rw = reduce_closed_walk(side, pw);
  return Face{face_id, std::move(rw.primitive)};
}

ComplexSplit try_complex_split(std::shared_ptr<const Complex> x, const SkeletonSplit& split) {
  if (!is_simple_complex(*x)) raise(Errc::NotSimple, "complex split requires a simple complex");
  check_split(*x, split);
  const GraphProduct& p = split.product;

  auto project_side = [&](Side which, const MultiGraph& sideg) {
    std::vector<Face> faces;
    std::vector<std::string> src;
    std::map<std::string, int> seen;
    for (int i = 0; i < x->face_count(); ++i) {
      Face pf = reductive_projection(*x, split, x->face(i).id, which);
      std::string key = canonical_cycle_key(sideg, pf.boundary, true);
      if (seen.emplace(key, static_cast<int>(faces.size())).second) {
        faces.push_back(Face{"p" + std::to_string(faces.size()), std::move(pf.boundary)});
        src.push_back(x->face(i).id);
      }
    }
    return std::pair{faces, src};
  };
  auto [lfaces, lsrc] = project_side(Side::Left, *p.left);
  auto [rfaces, rsrc] = project_side(Side::Right, *p.right);
  auto leftc = std::make_shared<const Complex>(p.left, std::move(lfaces));
  auto rightc = std::make_shared<const Complex>(p.right, std::move(rfaces));

  ComplexProduct p2 = complex_tensor_product(leftc, rightc);
  const MultiGraph& pg = *p2.skeleton.product;
  if (pg.vertex_count() != p.product->vertex_count() || pg.edge_count() != p.product->edge_count())
    raise(Errc::InvalidSplit, "rebuilt product skeleton does not match the split");

  std::multiset<std::string> xkeys, pkeys;
  std::vector<std::string> xkey_of(x->face_count());
  for (int i = 0; i < x->face_count(); ++i) {
    xkey_of[i] = canonical_cycle_key(pg, split.iso.walk_image(x->face(i).boundary), true);
    xkeys.insert(xkey_of[i]);
  }
  std::vector<std::string> pkey_of(p2.product->face_count());
  for (int i = 0; i < p2.product->face_count(); ++i) {
    pkey_of[i] = canonical_cycle_key(pg, p2.product->face(i).boundary, true);
    pkeys.insert(pkey_of[i]);
  }
  if (xkeys == pkeys) return {leftc, rightc, "", ""};

  for (int i = 0; i < p2.product->face_count(); ++i)
    if (pkeys.count(pkey_of[i]) > xkeys.count(pkey_of[i])) {
      ComplexProduct::FaceLabel lab = p2.label_of_face(i);
      return {nullptr, nullptr, lsrc[lab.left_face], rsrc[lab.right_face]};
    }
  for (int i = 0; i < x->face_count(); ++i)
    if (xkeys.count(xkey_of[i]) > pkeys.count(xkey_of[i]))
      return {nullptr, nullptr, x->face(i).id, x->face(i).id};
  return {nullptr, nullptr, "", ""};
}

bool is_prime_complex(std::shared_ptr<const Complex> x, std::uint64_t budget) {
  const Complex& cx = *x;
  if (cx.face_count() > 0 && is_elementary(cx)) return true;
  const MultiGraph& skel = cx.skeleton();
  // dart-level edge counts multiply by 2 e1 e2, so an odd count cannot split
  if (skel.edge_count() % 2 == 1) return true;
  if (cx.face_count() == 0 && skel.edge_count() == 0)
    return !composite(skel.vertex_count());
  if (is_simple(skel) && !composite(skel.vertex_count())) return true;
  if (!is_simple(skel))
    raise(Errc::Budget, "split search supports simple skeletons only");
  if (!composite(skel.vertex_count())) return true;
  for (const auto& split : enumerate_skeleton_splits(cx.skeleton_ptr(), budget))
    if (try_complex_split(x, split).ok()) return false;
  return true;
}

namespace {

std::vector<long long> complex_order_key(const Complex& x) {
  std::vector<long long> key{x.skeleton().vertex_count(), x.skeleton().edge_count(),
                             x.face_count()};
  std::vector<int> lens;
  for (const Face& f : x.faces()) lens.push_back(f.boundary.length());
  std::sort(lens.begin(), lens.end());
  for (int n : lens) key.push_back(n);
  for (long long v : graph_order_key(x.skeleton())) key.push_back(v);
  return key;
}

}  // namespace

ComplexFactorization complex_prime_factorization(std::shared_ptr<const Complex> x,
                                                 std::uint64_t budget) {
  const Complex& cx = *x;
  if (!is_simple_complex(cx)) raise(Errc::HypothesisViolated, "complex is not simple");
  auto skel = cx.skeleton_ptr();
  if (!is_simple(*skel)) raise(Errc::HypothesisViolated, "skeleton is not simple");
  if (skel->vertex_count() <= 1)
    raise(Errc::HypothesisViolated, "skeleton needs more than one vertex");
  if (!is_connected(*skel)) raise(Errc::HypothesisViolated, "skeleton is disconnected");
  if (is_bipartite(*skel)) raise(Errc::HypothesisViolated, "skeleton is bipartite");
  if (!is_r_thin(*skel)) raise(Errc::HypothesisViolated, "skeleton is not R-thin");
  if (!is_edge_transitive(skel, budget))
    raise(Errc::HypothesisViolated, "skeleton is not edge-transitive");

  GraphFactorization gf = graph_prime_factorization(skel, FactorClass::S, budget);

  struct Node {
    std::shared_ptr<const Complex> xc;
    std::vector<std::shared_ptr<const MultiGraph>> primes;
    NaryGraphProduct nar;
    GraphHom psi;  // skeleton(xc) -> nar.product
  };
  std::vector<std::shared_ptr<const Complex>> out;
  // Groupings are identified up to Cartesian automorphisms of the skeleton
  // product; since the skeletons here are connected non-bipartite R-thin,
  // the full automorphism group is Cartesian and one identification per
  // grouping is exhaustive.
  std::function<void(Node)> rec = [&](Node nd) {
    std::size_t k = nd.primes.size();
    if (k <= 1) {
      out.push_back(nd.xc);
      return;
    }
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << k); ++mask)
      if ((mask & 1u) && mask != (1u << k) - 1) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned lhs, unsigned rhs) {
      return __builtin_popcount(lhs) < __builtin_popcount(rhs);
    });
    for (unsigned mask : masks) {
      std::vector<std::shared_ptr<const MultiGraph>> pi, pj;
      std::vector<GraphHom> phi, phj;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) {
          pi.push_back(nd.primes[i]);
          phi.push_back(nd.nar.projection(static_cast<int>(i)));
        } else {
          pj.push_back(nd.primes[i]);
          phj.push_back(nd.nar.projection(static_cast<int>(i)));
        }
      NaryGraphProduct na = nary_tensor_product(pi);
      NaryGraphProduct nb = nary_tensor_product(pj);
      GraphHom fa = nary_universal_factor(na, phi);
      GraphHom fb = nary_universal_factor(nb, phj);
      GraphProduct bin = tensor_product(na.product, nb.product);
      GraphHom rho = universal_factor_graph(bin, fa, fb);
      if (!rho.is_bijective()) continue;
      SkeletonSplit sp{bin, compose(rho, nd.psi)};
      ComplexSplit cs = try_complex_split(nd.xc, sp);
      if (!cs.ok()) continue;
      rec({cs.left, std::move(pi), std::move(na), identity_hom(bin.left)});
      rec({cs.right, std::move(pj), std::move(nb), identity_hom(bin.right)});
      return;
    }
    out.push_back(nd.xc);
  };
  rec({x, gf.factors, *gf.assembly, invert(gf.certificate)});

  std::stable_sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
    return complex_order_key(*lhs) < complex_order_key(*rhs);
  });

  ComplexFactorization result;
  result.factors = std::move(out);
  if (result.factors.size() == 1) {
    result.factors[0] = x;
    result.rebuilt = x;
    result.certificate = identity_complex_hom(x);
    return result;
  }
  result.assembly = nary_complex_tensor_product(result.factors);
  result.rebuilt = result.assembly->product;
  auto cert = complex_isomorphism(result.rebuilt, x, budget);
  if (!cert) raise(Errc::Budget, "factor certificate search failed");
  result.certificate = std::move(*cert);
  return result;
}

}  // namespace polycell
