#include "polycell/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "polycell/error.hpp"

namespace polycell {

namespace {

void check_sizes(const Permutation& p, int nv, int nd, int nf) {
  if (static_cast<int>(p.vperm.size()) != nv || static_cast<int>(p.dperm.size()) != nd ||
      static_cast<int>(p.fperm.size()) != nf)
    raise(Errc::BadParameter, "permutation ground size mismatch");
}

bool is_bijection(const std::vector<int>& m) {
  std::vector<char> seen(m.size(), 0);
  for (int v : m) {
    if (v < 0 || v >= static_cast<int>(m.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

Permutation Permutation::identity(int nv, int nd, int nf) {
  Permutation p;
  p.vperm.resize(nv);
  p.dperm.resize(nd);
  p.fperm.resize(nf);
  for (int i = 0; i < nv; ++i) p.vperm[i] = i;
  for (int i = 0; i < nd; ++i) p.dperm[i] = i;
  for (int i = 0; i < nf; ++i) p.fperm[i] = i;
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  if (vperm.size() != first.vperm.size() || dperm.size() != first.dperm.size() ||
      fperm.size() != first.fperm.size())
    raise(Errc::BadParameter, "composing permutations of different ground sets");
  Permutation r;
  r.vperm.resize(vperm.size());
  r.dperm.resize(dperm.size());
  r.fperm.resize(fperm.size());
  for (std::size_t i = 0; i < vperm.size(); ++i) r.vperm[i] = vperm[first.vperm[i]];
  for (std::size_t i = 0; i < dperm.size(); ++i) r.dperm[i] = dperm[first.dperm[i]];
  for (std::size_t i = 0; i < fperm.size(); ++i) r.fperm[i] = fperm[first.fperm[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.vperm.resize(vperm.size());
  r.dperm.resize(dperm.size());
  r.fperm.resize(fperm.size());
  for (std::size_t i = 0; i < vperm.size(); ++i) r.vperm[vperm[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < dperm.size(); ++i) r.dperm[dperm[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < fperm.size(); ++i) r.fperm[fperm[i]] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < vperm.size(); ++i)
    if (vperm[i] != static_cast<int>(i)) return false;
  for (std::size_t i = 0; i < dperm.size(); ++i)
    if (dperm[i] != static_cast<int>(i)) return false;
  for (std::size_t i = 0; i < fperm.size(); ++i)
    if (fperm[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation permutation_of(const GraphHom& h) {
  if (h.source.get() != h.target.get())
    raise(Errc::BadParameter, "ground permutation requires an endomorphism");
  if (!is_bijection(h.vmap) || !is_bijection(h.dmap))
    raise(Errc::BadParameter, "ground permutation requires a bijective map");
  Permutation p;
  p.vperm = h.vmap;
  p.dperm = h.dmap;
  return p;
}

Permutation permutation_of(const ComplexHom& h) {
  if (h.source.get() != h.target.get())
    raise(Errc::BadParameter, "ground permutation requires an endomorphism");
  Permutation p = permutation_of(h.skeleton);
  p.fperm.resize(h.fmap.size());
  std::vector<int> f(h.fmap.size());
  for (std::size_t i = 0; i < h.fmap.size(); ++i) f[i] = h.fmap[i].face;
  if (!is_bijection(f)) raise(Errc::BadParameter, "ground permutation requires a bijective map");
  p.fperm = f;
  return p;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (elements.empty()) return true;
  if (generators.empty()) return other.contains(elements.front());  // trivial group: identity
  for (const auto& g : generators)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return is_subgroup_of(other) && other.is_subgroup_of(*this);
}

PermGroup close_generators(int nv, int nd, int nf, std::vector<Permutation> gens,
                           std::uint64_t max_order) {
  for (const auto& g : gens) check_sizes(g, nv, nd, nf);
  Permutation id = Permutation::identity(nv, nd, nf);
  std::vector<Permutation> clean;
  for (auto& g : gens)
    if (!g.is_identity() && std::find(clean.begin(), clean.end(), g) == clean.end())
      clean.push_back(std::move(g));
  std::set<Permutation> elems;
  elems.insert(id);
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : clean) {
        Permutation p = e.after(g);
        if (elems.insert(p).second) {
          if (elems.size() > max_order)
            raise(Errc::TooLarge, "group closure exceeded the order budget");
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  PermGroup out;
  out.generators = std::move(clean);
  out.elements.assign(elems.begin(), elems.end());
  return out;
}

namespace {

// A small generating set recovered from a fully enumerated group.
std::vector<Permutation> extract_generators(int nv, int nd, int nf,
                                            const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  std::set<Permutation> covered;
  covered.insert(Permutation::identity(nv, nd, nf));
  for (const auto& p : elements) {
    if (covered.count(p)) continue;
    gens.push_back(p);
    PermGroup g = close_generators(nv, nd, nf, gens, elements.size() + 1);
    covered = std::set<Permutation>(g.elements.begin(), g.elements.end());
  }
  return gens;
}

PermGroup group_from_elements(int nv, int nd, int nf, std::set<Permutation>&& elems) {
  elems.insert(Permutation::identity(nv, nd, nf));
  PermGroup out;
  out.elements.assign(elems.begin(), elems.end());
  out.generators = extract_generators(nv, nd, nf, out.elements);
  return out;
}

// --- vertex-map search with color refinement ------------------------------

std::vector<long long> face_profile_extras(const Complex& x) {
  const MultiGraph& g = x.skeleton();
  std::vector<long long> extra(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> lens;
    for (const Corner& c : corners_at_vertex(x, v))
      lens.push_back(x.face(c.face).boundary.length());
    std::sort(lens.begin(), lens.end());
    unsigned long long h = 1469598103934665603ULL;
    for (int n : lens) h = (h ^ static_cast<unsigned long long>(n + 1)) * 1099511628211ULL;
    extra[v] = static_cast<long long>(h >> 1);
  }
  return extra;
}

void refine_colors(const MultiGraph& g, const MultiGraph& h, const std::vector<long long>* gx,
                   const std::vector<long long>* hx, std::vector<int>& gc, std::vector<int>& hc) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  gc.assign(ng, 0);
  hc.assign(nh, 0);
  {
    std::map<std::pair<long long, long long>, int> ids;
    auto seed = [&](const MultiGraph& gr, const std::vector<long long>* ex, std::vector<int>& col) {
      for (int v = 0; v < gr.vertex_count(); ++v) {
        std::pair<long long, long long> key{gr.degree(v), ex ? (*ex)[v] : 0};
        auto [it, _] = ids.emplace(key, static_cast<int>(ids.size()));
        col[v] = it->second;
      }
    };
    seed(g, gx, gc);
    seed(h, hx, hc);
  }
  auto keys_of = [](const MultiGraph& gr, const std::vector<int>& col) {
    std::vector<std::vector<int>> keys(gr.vertex_count());
    for (int v = 0; v < gr.vertex_count(); ++v) {
      std::vector<int> nb;
      for (auto [e, s] : gr.incident_darts(v)) nb.push_back(col[gr.edge(e).ends[1 - s]]);
      std::sort(nb.begin(), nb.end());
      keys[v].push_back(col[v]);
      keys[v].insert(keys[v].end(), nb.begin(), nb.end());
    }
    return keys;
  };
  std::size_t colors = 0;
  for (int round = 0; round <= ng + nh; ++round) {
    std::map<std::vector<int>, int> ids;
    auto gk = keys_of(g, gc);
    auto hk = keys_of(h, hc);
    for (int v = 0; v < ng; ++v) {
      auto [it, _] = ids.emplace(gk[v], static_cast<int>(ids.size()));
      gc[v] = it->second;
    }
    for (int v = 0; v < nh; ++v) {
      auto [it, _] = ids.emplace(hk[v], static_cast<int>(ids.size()));
      hc[v] = it->second;
    }
    if (ids.size() == colors) break;
    colors = ids.size();
  }
}

struct GraphSearch {
  std::shared_ptr<const MultiGraph> gs, hs;
  std::uint64_t budget = kNodeBudget;
  std::uint64_t max_results = kMaxResults;
  const std::vector<long long>* gextra = nullptr;
  const std::vector<long long>* hextra = nullptr;
  // Called with each completed dart-level homomorphism; return false to stop.
  std::function<bool(GraphHom&&)> sink;

  std::vector<int> gcol, hcol;
  std::vector<std::vector<int>> gnbr, hnbr;
  std::vector<int> order, vmap, hinv;
  std::uint64_t nodes = 0, results = 0;
  bool stopped = false;

  void run() {
    const MultiGraph& g = *gs;
    const MultiGraph& h = *hs;
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return;
    refine_colors(g, h, gextra, hextra, gcol, hcol);
    {
      std::map<int, int> ghist, hhist;
      for (int c : gcol) ++ghist[c];
      for (int c : hcol) ++hhist[c];
      if (ghist != hhist) return;
    }
    auto nbrs_of = [](const MultiGraph& gr) {
      std::vector<std::vector<int>> nb(gr.vertex_count());
      for (int v = 0; v < gr.vertex_count(); ++v) {
        std::set<int> s;
        for (auto [e, sd] : gr.incident_darts(v)) s.insert(gr.edge(e).ends[1 - sd]);
        nb[v].assign(s.begin(), s.end());
      }
      return nb;
    };
    gnbr = nbrs_of(g);
    hnbr = nbrs_of(h);
    plan_order();
    vmap.assign(g.vertex_count(), -1);
    hinv.assign(h.vertex_count(), -1);
    extend(0);
  }

  void plan_order() {
    const MultiGraph& g = *gs;
    int n = g.vertex_count();
    std::map<int, int> csize;
    for (int c : hcol) ++csize[c];
    std::vector<char> placed(n, 0);
    order.clear();
    for (int k = 0; k < n; ++k) {
      int best = -1, best_anch = -1, best_size = 0;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int anch = 0;
        for (int u : gnbr[v])
          if (placed[u]) ++anch;
        auto it = csize.find(gcol[v]);
        int sz = it == csize.end() ? 0 : it->second;
        if (anch > best_anch || (anch == best_anch && sz < best_size)) {
          best = v;
          best_anch = anch;
          best_size = sz;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  bool extend(std::size_t k) {
    if (stopped) return false;
    if (k == order.size()) return emit();
    const MultiGraph& g = *gs;
    const MultiGraph& h = *hs;
    int u = order[k];
    for (int w = 0; w < h.vertex_count(); ++w) {
      if (hinv[w] >= 0 || hcol[w] != gcol[u]) continue;
      if (++nodes > budget) raise(Errc::TooLarge, "isomorphism search exceeded the node budget");
      if (g.multiplicity(u, u) != h.multiplicity(w, w)) continue;
      bool ok = true;
      for (int u2 : gnbr[u]) {
        if (u2 == u || vmap[u2] < 0) continue;
        if (g.multiplicity(u, u2) != h.multiplicity(w, vmap[u2])) {
          ok = false;
          break;
        }
      }
      if (ok)
        for (int w2 : hnbr[w]) {
          if (w2 == w || hinv[w2] < 0) continue;
          if (h.multiplicity(w, w2) != g.multiplicity(u, hinv[w2])) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      vmap[u] = w;
      hinv[w] = u;
      bool keep = extend(k + 1);
      vmap[u] = -1;
      hinv[w] = -1;
      if (!keep) {
        stopped = true;
        return false;
      }
    }
    return true;
  }

  // Expand a completed vertex map into dart maps: parallel edges permute
  // within their class and loops flip sides independently.
  bool emit() {
    const MultiGraph& g = *gs;
    const MultiGraph& h = *hs;
    struct Class {
      std::vector<int> src, tgt;
      bool loop = false;
    };
    std::map<std::pair<int, int>, std::vector<int>> tgt_by_pair;
    for (int j = 0; j < h.edge_count(); ++j) {
      auto e = h.edge(j).ends;
      tgt_by_pair[{std::min(e[0], e[1]), std::max(e[0], e[1])}].push_back(j);
    }
    std::map<std::pair<int, int>, Class> classes;
    for (int i = 0; i < g.edge_count(); ++i) {
      auto e = g.edge(i).ends;
      auto& c = classes[{std::min(e[0], e[1]), std::max(e[0], e[1])}];
      c.src.push_back(i);
      c.loop = e[0] == e[1];
    }
    std::vector<Class> cls;
    for (auto& [key, c] : classes) {
      auto it = tgt_by_pair.find({std::min(vmap[key.first], vmap[key.second]),
                                  std::max(vmap[key.first], vmap[key.second])});
      if (it == tgt_by_pair.end() || it->second.size() != c.src.size()) return true;
      c.tgt = it->second;
      cls.push_back(std::move(c));
    }
    std::vector<std::vector<int>> chosen(cls.size());
    std::vector<unsigned> masks(cls.size(), 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t ci) -> bool {
      if (ci == cls.size()) {
        if (++nodes > budget) raise(Errc::TooLarge, "isomorphism search exceeded the node budget");
        std::vector<int> dmap(g.dart_count());
        for (std::size_t c = 0; c < cls.size(); ++c)
          for (std::size_t idx = 0; idx < cls[c].src.size(); ++idx) {
            int e = cls[c].src[idx], f = chosen[c][idx];
            if (cls[c].loop) {
              int bit = (masks[c] >> idx) & 1u;
              dmap[2 * e] = 2 * f + bit;
              dmap[2 * e + 1] = 2 * f + 1 - bit;
            } else {
              int a = vmap[g.edge(e).ends[0]];
              int s = h.edge(f).ends[0] == a ? 0 : 1;
              dmap[2 * e] = 2 * f + s;
              dmap[2 * e + 1] = 2 * f + 1 - s;
            }
          }
        if (++results > max_results)
          raise(Errc::TooLarge, "isomorphism search exceeded the result budget");
        return sink(GraphHom{gs, hs, vmap, std::move(dmap)});
      }
      std::vector<int> t = cls[ci].tgt;
      std::sort(t.begin(), t.end());
      unsigned flips = cls[ci].loop ? 1u << cls[ci].src.size() : 1u;
      do {
        chosen[ci] = t;
        for (unsigned m = 0; m < flips; ++m) {
          masks[ci] = m;
          if (!assign(ci + 1)) return false;
        }
      } while (std::next_permutation(t.begin(), t.end()));
      return true;
    };
    return assign(0);
  }
};

std::vector<GraphHom> graph_engine(std::shared_ptr<const MultiGraph> gs,
                                   std::shared_ptr<const MultiGraph> hs, bool all,
                                   std::uint64_t budget) {
  std::vector<GraphHom> out;
  GraphSearch s;
  s.gs = std::move(gs);
  s.hs = std::move(hs);
  s.budget = budget;
  s.sink = [&](GraphHom&& h) {
    out.push_back(std::move(h));
    return all;
  };
  s.run();
  return out;
}

}  // namespace

std::vector<GraphHom> enumerate_graph_automorphisms(std::shared_ptr<const MultiGraph> g,
                                                    std::uint64_t budget) {
  return graph_engine(g, g, true, budget);
}

std::optional<GraphHom> graph_isomorphism(std::shared_ptr<const MultiGraph> g,
                                          std::shared_ptr<const MultiGraph> h,
                                          std::uint64_t budget) {
  auto found = graph_engine(std::move(g), std::move(h), false, budget);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

PermGroup graph_automorphism_group(std::shared_ptr<const MultiGraph> g, std::uint64_t budget) {
  int nv = g->vertex_count(), nd = g->dart_count();
  std::set<Permutation> elems;
  for (const auto& h : enumerate_graph_automorphisms(g, budget)) elems.insert(permutation_of(h));
  return group_from_elements(nv, nd, 0, std::move(elems));
}

namespace {

struct ComplexSearch {
  std::shared_ptr<const Complex> xs, ys;
  std::uint64_t budget = kNodeBudget;
  // Called with each completed decorated homomorphism; return false to stop.
  std::function<bool(ComplexHom&&)> sink;
  std::uint64_t face_nodes = 0, results = 0;

  static std::vector<int> walk_key(const Walk& w) {
    std::vector<int> key;
    key.reserve(1 + w.steps.size());
    key.push_back(w.start);
    for (const Step& s : w.steps) key.push_back(2 * s.edge + (s.forward ? 1 : 0));
    return key;
  }

  void run() {
    const Complex& x = *xs;
    const Complex& y = *ys;
    if (x.face_count() != y.face_count()) return;
    {
      std::vector<int> xl, yl;
      for (const Face& f : x.faces()) xl.push_back(f.boundary.length());
      for (const Face& f : y.faces()) yl.push_back(f.boundary.length());
      std::sort(xl.begin(), xl.end());
      std::sort(yl.begin(), yl.end());
      if (xl != yl) return;
    }
    std::map<std::vector<int>, std::vector<FaceImage>> images;
    for (int f = 0; f < y.face_count(); ++f) {
      int n = y.face(f).boundary.length();
      for (int ref = 0; ref < 2; ++ref)
        for (int rot = 0; rot < n; ++rot) {
          FaceImage im{f, rot, ref != 0};
          images[walk_key(decorated_boundary(y, im))].push_back(im);
        }
    }
    std::vector<long long> xe = face_profile_extras(x);
    std::vector<long long> ye = face_profile_extras(y);
    GraphSearch gsearch;
    gsearch.gs = x.skeleton_ptr();
    gsearch.hs = y.skeleton_ptr();
    gsearch.budget = budget;
    gsearch.gextra = &xe;
    gsearch.hextra = &ye;
    gsearch.sink = [&](GraphHom&& sigma) { return expand_faces(std::move(sigma), images); };
    gsearch.run();
  }

  bool expand_faces(GraphHom&& sigma,
                    const std::map<std::vector<int>, std::vector<FaceImage>>& images) {
    const Complex& x = *xs;
    int nf = x.face_count();
    std::vector<const std::vector<FaceImage>*> cand(nf);
    for (int f = 0; f < nf; ++f) {
      auto it = images.find(walk_key(sigma.walk_image(x.face(f).boundary)));
      if (it == images.end()) return true;  // this skeleton map carries no faces
      cand[f] = &it->second;
    }
    std::vector<FaceImage> fmap(nf);
    std::vector<char> used(ys->face_count(), 0);
    std::function<bool(int)> rec = [&](int f) -> bool {
      if (f == nf) {
        if (++results > kMaxResults)
          raise(Errc::TooLarge, "isomorphism search exceeded the result budget");
        return sink(ComplexHom{xs, ys, sigma, fmap});
      }
      for (const FaceImage& im : *cand[f]) {
        if (used[im.face]) continue;
        if (++face_nodes > budget)
          raise(Errc::TooLarge, "isomorphism search exceeded the node budget");
        used[im.face] = 1;
        fmap[f] = im;
        bool keep = rec(f + 1);
        used[im.face] = 0;
        if (!keep) return false;
      }
      return true;
    };
    return rec(0);
  }
};

std::vector<ComplexHom> complex_engine(std::shared_ptr<const Complex> xs,
                                       std::shared_ptr<const Complex> ys, bool all,
                                       std::uint64_t budget) {
  std::vector<ComplexHom> out;
  ComplexSearch s;
  s.xs = std::move(xs);
  s.ys = std::move(ys);
  s.budget = budget;
  s.sink = [&](ComplexHom&& h) {
    out.push_back(std::move(h));
    return all;
  };
  s.run();
  return out;
}

}  // namespace

std::vector<ComplexHom> enumerate_complex_automorphisms(std::shared_ptr<const Complex> x,
                                                        std::uint64_t budget) {
  return complex_engine(x, x, true, budget);
}

std::optional<ComplexHom> complex_isomorphism(std::shared_ptr<const Complex> x,
                                              std::shared_ptr<const Complex> y,
                                              std::uint64_t budget) {
  auto found = complex_engine(std::move(x), std::move(y), false, budget);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

PermGroup complex_automorphism_group(std::shared_ptr<const Complex> x, std::uint64_t budget) {
  int nv = x->skeleton().vertex_count();
  int nd = x->skeleton().dart_count();
  int nf = x->face_count();
  std::set<Permutation> elems;
  for (const auto& h : enumerate_complex_automorphisms(x, budget))
    elems.insert(permutation_of(h));
  return group_from_elements(nv, nd, nf, std::move(elems));
}

bool is_vertex_transitive(std::shared_ptr<const MultiGraph> g, std::uint64_t budget) {
  if (g->vertex_count() <= 1) return true;
  std::set<int> orbit;
  for (const auto& h : enumerate_graph_automorphisms(g, budget)) orbit.insert(h.vmap[0]);
  return static_cast<int>(orbit.size()) == g->vertex_count();
}

bool is_edge_transitive(std::shared_ptr<const MultiGraph> g, std::uint64_t budget) {
  if (g->edge_count() <= 1) return true;
  std::set<int> orbit;
  for (const auto& h : enumerate_graph_automorphisms(g, budget)) orbit.insert(h.dmap[0] / 2);
  return static_cast<int>(orbit.size()) == g->edge_count();
}

bool is_arc_transitive(std::shared_ptr<const MultiGraph> g, std::uint64_t budget) {
  if (g->dart_count() <= 1) return true;
  std::set<int> orbit;
  for (const auto& h : enumerate_graph_automorphisms(g, budget)) orbit.insert(h.dmap[0]);
  return static_cast<int>(orbit.size()) == g->dart_count();
}

bool is_flag_transitive(std::shared_ptr<const Complex> x, std::uint64_t budget) {
  std::vector<Flag> all = flags(*x);
  if (all.size() <= 1) return true;
  std::vector<int> offsets = flag_offsets(*x);
  auto index_of = [&](const Flag& fl) {
    return offsets[fl.corner.face] + 2 * fl.corner.position + fl.side;
  };
  std::set<int> orbit;
  for (const auto& h : enumerate_complex_automorphisms(x, budget))
    orbit.insert(index_of(h.flag_image(all.front())));
  return orbit.size() == all.size();
}

namespace {

struct GroundRestriction {
  std::vector<int> vkeep, ekeep, fkeep;
  std::vector<int> vpos, epos, fpos;
};

GroundRestriction make_restriction(const MultiGraph& g, const Complex* x,
                                   const std::vector<int>& vset) {
  GroundRestriction r;
  r.vpos.assign(g.vertex_count(), -1);
  r.vkeep = vset;
  std::sort(r.vkeep.begin(), r.vkeep.end());
  r.vkeep.erase(std::unique(r.vkeep.begin(), r.vkeep.end()), r.vkeep.end());
  for (std::size_t i = 0; i < r.vkeep.size(); ++i) {
    if (r.vkeep[i] < 0 || r.vkeep[i] >= g.vertex_count())
      raise(Errc::IndexOutOfRange, "restriction vertex out of range");
    r.vpos[r.vkeep[i]] = static_cast<int>(i);
  }
  r.epos.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto ends = g.edge(e).ends;
    if (r.vpos[ends[0]] >= 0 && r.vpos[ends[1]] >= 0) {
      r.epos[e] = static_cast<int>(r.ekeep.size());
      r.ekeep.push_back(e);
    }
  }
  if (x) {
    r.fpos.assign(x->face_count(), -1);
    for (int f = 0; f < x->face_count(); ++f) {
      bool in = true;
      for (int v : walk_vertices(g, x->face(f).boundary))
        if (r.vpos[v] < 0) {
          in = false;
          break;
        }
      if (in) {
        r.fpos[f] = static_cast<int>(r.fkeep.size());
        r.fkeep.push_back(f);
      }
    }
  }
  return r;
}

std::optional<Permutation> restrict_permutation(const Permutation& p,
                                                const GroundRestriction& r) {
  Permutation q;
  q.vperm.resize(r.vkeep.size());
  for (std::size_t i = 0; i < r.vkeep.size(); ++i) {
    int w = p.vperm[r.vkeep[i]];
    if (r.vpos[w] < 0) return std::nullopt;
    q.vperm[i] = r.vpos[w];
  }
  q.dperm.resize(2 * r.ekeep.size());
  for (std::size_t i = 0; i < r.ekeep.size(); ++i)
    for (int s = 0; s < 2; ++s) {
      int d = p.dperm[2 * r.ekeep[i] + s];
      int e2 = r.epos[d / 2];
      if (e2 < 0) return std::nullopt;
      q.dperm[2 * i + s] = 2 * e2 + d % 2;
    }
  q.fperm.resize(r.fkeep.size());
  for (std::size_t i = 0; i < r.fkeep.size(); ++i) {
    int f = p.fperm[r.fkeep[i]];
    if (r.fpos[f] < 0) return std::nullopt;
    q.fperm[i] = r.fpos[f];
  }
  return q;
}

PermGroup restrict_group(const PermGroup& g, const GroundRestriction& r) {
  std::set<Permutation> elems;
  for (const auto& p : g.elements) {
    auto q = restrict_permutation(p, r);
    if (q) elems.insert(std::move(*q));
  }
  return group_from_elements(static_cast<int>(r.vkeep.size()),
                             static_cast<int>(2 * r.ekeep.size()),
                             static_cast<int>(r.fkeep.size()), std::move(elems));
}

}  // namespace

PermGroup cartesian_subgroup(const NaryGraphProduct& ambient, const std::vector<int>* restrict_to,
                             std::uint64_t budget, std::uint64_t max_order) {
  std::size_t m = ambient.factors.size();
  if (m == 0 || !ambient.product || (m > 1 && ambient.steps.size() + 1 != m))
    raise(Errc::LabelMapMissing, "product carries no factor labels");
  std::vector<Permutation> gens;
  std::vector<GraphHom> id_comp;
  for (const auto& f : ambient.factors) id_comp.push_back(identity_hom(f));
  std::vector<int> id_slots(m);
  for (std::size_t i = 0; i < m; ++i) id_slots[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < m; ++i)
    for (auto& alpha : enumerate_graph_automorphisms(ambient.factors[i], budget)) {
      auto comps = id_comp;
      comps[i] = alpha;
      GraphHom h = assemble_product_hom(ambient, ambient, comps, id_slots);
      Permutation p = permutation_of(h);
      if (!p.is_identity()) gens.push_back(std::move(p));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto iso = graph_isomorphism(ambient.factors[i], ambient.factors[j], budget);
      if (!iso) continue;
      auto comps = id_comp;
      auto slots = id_slots;
      slots[i] = static_cast<int>(j);
      slots[j] = static_cast<int>(i);
      comps[i] = invert(*iso);
      comps[j] = *iso;
      gens.push_back(permutation_of(assemble_product_hom(ambient, ambient, comps, slots)));
    }
  PermGroup g = close_generators(ambient.product->vertex_count(), ambient.product->dart_count(),
                                 0, std::move(gens), max_order);
  if (!restrict_to) return g;
  return restrict_group(g, make_restriction(*ambient.product, nullptr, *restrict_to));
}

PermGroup cartesian_subgroup(const NaryComplexProduct& ambient,
                             const std::vector<int>* restrict_to, std::uint64_t budget,
                             std::uint64_t max_order) {
  std::size_t m = ambient.factors.size();
  if (m == 0 || !ambient.product || (m > 1 && ambient.steps.size() + 1 != m))
    raise(Errc::LabelMapMissing, "product carries no factor labels");
  std::vector<Permutation> gens;
  std::vector<ComplexHom> id_comp;
  for (const auto& f : ambient.factors) id_comp.push_back(identity_complex_hom(f));
  std::vector<int> id_slots(m);
  for (std::size_t i = 0; i < m; ++i) id_slots[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < m; ++i)
    for (auto& alpha : enumerate_complex_automorphisms(ambient.factors[i], budget)) {
      auto comps = id_comp;
      comps[i] = alpha;
      ComplexHom h = assemble_complex_product_hom(ambient, ambient, comps, id_slots);
      Permutation p = permutation_of(h);
      if (!p.is_identity()) gens.push_back(std::move(p));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto iso = complex_isomorphism(ambient.factors[i], ambient.factors[j], budget);
      if (!iso) continue;
      auto comps = id_comp;
      auto slots = id_slots;
      slots[i] = static_cast<int>(j);
      slots[j] = static_cast<int>(i);
      comps[i] = invert(*iso);
      comps[j] = *iso;
      gens.push_back(permutation_of(assemble_complex_product_hom(ambient, ambient, comps, slots)));
    }
  const Complex& prod = *ambient.product;
  PermGroup g = close_generators(prod.skeleton().vertex_count(), prod.skeleton().dart_count(),
                                 prod.face_count(), std::move(gens), max_order);
  if (!restrict_to) return g;
  return restrict_group(g, make_restriction(prod.skeleton(), &prod, *restrict_to));
}

PermGroup vertex_action(const PermGroup& g) {
  std::set<Permutation> elems;
  int nv = 0;
  for (const auto& p : g.elements) {
    nv = static_cast<int>(p.vperm.size());
    Permutation q;
    q.vperm = p.vperm;
    elems.insert(std::move(q));
  }
  return group_from_elements(nv, 0, 0, std::move(elems));
}

namespace {

void append_cycles(std::string& out, const std::vector<int>& perm,
                   const std::vector<std::string>& labels) {
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += j < labels.size() ? labels[j] : std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
}

}  // namespace

std::string cycle_notation(const Permutation& p, const std::vector<std::string>& vlabels,
                           const std::vector<std::string>& dlabels,
                           const std::vector<std::string>& flabels) {
  std::string out;
  append_cycles(out, p.vperm, vlabels);
  append_cycles(out, p.dperm, dlabels);
  append_cycles(out, p.fperm, flabels);
  if (out.empty()) out = "id";
  return out;
}

std::vector<std::string> dart_labels(const MultiGraph& g) {
  std::vector<std::string> out(g.dart_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    out[2 * e] = g.edge(e).id + ":0";
    out[2 * e + 1] = g.edge(e).id + ":1";
  }
  return out;
}

std::vector<std::string> face_id_labels(const Complex& x) {
  std::vector<std::string> out(x.face_count());
  for (int f = 0; f < x.face_count(); ++f) out[f] = x.face(f).id;
  return out;
}

}  // namespace polycell
