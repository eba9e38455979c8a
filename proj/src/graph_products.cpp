#include "polycell/graph_products.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polycell {

namespace {

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::string edge_label_id(const std::string& a, const std::string& b, int delta) {
  return "(" + a + "," + b + "," + std::to_string(delta) + ")";
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Walk GraphHom::walk_image(const Walk& w) const {
  Walk out;
  out.start = vmap[w.start];
  out.steps.reserve(w.steps.size());
  for (const Step& s : w.steps) out.steps.push_back(step_image(s));
  return out;
}

bool GraphHom::is_bijective() const {
  if (static_cast<int>(vmap.size()) != target->vertex_count()) return false;
  if (static_cast<int>(dmap.size()) != target->dart_count()) return false;
  std::vector<char> vhit(vmap.size(), 0), dhit(dmap.size(), 0);
  for (int v : vmap) {
    if (vhit[v]) return false;
    vhit[v] = 1;
  }
  for (int d : dmap) {
    if (dhit[d]) return false;
    dhit[d] = 1;
  }
  return true;
}

bool is_graph_homomorphism(const GraphHom& h) {
  const MultiGraph& g = *h.source;
  const MultiGraph& t = *h.target;
  if (static_cast<int>(h.vmap.size()) != g.vertex_count()) return false;
  if (static_cast<int>(h.dmap.size()) != g.dart_count()) return false;
  for (int v : h.vmap)
    if (v < 0 || v >= t.vertex_count()) return false;
  for (int d : h.dmap)
    if (d < 0 || d >= t.dart_count()) return false;
  for (int e = 0; e < g.edge_count(); ++e) {
    int d0 = h.dmap[dart_of(e, 0)];
    int d1 = h.dmap[dart_of(e, 1)];
    if (d1 != dart_sibling(d0)) return false;  // edges map to edges
  }
  for (int d = 0; d < g.dart_count(); ++d)
    if (t.dart_vertex(h.dmap[d]) != h.vmap[g.dart_vertex(d)]) return false;
  return true;
}

GraphHom identity_hom(std::shared_ptr<const MultiGraph> g) {
  GraphHom h;
  h.source = g;
  h.target = g;
  h.vmap.resize(g->vertex_count());
  std::iota(h.vmap.begin(), h.vmap.end(), 0);
  h.dmap.resize(g->dart_count());
  std::iota(h.dmap.begin(), h.dmap.end(), 0);
  return h;
}

GraphHom compose(const GraphHom& second, const GraphHom& first) {
  GraphHom out;
  out.source = first.source;
  out.target = second.target;
  out.vmap.reserve(first.vmap.size());
  for (int v : first.vmap) out.vmap.push_back(second.vmap[v]);
  out.dmap.reserve(first.dmap.size());
  for (int d : first.dmap) out.dmap.push_back(second.dmap[d]);
  return out;
}

GraphHom invert(const GraphHom& h) {
  if (!h.is_bijective()) raise(Errc::BadParameter, "cannot invert a non-bijective homomorphism");
  GraphHom out;
  out.source = h.target;
  out.target = h.source;
  out.vmap.assign(h.vmap.size(), -1);
  out.dmap.assign(h.dmap.size(), -1);
  for (int v = 0; v < static_cast<int>(h.vmap.size()); ++v) out.vmap[h.vmap[v]] = v;
  for (int d = 0; d < static_cast<int>(h.dmap.size()); ++d) out.dmap[h.dmap[d]] = d;
  return out;
}

int GraphProduct::vertex_of_pair(int vl, int vr) const {
  return vertex_map_[vl * right->vertex_count() + vr];
}

std::pair<int, int> GraphProduct::pair_of_vertex(int pv) const { return vertex_labels_[pv]; }

int GraphProduct::edge_of_label(int el, int er, int delta) const {
  return edge_map_[(el * right->edge_count() + er) * 2 + delta];
}

GraphProduct::EdgeLabel GraphProduct::label_of_edge(int pe) const { return edge_labels_[pe]; }

GraphProduct tensor_product(std::shared_ptr<const MultiGraph> left,
                            std::shared_ptr<const MultiGraph> right) {
  const MultiGraph& l = *left;
  const MultiGraph& r = *right;
  GraphData data;
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int b = 0; b < r.vertex_count(); ++b)
      data.vertices.push_back(pair_id(l.vertex_id(a), r.vertex_id(b)));

  for (int ea = 0; ea < l.edge_count(); ++ea)
    for (int eb = 0; eb < r.edge_count(); ++eb)
      for (int delta = 0; delta < 2; ++delta) {
        // dart side s covers side s of ea and side s^delta of eb
        const std::string& u = l.vertex_id(l.edge(ea).ends[0]);
        const std::string& v = l.vertex_id(l.edge(ea).ends[1]);
        const std::string& u2 = r.vertex_id(r.edge(eb).ends[delta]);
        const std::string& v2 = r.vertex_id(r.edge(eb).ends[1 - delta]);
        data.edges.push_back(
            {edge_label_id(l.edge(ea).id, r.edge(eb).id, delta), pair_id(u, u2), pair_id(v, v2)});
      }

  GraphProduct out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.product = std::make_shared<MultiGraph>(data);

  const MultiGraph& p = *out.product;
  out.vertex_map_.assign(l.vertex_count() * r.vertex_count(), -1);
  out.vertex_labels_.assign(p.vertex_count(), {-1, -1});
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int b = 0; b < r.vertex_count(); ++b) {
      int pv = p.vertex_index(pair_id(l.vertex_id(a), r.vertex_id(b)));
      out.vertex_map_[a * r.vertex_count() + b] = pv;
      out.vertex_labels_[pv] = {a, b};
    }
  out.edge_map_.assign(l.edge_count() * r.edge_count() * 2, -1);
  out.edge_labels_.assign(p.edge_count(), {-1, -1, -1});
  for (int ea = 0; ea < l.edge_count(); ++ea)
    for (int eb = 0; eb < r.edge_count(); ++eb)
      for (int delta = 0; delta < 2; ++delta) {
        int pe = p.edge_index(edge_label_id(l.edge(ea).id, r.edge(eb).id, delta));
        out.edge_map_[(ea * r.edge_count() + eb) * 2 + delta] = pe;
        out.edge_labels_[pe] = {ea, eb, delta};
      }
  return out;
}

GraphHom tensor_projection(const GraphProduct& p, Side which) {
  GraphHom h;
  h.source = p.product;
  h.target = which == Side::Left ? p.left : p.right;
  h.vmap.resize(p.product->vertex_count());
  for (int pv = 0; pv < p.product->vertex_count(); ++pv) {
    auto [a, b] = p.pair_of_vertex(pv);
    h.vmap[pv] = which == Side::Left ? a : b;
  }
  h.dmap.resize(p.product->dart_count());
  for (int pe = 0; pe < p.product->edge_count(); ++pe) {
    auto lab = p.label_of_edge(pe);
    for (int s = 0; s < 2; ++s) {
      int d = which == Side::Left ? dart_of(lab.left_edge, s)
                                  : dart_of(lab.right_edge, s ^ lab.delta);
      h.dmap[dart_of(pe, s)] = d;
    }
  }
  return h;
}

std::vector<GraphHom> enumerate_graph_homomorphisms(std::shared_ptr<const MultiGraph> g,
                                                    std::shared_ptr<const MultiGraph> h,
                                                    std::uint64_t max_results) {
  const MultiGraph& src = *g;
  const MultiGraph& tgt = *h;
  std::vector<GraphHom> out;
  if (src.vertex_count() == 0) {
    out.push_back(GraphHom{g, h, {}, {}});
    return out;
  }

  // Backtrack over vertex images in index order, pruning with edge feasibility
  // (every decided edge needs at least one target edge between the images).
  std::vector<int> vmap(src.vertex_count(), -1);
  std::vector<std::vector<int>> edges_done_at(src.vertex_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    int a = src.edge(e).ends[0], b = src.edge(e).ends[1];
    edges_done_at[std::max(a, b)].push_back(e);
  }

  // For each decided edge, the list of (target edge, side-for-dart0) choices.
  auto edge_choices = [&](int e) {
    std::vector<std::pair<int, int>> choices;
    int ia = vmap[src.edge(e).ends[0]];
    int ib = vmap[src.edge(e).ends[1]];
    for (int te = 0; te < tgt.edge_count(); ++te)
      for (int s = 0; s < 2; ++s) {
        if (tgt.edge(te).ends[s] == ia && tgt.edge(te).ends[1 - s] == ib)
          choices.push_back({te, s});
      }
    return choices;  // ordered by (te, s)
  };

  std::vector<std::vector<std::pair<int, int>>> pending;  // per-edge choices in edge order
  auto emit = [&](auto&& self, int next_edge, std::vector<int>& dmap) -> bool {
    if (next_edge == src.edge_count()) {
      GraphHom hom;
      hom.source = g;
      hom.target = h;
      hom.vmap = vmap;
      hom.dmap = dmap;
      out.push_back(std::move(hom));
      return out.size() < max_results;
    }
    for (const auto& [te, s] : pending[next_edge]) {
      dmap[dart_of(next_edge, 0)] = dart_of(te, s);
      dmap[dart_of(next_edge, 1)] = dart_of(te, 1 - s);
      if (!self(self, next_edge + 1, dmap)) return false;
    }
    return true;
  };

  auto assign = [&](auto&& self, int v) -> bool {
    if (v == src.vertex_count()) {
      pending.assign(src.edge_count(), {});
      for (int e = 0; e < src.edge_count(); ++e) {
        pending[e] = edge_choices(e);
        if (pending[e].empty()) return true;  // no homomorphism with this vmap
      }
      std::vector<int> dmap(src.dart_count(), -1);
      return emit(emit, 0, dmap);
    }
    for (int iv = 0; iv < tgt.vertex_count(); ++iv) {
      vmap[v] = iv;
      bool feasible = true;
      for (int e : edges_done_at[v]) {
        int ia = vmap[src.edge(e).ends[0]];
        int ib = vmap[src.edge(e).ends[1]];
        bool any = false;
        for (int te = 0; te < tgt.edge_count() && !any; ++te) {
          auto ends = tgt.edge(te).ends;
          if ((ends[0] == ia && ends[1] == ib) || (ends[0] == ib && ends[1] == ia)) any = true;
        }
        if (!any) {
          feasible = false;
          break;
        }
      }
      if (feasible && !self(self, v + 1)) {
        vmap[v] = -1;
        return false;
      }
      vmap[v] = -1;
    }
    return true;
  };
  if (!assign(assign, 0)) raise(Errc::TooLarge, "homomorphism enumeration exceeded result budget");
  return out;
}

GraphHom universal_factor_graph(const GraphProduct& p, const GraphHom& phi_left,
                                const GraphHom& phi_right) {
  const MultiGraph& z = *phi_left.source;
  if (phi_right.source->vertex_count() != z.vertex_count() ||
      phi_right.source->edge_count() != z.edge_count())
    raise(Errc::BadParameter, "component homomorphisms have different sources");
  GraphHom out;
  out.source = phi_left.source;
  out.target = p.product;
  out.vmap.resize(z.vertex_count());
  for (int v = 0; v < z.vertex_count(); ++v)
    out.vmap[v] = p.vertex_of_pair(phi_left.vmap[v], phi_right.vmap[v]);
  out.dmap.resize(z.dart_count());
  for (int e = 0; e < z.edge_count(); ++e) {
    int dl = phi_left.dmap[dart_of(e, 0)];
    int dr = phi_right.dmap[dart_of(e, 0)];
    int sa = dart_side(dl), sb = dart_side(dr);
    int pe = p.edge_of_label(dart_edge(dl), dart_edge(dr), sa ^ sb);
    out.dmap[dart_of(e, 0)] = dart_of(pe, sa);
    out.dmap[dart_of(e, 1)] = dart_of(pe, 1 - sa);
  }
  return out;
}

Walk lift_path(const GraphProduct& p, const Walk& left, const Walk& right) {
  if (left.length() != right.length())
    raise(Errc::LengthMismatch, "walks of lengths " + std::to_string(left.length()) + " and " +
                                    std::to_string(right.length()));
  Walk out;
  out.start = p.vertex_of_pair(left.start, right.start);
  out.steps.reserve(left.steps.size());
  for (int i = 0; i < left.length(); ++i) {
    const Step& a = left.steps[i];
    const Step& b = right.steps[i];
    int sa = a.forward ? 0 : 1;
    int sb = b.forward ? 0 : 1;
    int pe = p.edge_of_label(a.edge, b.edge, sa ^ sb);
    out.steps.push_back({pe, sa == 0});
  }
  return out;
}

Walk cycle_variant(const MultiGraph& g, const Walk& c, int i, int delta) {
  require_closed_walk(g, c);
  Walk rotated = rotate_walk(g, c, i);
  return delta == 0 ? rotated : reverse_walk(g, rotated);
}

Walk lift_cycle(const GraphProduct& p, const Walk& c1, const Walk& c2, int i, int delta) {
  require_closed_walk(*p.left, c1);
  require_closed_walk(*p.right, c2);
  if (delta != 0 && delta != 1) raise(Errc::BadParameter, "delta must be 0 or 1");
  const int n = c1.length();
  const int m = c2.length();
  i = ((i % m) + m) % m;  // normalized before any range use
  const long long L = lcm_ll(n, m);
  Walk a = repeat_walk(*p.left, c1, static_cast<int>(L / n));
  Walk b = repeat_walk(*p.right, cycle_variant(*p.right, c2, i, delta), static_cast<int>(L / m));
  return lift_path(p, a, b);
}

int S0Product::vertex_of_pair(int vl, int vr) const {
  return vertex_map_[vl * right->vertex_count() + vr];
}

S0Product direct_product_s0(std::shared_ptr<const MultiGraph> left,
                            std::shared_ptr<const MultiGraph> right) {
  if (!in_s0(*left) || !in_s0(*right))
    raise(Errc::NotInS0, "direct product requires graphs without parallel edges");
  const MultiGraph& l = *left;
  const MultiGraph& r = *right;
  GraphData data;
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int b = 0; b < r.vertex_count(); ++b)
      data.vertices.push_back(pair_id(l.vertex_id(a), r.vertex_id(b)));

  std::set<std::pair<std::string, std::string>> seen;
  auto add_edge = [&](int u1, int u2, int v1, int v2) {
    std::string a = pair_id(l.vertex_id(u1), r.vertex_id(u2));
    std::string b = pair_id(l.vertex_id(v1), r.vertex_id(v2));
    if (b < a) std::swap(a, b);
    if (seen.insert({a, b}).second) data.edges.push_back({"e" + a + b, a, b});
  };
  for (int ea = 0; ea < l.edge_count(); ++ea)
    for (int eb = 0; eb < r.edge_count(); ++eb) {
      int x = l.edge(ea).ends[0], y = l.edge(ea).ends[1];
      int x2 = r.edge(eb).ends[0], y2 = r.edge(eb).ends[1];
      add_edge(x, x2, y, y2);
      add_edge(x, y2, y, x2);
    }

  S0Product out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.product = std::make_shared<MultiGraph>(data);
  out.vertex_map_.assign(l.vertex_count() * r.vertex_count(), -1);
  out.vertex_labels_.assign(out.product->vertex_count(), {-1, -1});
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int b = 0; b < r.vertex_count(); ++b) {
      int pv = out.product->vertex_index(pair_id(l.vertex_id(a), r.vertex_id(b)));
      out.vertex_map_[a * r.vertex_count() + b] = pv;
      out.vertex_labels_[pv] = {a, b};
    }
  return out;
}

int CartesianProduct::vertex_of_pair(int vl, int vr) const {
  return vertex_map_[vl * right->vertex_count() + vr];
}

CartesianProduct cartesian_product(std::shared_ptr<const MultiGraph> left,
                                   std::shared_ptr<const MultiGraph> right) {
  if (!is_simple(*left) || !is_simple(*right))
    raise(Errc::NotSimple, "cartesian product requires simple loop-free graphs");
  const MultiGraph& l = *left;
  const MultiGraph& r = *right;
  GraphData data;
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int b = 0; b < r.vertex_count(); ++b)
      data.vertices.push_back(pair_id(l.vertex_id(a), r.vertex_id(b)));
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int eb = 0; eb < r.edge_count(); ++eb)
      data.edges.push_back({"(" + l.vertex_id(a) + "|" + r.edge(eb).id + ")",
                            pair_id(l.vertex_id(a), r.vertex_id(r.edge(eb).ends[0])),
                            pair_id(l.vertex_id(a), r.vertex_id(r.edge(eb).ends[1]))});
  for (int ea = 0; ea < l.edge_count(); ++ea)
    for (int b = 0; b < r.vertex_count(); ++b)
      data.edges.push_back({"(" + l.edge(ea).id + "|" + r.vertex_id(b) + ")",
                            pair_id(l.vertex_id(l.edge(ea).ends[0]), r.vertex_id(b)),
                            pair_id(l.vertex_id(l.edge(ea).ends[1]), r.vertex_id(b))});

  CartesianProduct out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.product = std::make_shared<MultiGraph>(data);
  out.vertex_map_.assign(l.vertex_count() * r.vertex_count(), -1);
  for (int a = 0; a < l.vertex_count(); ++a)
    for (int b = 0; b < r.vertex_count(); ++b)
      out.vertex_map_[a * r.vertex_count() + b] =
          out.product->vertex_index(pair_id(l.vertex_id(a), r.vertex_id(b)));
  return out;
}

NaryGraphProduct nary_tensor_product(std::vector<std::shared_ptr<const MultiGraph>> factors) {
  if (factors.empty()) raise(Errc::BadParameter, "need at least one factor");
  NaryGraphProduct out;
  out.factors = std::move(factors);
  out.product = out.factors[0];
  for (std::size_t k = 1; k < out.factors.size(); ++k) {
    out.steps.push_back(tensor_product(out.product, out.factors[k]));
    out.product = out.steps.back().product;
  }
  return out;
}

GraphHom NaryGraphProduct::projection(int j) const {
  const int m = static_cast<int>(factors.size());
  if (j < 0 || j >= m) raise(Errc::IndexOutOfRange, "factor index");
  if (m == 1) return identity_hom(product);
  if (j == m - 1) return tensor_projection(steps.back(), Side::Right);
  GraphHom h = tensor_projection(steps.back(), Side::Left);
  for (int k = static_cast<int>(steps.size()) - 2; k >= 0; --k) {
    if (j == k + 1) return compose(tensor_projection(steps[k], Side::Right), h);
    h = compose(tensor_projection(steps[k], Side::Left), h);
  }
  return h;  // j == 0
}

std::vector<int> NaryGraphProduct::vertex_tuple(int pv) const {
  std::vector<int> tuple(factors.size());
  int cur = pv;
  for (int k = static_cast<int>(steps.size()) - 1; k >= 0; --k) {
    auto [a, b] = steps[k].pair_of_vertex(cur);
    tuple[k + 1] = b;
    cur = a;
  }
  tuple[0] = cur;
  return tuple;
}

GraphHom nary_universal_factor(const NaryGraphProduct& to, const std::vector<GraphHom>& phis) {
  if (phis.size() != to.factors.size()) raise(Errc::LengthMismatch, "one hom per factor required");
  GraphHom acc = phis[0];
  for (std::size_t k = 0; k + 1 < phis.size(); ++k)
    acc = universal_factor_graph(to.steps[k], acc, phis[k + 1]);
  return acc;
}

GraphHom assemble_product_hom(const NaryGraphProduct& from, const NaryGraphProduct& to,
                              const std::vector<GraphHom>& component,
                              const std::vector<int>& source_slot) {
  if (component.size() != to.factors.size() || source_slot.size() != to.factors.size())
    raise(Errc::LengthMismatch, "need one component hom and source slot per target factor");
  std::vector<GraphHom> phis;
  phis.reserve(component.size());
  for (std::size_t i = 0; i < component.size(); ++i)
    phis.push_back(compose(component[i], from.projection(source_slot[i])));
  return nary_universal_factor(to, phis);
}

}  // namespace polycell
