#include "polycell/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace polycell {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::DanglingEdge: return "DanglingEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::EmptyWalk: return "EmptyWalk";
    case Errc::InvalidWalk: return "InvalidWalk";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RangeError: return "RangeError";
    case Errc::NotInS0: return "NotInS0";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotOrdinary: return "NotOrdinary";
    case Errc::OddFaces: return "OddFaces";
    case Errc::NotIncident: return "NotIncident";
    case Errc::InvalidSplit: return "InvalidSplit";
    case Errc::BadParameter: return "BadParameter";
    case Errc::LabelMapMissing: return "LabelMapMissing";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Budget: return "Budget";
    case Errc::ParseError: return "ParseError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "Error";
}

std::optional<Violation> validate(const GraphData& data) {
  std::unordered_set<std::string> vseen;
  for (const auto& v : data.vertices) {
    if (v.empty()) return Violation{Errc::SemanticError, "empty vertex id"};
    if (!vseen.insert(v).second) return Violation{Errc::DuplicateId, "vertex '" + v + "'"};
  }
  std::unordered_set<std::string> eseen;
  for (const auto& e : data.edges) {
    if (e.id.empty()) return Violation{Errc::SemanticError, "empty edge id"};
    if (!eseen.insert(e.id).second) return Violation{Errc::DuplicateId, "edge '" + e.id + "'"};
    if (!vseen.count(e.end0))
      return Violation{Errc::DanglingEdge, "edge '" + e.id + "' end '" + e.end0 + "'"};
    if (!vseen.count(e.end1))
      return Violation{Errc::DanglingEdge, "edge '" + e.id + "' end '" + e.end1 + "'"};
  }
  return std::nullopt;
}

MultiGraph::MultiGraph(const GraphData& data) {
  if (auto bad = validate(data)) raise(bad->code, bad->detail);

  vertex_ids_ = data.vertices;
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  for (int i = 0; i < static_cast<int>(vertex_ids_.size()); ++i) vertex_lookup_[vertex_ids_[i]] = i;

  std::vector<GraphData::EdgeSpec> sorted = data.edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  edges_.reserve(sorted.size());
  for (const auto& spec : sorted) {
    Edge e;
    e.id = spec.id;
    e.ends = {vertex_lookup_.at(spec.end0), vertex_lookup_.at(spec.end1)};
    edge_lookup_[e.id] = static_cast<int>(edges_.size());
    edges_.push_back(std::move(e));
  }

  incidence_.assign(vertex_ids_.size(), {});
  for (int e = 0; e < edge_count(); ++e) {
    incidence_[edges_[e].ends[0]].push_back({e, 0});
    incidence_[edges_[e].ends[1]].push_back({e, 1});
  }
  for (auto& inc : incidence_) std::sort(inc.begin(), inc.end());
}

MultiGraph::MultiGraph(std::vector<std::string> vertices, std::vector<GraphData::EdgeSpec> edges)
    : MultiGraph(GraphData{std::move(vertices), std::move(edges)}) {}

int MultiGraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int MultiGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? -1 : it->second;
}

int MultiGraph::require_vertex(const std::string& id) const {
  int v = vertex_index(id);
  if (v < 0) raise(Errc::UnknownVertex, "'" + id + "'");
  return v;
}

int MultiGraph::require_edge(const std::string& id) const {
  int e = edge_index(id);
  if (e < 0) raise(Errc::UnknownEdge, "'" + id + "'");
  return e;
}

int MultiGraph::multiplicity(int u, int v) const {
  int count = 0;
  for (const auto& [e, side] : incidence_[u]) {
    if (is_loop(e)) {
      if (side == 0 && u == v) ++count;  // each loop appears twice in the incidence list
    } else if (edges_[e].ends[side == 0 ? 1 : 0] == v) {
      ++count;
    }
  }
  return count;
}

GraphData MultiGraph::data() const {
  GraphData d;
  d.vertices = vertex_ids_;
  for (const auto& e : edges_) d.edges.push_back({e.id, vertex_ids_[e.ends[0]], vertex_ids_[e.ends[1]]});
  return d;
}

int step_source(const MultiGraph& g, const Step& s) { return g.edge(s.edge).ends[s.forward ? 0 : 1]; }
int step_target(const MultiGraph& g, const Step& s) { return g.edge(s.edge).ends[s.forward ? 1 : 0]; }

bool walk_valid(const MultiGraph& g, const Walk& w) {
  if (w.start < 0 || w.start >= g.vertex_count()) return false;
  int at = w.start;
  for (const Step& s : w.steps) {
    if (s.edge < 0 || s.edge >= g.edge_count()) return false;
    if (step_source(g, s) != at) return false;
    at = step_target(g, s);
  }
  return true;
}

bool walk_closed(const MultiGraph& g, const Walk& w) {
  if (!walk_valid(g, w)) return false;
  int at = w.start;
  for (const Step& s : w.steps) at = step_target(g, s);
  return at == w.start;
}

void require_closed_walk(const MultiGraph& g, const Walk& w) {
  if (w.steps.empty()) raise(Errc::EmptyWalk, "closed walk must have at least one step");
  if (!walk_valid(g, w)) raise(Errc::InvalidWalk, "steps do not chain from the start vertex");
  if (!walk_closed(g, w)) raise(Errc::InvalidWalk, "walk does not return to its start");
}

std::vector<int> walk_vertices(const MultiGraph& g, const Walk& w) {
  std::vector<int> out;
  out.reserve(w.steps.size() + 1);
  out.push_back(w.start);
  int at = w.start;
  for (const Step& s : w.steps) {
    at = step_target(g, s);
    out.push_back(at);
  }
  return out;
}

Walk rotate_walk(const MultiGraph& g, const Walk& w, int offset) {
  require_closed_walk(g, w);
  const int n = w.length();
  offset = ((offset % n) + n) % n;
  Walk out;
  out.steps.reserve(n);
  for (int i = 0; i < n; ++i) out.steps.push_back(w.steps[(offset + i) % n]);
  out.start = step_source(g, out.steps[0]);
  return out;
}

Walk reverse_walk(const MultiGraph& g, const Walk& w) {
  Walk out;
  out.start = w.start;
  out.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    out.steps.push_back({it->edge, !it->forward});
  if (!out.steps.empty()) out.start = step_source(g, out.steps[0]);
  return out;
}

Walk repeat_walk(const MultiGraph& g, const Walk& w, int times) {
  require_closed_walk(g, w);
  if (times < 1) raise(Errc::BadParameter, "repeat count must be >= 1");
  Walk out;
  out.start = w.start;
  out.steps.reserve(w.steps.size() * times);
  for (int t = 0; t < times; ++t)
    out.steps.insert(out.steps.end(), w.steps.begin(), w.steps.end());
  return out;
}

ReducedWalk reduce_closed_walk(const MultiGraph& g, const Walk& w) {
  require_closed_walk(g, w);
  const int n = w.length();
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = 0; i + p < n && periodic; ++i)
      if (!(w.steps[i] == w.steps[i + p])) periodic = false;
    if (periodic) {
      Walk prim;
      prim.start = w.start;
      prim.steps.assign(w.steps.begin(), w.steps.begin() + p);
      return {prim, n / p};
    }
  }
  return {w, 1};  // unreachable: p == n always periodic
}

namespace {

std::string step_token(const MultiGraph& g, const Step& s) {
  return g.edge(s.edge).id + (s.forward ? "+" : "-");
}

std::vector<Step> min_rotation(const std::vector<Step>& steps) {
  const int n = static_cast<int>(steps.size());
  int best = 0;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const Step& a = steps[(k + i) % n];
      const Step& b = steps[(best + i) % n];
      if (a < b) { best = k; break; }
      if (b < a) break;
    }
  }
  std::vector<Step> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(steps[(best + i) % n]);
  return out;
}

}  // namespace

std::string canonical_cycle_key(const MultiGraph& g, const Walk& w, bool include_reversal) {
  require_closed_walk(g, w);
  std::vector<Step> best = min_rotation(w.steps);
  if (include_reversal) {
    std::vector<Step> rev = min_rotation(reverse_walk(g, w).steps);
    if (rev < best) best = rev;
  }
  std::string key;
  for (const Step& s : best) {
    key += step_token(g, s);
    key += ' ';
  }
  if (!key.empty()) key.pop_back();
  return key;
}

ComponentSplit components(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int parts = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = parts;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& [e, side] : g.incident_darts(v)) {
        int u = g.edge(e).ends[side == 0 ? 1 : 0];
        if (comp[u] < 0) {
          comp[u] = parts;
          q.push(u);
        }
      }
    }
    ++parts;
  }

  ComponentSplit out;
  out.component_of = comp;
  out.vertex_sets.assign(parts, {});
  for (int v = 0; v < n; ++v) out.vertex_sets[comp[v]].push_back(v);

  for (int p = 0; p < parts; ++p) {
    GraphData d;
    for (int v : out.vertex_sets[p]) d.vertices.push_back(g.vertex_id(v));
    for (int e = 0; e < g.edge_count(); ++e)
      if (comp[g.edge(e).ends[0]] == p)
        d.edges.push_back({g.edge(e).id, g.vertex_id(g.edge(e).ends[0]), g.vertex_id(g.edge(e).ends[1])});
    out.subgraphs.emplace_back(d);
  }
  return out;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g).vertex_sets.size() == 1;
}

bool is_bipartite(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& [e, side] : g.incident_darts(v)) {
        int u = g.edge(e).ends[side == 0 ? 1 : 0];
        if (u == v) return false;  // loop
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_odd_closed_walk(const MultiGraph& g) { return !is_bipartite(g); }

bool in_s0(const MultiGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto ends = g.edge(e).ends;
    std::pair<int, int> key{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool is_simple(const MultiGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) return false;
  return in_s0(g);
}

std::vector<std::vector<int>> neighbor_sets(const MultiGraph& g) {
  std::vector<std::vector<int>> sets(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> ns;
    for (const auto& [e, side] : g.incident_darts(v)) ns.insert(g.edge(e).ends[side == 0 ? 1 : 0]);
    sets[v].assign(ns.begin(), ns.end());
  }
  return sets;
}

bool is_r_thin(const MultiGraph& g) {
  auto sets = neighbor_sets(g);
  std::set<std::vector<int>> distinct(sets.begin(), sets.end());
  return distinct.size() == sets.size();
}

int shortest_path_distance(const MultiGraph& g, int from, int to) {
  if (from < 0 || from >= g.vertex_count() || to < 0 || to >= g.vertex_count())
    raise(Errc::IndexOutOfRange, "vertex index");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[from] = 0;
  std::queue<int> q;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == to) return dist[v];
    for (const auto& [e, side] : g.incident_darts(v)) {
      int u = g.edge(e).ends[side == 0 ? 1 : 0];
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist[to];
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b, const std::string& tag_a,
                          const std::string& tag_b) {
  GraphData d;
  for (const auto& v : a.vertex_ids()) d.vertices.push_back(tag_a + v);
  for (const auto& v : b.vertex_ids()) d.vertices.push_back(tag_b + v);
  for (const auto& e : a.edges())
    d.edges.push_back({tag_a + e.id, tag_a + a.vertex_id(e.ends[0]), tag_a + a.vertex_id(e.ends[1])});
  for (const auto& e : b.edges())
    d.edges.push_back({tag_b + e.id, tag_b + b.vertex_id(e.ends[0]), tag_b + b.vertex_id(e.ends[1])});
  return MultiGraph(d);
}

}  // namespace polycell
