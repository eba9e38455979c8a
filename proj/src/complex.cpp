#include "polycell/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "polycell/snf.hpp"

namespace polycell {

std::optional<Violation> validate(const ComplexData& data) {
  if (auto bad = validate(data.skeleton)) return bad;
  MultiGraph g(data.skeleton);
  std::unordered_set<std::string> fseen;
  for (const auto& f : data.faces) {
    if (f.id.empty()) return Violation{Errc::SemanticError, "empty face id"};
    if (!fseen.insert(f.id).second) return Violation{Errc::DuplicateId, "face '" + f.id + "'"};
    if (f.steps.empty()) return Violation{Errc::EmptyWalk, "face '" + f.id + "' has no steps"};
    int at = -1;
    for (const auto& [eid, fwd] : f.steps) {
      int e = g.edge_index(eid);
      if (e < 0) return Violation{Errc::UnknownEdge, "face '" + f.id + "' step '" + eid + "'"};
      int src = g.edge(e).ends[fwd ? 0 : 1];
      int dst = g.edge(e).ends[fwd ? 1 : 0];
      if (at >= 0 && src != at)
        return Violation{Errc::InvalidWalk, "face '" + f.id + "' steps do not chain"};
      at = dst;
    }
    int start = g.edge(g.edge_index(f.steps[0].first)).ends[f.steps[0].second ? 0 : 1];
    if (at != start)
      return Violation{Errc::InvalidWalk, "face '" + f.id + "' boundary is not closed"};
  }
  return std::nullopt;
}

Complex::Complex(const ComplexData& data) {
  if (auto bad = validate(data)) raise(bad->code, bad->detail);
  skel_ = std::make_shared<MultiGraph>(data.skeleton);
  for (const auto& spec : data.faces) {
    Face f;
    f.id = spec.id;
    for (const auto& [eid, fwd] : spec.steps)
      f.boundary.steps.push_back({skel_->edge_index(eid), fwd});
    f.boundary.start = step_source(*skel_, f.boundary.steps[0]);
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) { return a.id < b.id; });
}

Complex::Complex(MultiGraph skeleton, std::vector<Face> faces)
    : Complex(std::make_shared<const MultiGraph>(std::move(skeleton)), std::move(faces)) {}

Complex::Complex(std::shared_ptr<const MultiGraph> skeleton, std::vector<Face> faces)
    : skel_(std::move(skeleton)) {
  std::unordered_set<std::string> seen;
  for (auto& f : faces) {
    if (f.id.empty()) raise(Errc::SemanticError, "empty face id");
    if (!seen.insert(f.id).second) raise(Errc::DuplicateId, "face '" + f.id + "'");
    require_closed_walk(*skel_, f.boundary);
  }
  faces_ = std::move(faces);
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) { return a.id < b.id; });
}

int Complex::face_index(const std::string& id) const {
  for (int f = 0; f < face_count(); ++f)
    if (faces_[f].id == id) return f;
  return -1;
}

int Complex::require_face(const std::string& id) const {
  int f = face_index(id);
  if (f < 0) raise(Errc::UnknownFace, "'" + id + "'");
  return f;
}

ComplexData Complex::data() const {
  ComplexData d;
  d.skeleton = skel_->data();
  for (const auto& f : faces_) {
    ComplexData::FaceSpec spec;
    spec.id = f.id;
    for (const Step& s : f.boundary.steps) spec.steps.push_back({skel_->edge(s.edge).id, s.forward});
    d.faces.push_back(std::move(spec));
  }
  return d;
}

int corner_vertex(const Complex& x, const Corner& c) {
  const Walk& w = x.face(c.face).boundary;
  if (c.position < 0 || c.position >= w.length()) raise(Errc::IndexOutOfRange, "corner position");
  return step_source(x.skeleton(), w.steps[c.position]);
}

int corner_dart(const Complex& x, const Corner& c, int side) {
  const Walk& w = x.face(c.face).boundary;
  const int n = w.length();
  if (c.position < 0 || c.position >= n) raise(Errc::IndexOutOfRange, "corner position");
  if (side == 0) return step_exit_dart(w.steps[(c.position + n - 1) % n]);
  if (side == 1) return step_enter_dart(w.steps[c.position]);
  raise(Errc::IndexOutOfRange, "corner side");
}

std::vector<Flag> flags(const Complex& x) {
  std::vector<Flag> out;
  for (int f = 0; f < x.face_count(); ++f)
    for (int j = 0; j < x.face(f).boundary.length(); ++j)
      for (int s = 0; s < 2; ++s) out.push_back({Corner{f, j}, s});
  return out;
}

std::vector<int> flag_offsets(const Complex& x) {
  std::vector<int> off(x.face_count() + 1, 0);
  for (int f = 0; f < x.face_count(); ++f)
    off[f + 1] = off[f] + 2 * x.face(f).boundary.length();
  return off;
}

std::vector<Corner> corners_at_vertex(const Complex& x, int v) {
  std::vector<Corner> out;
  for (int f = 0; f < x.face_count(); ++f) {
    const Walk& w = x.face(f).boundary;
    for (int j = 0; j < w.length(); ++j)
      if (step_source(x.skeleton(), w.steps[j]) == v) out.push_back({f, j});
  }
  return out;
}

LinkGraph link(const Complex& x, int v) {
  const MultiGraph& g = x.skeleton();
  if (v < 0 || v >= g.vertex_count()) raise(Errc::IndexOutOfRange, "vertex index");

  GraphData data;
  std::vector<int> darts;
  for (const auto& [e, side] : g.incident_darts(v)) {
    darts.push_back(dart_of(e, side));
    data.vertices.push_back(g.edge(e).id + ":" + std::to_string(side));
  }
  auto dart_vertex_id = [&](int d) {
    return g.edge(dart_edge(d)).id + ":" + std::to_string(dart_side(d));
  };

  std::vector<Corner> corners = corners_at_vertex(x, v);
  for (const Corner& c : corners) {
    int d0 = corner_dart(x, c, 0);
    int d1 = corner_dart(x, c, 1);
    data.edges.push_back({x.face(c.face).id + "@" + std::to_string(c.position), dart_vertex_id(d0),
                          dart_vertex_id(d1)});
  }

  LinkGraph out;
  out.graph = MultiGraph(data);
  out.dart_of_vertex.assign(out.graph.vertex_count(), -1);
  for (int d : darts)
    out.dart_of_vertex[out.graph.require_vertex(dart_vertex_id(d))] = d;
  out.corner_of_edge.assign(out.graph.edge_count(), Corner{});
  for (const Corner& c : corners) {
    int e = out.graph.require_edge(x.face(c.face).id + "@" + std::to_string(c.position));
    out.corner_of_edge[e] = c;
  }
  return out;
}

long long euler_characteristic(const Complex& x) {
  return static_cast<long long>(x.skeleton().vertex_count()) - x.skeleton().edge_count() +
         x.face_count();
}

Homology homology_h1(const Complex& x) {
  const MultiGraph& g = x.skeleton();
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  const int nf = x.face_count();

  IntMatrix d1(nv, ne);  // edge boundary: end1 - end0
  for (int e = 0; e < ne; ++e) {
    d1.at(g.edge(e).ends[1], e) += 1;
    d1.at(g.edge(e).ends[0], e) -= 1;
  }
  IntMatrix d2(ne, nf);  // face boundary: signed edge traversal counts
  for (int f = 0; f < nf; ++f)
    for (const Step& s : x.face(f).boundary.steps) d2.at(s.edge, f) += s.forward ? 1 : -1;

  auto s1 = smith_normal_form(std::move(d1));
  auto s2 = smith_normal_form(std::move(d2));
  const long long rank1 = static_cast<long long>(s1.size());
  const long long rank2 = static_cast<long long>(s2.size());

  Homology h;
  h.betti = ne - rank1 - rank2;
  for (long long d : s2)
    if (d > 1) h.torsion.push_back(d);
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

SimplyConnectedVerdict simply_connected_necessary(const Complex& x) {
  if (euler_characteristic(x) < 1) return SimplyConnectedVerdict::FailsChi;
  Homology h = homology_h1(x);
  if (h.betti != 0 || !h.torsion.empty()) return SimplyConnectedVerdict::FailsH1;
  return SimplyConnectedVerdict::Passes;
}

namespace {

// Boundary vertex/edge sets of a face.
std::set<int> face_vertex_set(const Complex& x, int f) {
  std::set<int> out;
  for (const Step& s : x.face(f).boundary.steps) out.insert(step_source(x.skeleton(), s));
  return out;
}

std::set<int> face_edge_set(const Complex& x, int f) {
  std::set<int> out;
  for (const Step& s : x.face(f).boundary.steps) out.insert(s.edge);
  return out;
}

}  // namespace

bool is_polygonal(const Complex& x) {
  const MultiGraph& g = x.skeleton();
  if (!is_simple(g)) return false;  // a loop or parallel pair breaks 1-cell conditions

  // Attaching maps injective on vertices (and hence on edges).
  for (int f = 0; f < x.face_count(); ++f) {
    auto verts = walk_vertices(g, x.face(f).boundary);
    verts.pop_back();
    std::set<int> distinct(verts.begin(), verts.end());
    if (distinct.size() != verts.size()) return false;
  }

  std::vector<std::set<int>> fverts(x.face_count()), fedges(x.face_count());
  for (int f = 0; f < x.face_count(); ++f) {
    fverts[f] = face_vertex_set(x, f);
    fedges[f] = face_edge_set(x, f);
  }

  // Closed edge against closed face: an edge not on the boundary may meet the
  // face in at most one endpoint.
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = 0; f < x.face_count(); ++f) {
      if (fedges[f].count(e)) continue;
      int hits = static_cast<int>(fverts[f].count(g.edge(e).ends[0])) +
                 static_cast<int>(fverts[f].count(g.edge(e).ends[1]));
      if (hits > 1) return false;
    }

  // Closed face against closed face: empty, one vertex, or one edge with its ends.
  for (int f1 = 0; f1 < x.face_count(); ++f1)
    for (int f2 = f1 + 1; f2 < x.face_count(); ++f2) {
      std::vector<int> shared_edges;
      std::set_intersection(fedges[f1].begin(), fedges[f1].end(), fedges[f2].begin(),
                            fedges[f2].end(), std::back_inserter(shared_edges));
      std::vector<int> shared_verts;
      std::set_intersection(fverts[f1].begin(), fverts[f1].end(), fverts[f2].begin(),
                            fverts[f2].end(), std::back_inserter(shared_verts));
      if (shared_edges.size() > 1) return false;
      if (shared_edges.size() == 1) {
        const auto& ends = g.edge(shared_edges[0]).ends;
        std::set<int> expect{ends[0], ends[1]};
        if (std::set<int>(shared_verts.begin(), shared_verts.end()) != expect) return false;
      } else if (shared_verts.size() > 1) {
        return false;
      }
    }
  return true;
}

bool is_simple_complex(const Complex& x, bool reversal_in_keys) {
  if (x.face_count() == 0) return false;
  std::set<std::string> keys;
  for (int f = 0; f < x.face_count(); ++f) {
    ReducedWalk red = reduce_closed_walk(x.skeleton(), x.face(f).boundary);
    if (red.multiplicity != 1) return false;
    if (!keys.insert(canonical_cycle_key(x.skeleton(), x.face(f).boundary, reversal_in_keys)).second)
      return false;
  }
  return true;
}

namespace {

// Uniform face length; 0 when faces are absent or lengths differ.
int uniform_face_length(const Complex& x) {
  int len = 0;
  for (int f = 0; f < x.face_count(); ++f) {
    int n = x.face(f).boundary.length();
    if (len == 0) len = n;
    if (n != len) return 0;
  }
  return len;
}

}  // namespace

bool is_elementary(const Complex& x) {
  if (!is_connected(x.skeleton())) return false;
  if (x.face_count() == 0) return false;
  const int len = uniform_face_length(x);
  if (len < 2 || len % 2 != 0) return false;
  const int half = len / 2;

  std::map<std::pair<int, int>, int> antipodal_pairs;  // vertex pair -> count
  for (int f = 0; f < x.face_count(); ++f) {
    auto verts = walk_vertices(x.skeleton(), x.face(f).boundary);
    for (int j = 0; j < half; ++j) {
      int u = verts[j], v = verts[j + half];
      if (u == v) return false;  // antipodal corners on one vertex
      ++antipodal_pairs[{std::min(u, v), std::max(u, v)}];
    }
  }
  for (const auto& [pair, count] : antipodal_pairs)
    if (count > 1) return false;
  return true;
}

bool is_ordinary(const Complex& x) {
  if (!is_connected(x.skeleton())) return false;
  if (x.face_count() == 0) return false;
  const int len = uniform_face_length(x);
  if (len < 4 || len % 2 != 0) return false;

  std::vector<std::vector<int>> positions_at(x.face_count());
  std::vector<std::set<int>> fverts(x.face_count());
  std::vector<std::vector<int>> verts_of(x.face_count());
  for (int f = 0; f < x.face_count(); ++f) {
    auto verts = walk_vertices(x.skeleton(), x.face(f).boundary);
    verts.pop_back();
    verts_of[f] = verts;
    fverts[f] = std::set<int>(verts.begin(), verts.end());
  }

  // (1) Corners of one face at a common vertex have equal parity.
  for (int f = 0; f < x.face_count(); ++f)
    for (int j = 0; j < len; ++j)
      for (int k = j + 1; k < len; ++k)
        if (verts_of[f][j] == verts_of[f][k] && (j - k) % 2 != 0) return false;

  // (2) Corners of f meeting another face f' form one corner or two
  // cyclically consecutive corners.
  for (int f = 0; f < x.face_count(); ++f)
    for (int f2 = 0; f2 < x.face_count(); ++f2) {
      if (f == f2) continue;
      std::vector<int> meet;
      for (int j = 0; j < len; ++j)
        if (fverts[f2].count(verts_of[f][j])) meet.push_back(j);
      if (meet.empty()) continue;
      if (meet.size() == 1) continue;
      if (meet.size() == 2) {
        int a = meet[0], b = meet[1];
        if ((b - a) == 1 || (a == 0 && b == len - 1)) continue;
      }
      return false;
    }
  return true;
}

Complex component_complex(const Complex& x, int v) {
  const MultiGraph& g = x.skeleton();
  if (v < 0 || v >= g.vertex_count()) raise(Errc::IndexOutOfRange, "vertex index");
  ComponentSplit split = components(g);
  int part = split.component_of[v];

  ComplexData d;
  d.skeleton = split.subgraphs[part].data();
  for (int f = 0; f < x.face_count(); ++f) {
    const Walk& w = x.face(f).boundary;
    if (split.component_of[w.start] != part) continue;
    ComplexData::FaceSpec spec;
    spec.id = x.face(f).id;
    for (const Step& s : w.steps) spec.steps.push_back({g.edge(s.edge).id, s.forward});
    d.faces.push_back(std::move(spec));
  }
  return Complex(d);
}

bool complexes_equal(const Complex& a, const Complex& b) {
  if (a.skeleton().vertex_ids() != b.skeleton().vertex_ids()) return false;
  if (a.skeleton().edge_count() != b.skeleton().edge_count()) return false;
  for (int e = 0; e < a.skeleton().edge_count(); ++e) {
    if (a.skeleton().edge(e).id != b.skeleton().edge(e).id) return false;
    if (a.skeleton().edge(e).ends != b.skeleton().edge(e).ends) return false;
  }
  if (a.face_count() != b.face_count()) return false;
  for (int f = 0; f < a.face_count(); ++f) {
    if (a.face(f).id != b.face(f).id) return false;
    if (!(a.face(f).boundary == b.face(f).boundary)) return false;
  }
  return true;
}

}  // namespace polycell
