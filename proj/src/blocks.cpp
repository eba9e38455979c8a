#include "polycell/blocks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "polycell/error.hpp"

namespace polycell {

namespace {

// Uniform face length of a factor; OddFaces when lengths differ or are odd.
int uniform_even_length(const Complex& x, std::size_t slot) {
  if (x.face_count() == 0)
    raise(Errc::OddFaces, "factor " + std::to_string(slot) + " has no faces");
  int len = x.face(0).boundary.length();
  for (const Face& f : x.faces())
    if (f.boundary.length() != len)
      raise(Errc::OddFaces, "factor " + std::to_string(slot) + " has mixed face lengths");
  if (len % 2 != 0)
    raise(Errc::OddFaces, "factor " + std::to_string(slot) + " has odd face length");
  return len;
}

std::vector<std::set<int>> face_vertex_sets(const Complex& x) {
  std::vector<std::set<int>> out(x.face_count());
  for (int f = 0; f < x.face_count(); ++f) {
    auto vs = walk_vertices(x.skeleton(), x.face(f).boundary);
    out[f] = std::set<int>(vs.begin(), vs.end());
  }
  return out;
}

bool sets_meet(const std::set<int>& a, const std::set<int>& b) {
  for (int v : a)
    if (b.count(v)) return true;
  return false;
}

}  // namespace

std::vector<FaceBlock> face_blocks_by_label(const NaryComplexProduct& p) {
  if (!p.product || p.factors.empty())
    raise(Errc::LabelMapMissing, "product carries no factor labels");
  for (std::size_t i = 0; i < p.factors.size(); ++i) uniform_even_length(*p.factors[i], i);

  std::map<std::pair<std::vector<int>, std::vector<int>>, FaceBlock> groups;
  for (int pf = 0; pf < p.product->face_count(); ++pf) {
    std::vector<FaceImage> tuple = p.face_tuple(pf);
    std::vector<int> gens, parity;
    for (const FaceImage& im : tuple) gens.push_back(im.face);
    for (const FaceImage& im : tuple) parity.push_back(((im.rot - tuple[0].rot) % 2 + 2) % 2);
    auto& blk = groups[{gens, parity}];
    blk.members.push_back(pf);
    blk.generators = gens;
    blk.parity = parity;
  }
  std::vector<FaceBlock> out;
  for (auto& [key, blk] : groups) out.push_back(std::move(blk));
  return out;
}

std::map<std::pair<int, int>, std::vector<int>> antipodal_pair_faces(const Complex& x) {
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (int f = 0; f < x.face_count(); ++f) {
    int len = x.face(f).boundary.length();
    if (len % 2 != 0) continue;
    int n = len / 2;
    std::set<std::pair<int, int>> seen;
    for (int j = 0; j < n; ++j) {
      int u = corner_vertex(x, Corner{f, j});
      int v = corner_vertex(x, Corner{f, j + n});
      std::pair<int, int> key{std::min(u, v), std::max(u, v)};
      if (seen.insert(key).second) out[key].push_back(f);
    }
  }
  return out;
}

std::vector<FaceBlock> face_blocks_intrinsic(const Complex& x, int factor_count) {
  if (factor_count < 1) raise(Errc::BadParameter, "factor count must be positive");
  std::vector<int> parent(x.face_count());
  for (int f = 0; f < x.face_count(); ++f) parent[f] = f;
  std::function<int(int)> find = [&](int f) {
    while (parent[f] != f) f = parent[f] = parent[parent[f]];
    return f;
  };
  for (const auto& [pair, faces] : antipodal_pair_faces(x))
    for (std::size_t i = 1; i < faces.size(); ++i) parent[find(faces[0])] = find(faces[i]);
  std::map<int, FaceBlock> blocks;
  for (int f = 0; f < x.face_count(); ++f) blocks[find(f)].members.push_back(f);
  std::vector<FaceBlock> out;
  for (auto& [root, blk] : blocks) {
    std::sort(blk.members.begin(), blk.members.end());
    out.push_back(std::move(blk));
  }
  std::sort(out.begin(), out.end(),
            [](const FaceBlock& a, const FaceBlock& b) { return a.members < b.members; });
  return out;
}

BlockGraph block_graph(const std::vector<std::shared_ptr<const Complex>>& factors) {
  if (factors.empty()) raise(Errc::BadParameter, "need at least one factor");
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!is_ordinary(*factors[i]))
      raise(Errc::NotOrdinary, "factor " + std::to_string(i) + " is not ordinary");

  BlockGraph out;
  std::vector<std::vector<std::set<int>>> fverts;
  for (const auto& x : factors) fverts.push_back(face_vertex_sets(*x));

  // factor incidence graphs: faces adjacent iff they share a vertex
  for (std::size_t i = 0; i < factors.size(); ++i) {
    GraphData d;
    const Complex& x = *factors[i];
    for (const Face& f : x.faces()) d.vertices.push_back(f.id);
    int e = 0;
    for (int a = 0; a < x.face_count(); ++a)
      for (int b = a + 1; b < x.face_count(); ++b)
        if (sets_meet(fverts[i][a], fverts[i][b]))
          d.edges.push_back({"g" + std::to_string(e++), x.face(a).id, x.face(b).id});
    out.factor_graphs.push_back(MultiGraph(d));
  }

  // vertex per face tuple, lexicographic odometer order
  std::vector<int> counts;
  for (const auto& x : factors) counts.push_back(x->face_count());
  std::vector<int> tup(factors.size(), 0);
  GraphData d;
  auto tuple_id = [&](const std::vector<int>& t) {
    std::string id;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) id += ",";
      id += factors[i]->face(t[i]).id;
    }
    return id;
  };
  bool more = true;
  while (more) {
    out.tuples.push_back(tup);
    d.vertices.push_back(tuple_id(tup));
    more = false;
    for (int i = static_cast<int>(tup.size()) - 1; i >= 0; --i) {
      if (++tup[i] < counts[i]) {
        more = true;
        break;
      }
      tup[i] = 0;
    }
  }
  int e = 0;
  for (std::size_t a = 0; a < out.tuples.size(); ++a)
    for (std::size_t b = a + 1; b < out.tuples.size(); ++b) {
      int diff = -1;
      bool adjacent = true;
      for (std::size_t i = 0; i < factors.size() && adjacent; ++i) {
        if (out.tuples[a][i] == out.tuples[b][i]) continue;
        if (diff >= 0) {
          adjacent = false;
          break;
        }
        diff = static_cast<int>(i);
        if (!sets_meet(fverts[i][out.tuples[a][i]], fverts[i][out.tuples[b][i]]))
          adjacent = false;
      }
      if (adjacent && diff >= 0)
        d.edges.push_back({"b" + std::to_string(e++), tuple_id(out.tuples[a]),
                           tuple_id(out.tuples[b])});
    }
  out.graph = MultiGraph(d);
  return out;
}

IncidenceReport verify_block_incidence_equiv(const NaryComplexProduct& p, const FaceBlock& b,
                                             const FaceBlock& bp) {
  if (!p.product) raise(Errc::LabelMapMissing, "product carries no factor labels");
  auto pverts = face_vertex_sets(*p.product);
  auto incident = [&](int f, int g) { return f != g && sets_meet(pverts[f], pverts[g]); };

  bool touch = false;
  for (int f : b.members)
    for (int g : bp.members)
      if (incident(f, g)) touch = true;
  if (!touch || b.members == bp.members)
    raise(Errc::NotIncident, "blocks are not incident");

  // (1) generators differ in exactly one coordinate, incidently there
  bool gen_condition = false;
  if (b.generators.size() == bp.generators.size() && !b.generators.empty()) {
    int diff = -1;
    bool single = true;
    for (std::size_t i = 0; i < b.generators.size() && single; ++i) {
      if (b.generators[i] == bp.generators[i]) continue;
      if (diff >= 0)
        single = false;
      else
        diff = static_cast<int>(i);
    }
    if (single && diff >= 0) {
      auto fv = face_vertex_sets(*p.factors[diff]);
      gen_condition = sets_meet(fv[b.generators[diff]], fv[bp.generators[diff]]);
    }
  }

  // (2) every member of b meets some member of bp
  int lonely = -1;
  for (int f : b.members) {
    bool met = false;
    for (int g : bp.members)
      if (incident(f, g)) {
        met = true;
        break;
      }
    if (!met) {
      lonely = f;
      break;
    }
  }
  bool blockwise = lonely < 0;

  IncidenceReport rep;
  if (gen_condition && blockwise) {
    rep.verdict = IncidenceVerdict::Both;
  } else if (!gen_condition && !blockwise) {
    rep.verdict = IncidenceVerdict::Neither;
  } else if (gen_condition) {
    rep.verdict = IncidenceVerdict::Counterexample;
    rep.face_b = lonely;
  } else {
    rep.verdict = IncidenceVerdict::Counterexample;
    for (int f : b.members) {
      for (int g : bp.members)
        if (incident(f, g)) {
          rep.face_b = f;
          rep.face_bp = g;
          break;
        }
      if (rep.face_b >= 0) break;
    }
  }
  return rep;
}

long long count_walk_arrivals(int d, int k, int from) {
  if (d < 1 || k < 0 || 2 * k > d || (from != 1 && from != -1))
    raise(Errc::RangeError, "need d >= 1, 0 <= k <= d/2, from in {+1, -1}");
  auto binom = [](int n, int r) -> long long {
    if (r < 0 || r > n) return 0;
    std::vector<long long> row(r + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
      for (int j = std::min(i, r); j >= 1; --j) row[j] += row[j - 1];
    return row[r];
  };
  return from == 1 ? binom(d - 1, k) : binom(d - 1, k - 1);
}

}  // namespace polycell
