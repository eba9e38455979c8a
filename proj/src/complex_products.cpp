#include "polycell/complex_products.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polycell {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string product_face_id(const std::string& fa, const std::string& fb, int i, int delta) {
  return "(" + fa + "," + fb + "," + std::to_string(i) + "," + std::to_string(delta) + ")";
}

}  // namespace

Walk decorated_boundary(const Complex& x, const FaceImage& im) {
  return cycle_variant(x.skeleton(), x.face(im.face).boundary, im.rot, im.reflect ? 1 : 0);
}

int ComplexHom::corner_position_image(int face, int j) const {
  const FaceImage& im = fmap[face];
  const int n = target->face(im.face).boundary.length();
  return im.reflect ? mod(im.rot - j, n) : mod(im.rot + j, n);
}

Corner ComplexHom::corner_image(const Corner& c) const {
  return Corner{fmap[c.face].face, corner_position_image(c.face, c.position)};
}

Flag ComplexHom::flag_image(const Flag& fl) const {
  return Flag{corner_image(fl.corner), fl.side ^ (fmap[fl.corner.face].reflect ? 1 : 0)};
}

bool ComplexHom::is_bijective() const {
  if (!skeleton.is_bijective()) return false;
  if (static_cast<int>(fmap.size()) != target->face_count()) return false;
  std::vector<char> hit(fmap.size(), 0);
  for (int f = 0; f < static_cast<int>(fmap.size()); ++f) {
    const FaceImage& im = fmap[f];
    if (hit[im.face]) return false;
    hit[im.face] = 1;
    if (source->face(f).boundary.length() != target->face(im.face).boundary.length()) return false;
  }
  return true;
}

bool is_complex_homomorphism(const ComplexHom& h, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!h.source || !h.target) return fail("missing source or target");
  if (!is_graph_homomorphism(h.skeleton)) return fail("skeleton map is not a homomorphism");
  if (static_cast<int>(h.fmap.size()) != h.source->face_count())
    return fail("face map size mismatch");
  for (int f = 0; f < h.source->face_count(); ++f) {
    const FaceImage& im = h.fmap[f];
    if (im.face < 0 || im.face >= h.target->face_count())
      return fail("face image out of range for '" + h.source->face(f).id + "'");
    const int n = h.source->face(f).boundary.length();
    const int np = h.target->face(im.face).boundary.length();
    if (n % np != 0)
      return fail("face '" + h.source->face(f).id + "' length not a multiple of its image");
    if (im.rot < 0 || im.rot >= np)
      return fail("rotation not normalized on '" + h.source->face(f).id + "'");
    Walk expect =
        repeat_walk(h.target->skeleton(), decorated_boundary(*h.target, im), n / np);
    if (!(h.skeleton.walk_image(h.source->face(f).boundary) == expect))
      return fail("boundary of '" + h.source->face(f).id + "' does not wrap its image");
  }
  return true;
}

ComplexHom identity_complex_hom(std::shared_ptr<const Complex> x) {
  ComplexHom h;
  h.skeleton = identity_hom(x->skeleton_ptr());
  h.fmap.resize(x->face_count());
  for (int f = 0; f < x->face_count(); ++f) h.fmap[f] = {f, 0, false};
  h.source = x;
  h.target = std::move(x);
  return h;
}

ComplexHom compose(const ComplexHom& second, const ComplexHom& first) {
  ComplexHom out;
  out.source = first.source;
  out.target = second.target;
  out.skeleton = compose(second.skeleton, first.skeleton);
  out.fmap.reserve(first.fmap.size());
  for (const FaceImage& a : first.fmap) {
    const FaceImage& b = second.fmap[a.face];
    const int n2 = second.target->face(b.face).boundary.length();
    // Corner actions compose: sigma_b after sigma_a.
    int rot = b.reflect ? mod(b.rot - a.rot, n2) : mod(b.rot + a.rot, n2);
    out.fmap.push_back({b.face, rot, a.reflect != b.reflect});
  }
  return out;
}

ComplexHom invert(const ComplexHom& h) {
  if (!h.is_bijective()) raise(Errc::BadParameter, "cannot invert a non-bijective homomorphism");
  ComplexHom out;
  out.source = h.target;
  out.target = h.source;
  out.skeleton = invert(h.skeleton);
  out.fmap.assign(h.fmap.size(), FaceImage{});
  for (int f = 0; f < static_cast<int>(h.fmap.size()); ++f) {
    const FaceImage& im = h.fmap[f];
    const int n = h.target->face(im.face).boundary.length();
    // A reflection's corner action is an involution; a rotation inverts to -rot.
    out.fmap[im.face] = {f, im.reflect ? im.rot : mod(-im.rot, n), im.reflect};
  }
  return out;
}

std::vector<FaceImage> face_solutions(const Complex& target, const Walk& image) {
  require_closed_walk(target.skeleton(), image);
  const int n = image.length();
  std::vector<FaceImage> out;
  for (int f = 0; f < target.face_count(); ++f) {
    const int np = target.face(f).boundary.length();
    if (n % np != 0) continue;
    for (int ref = 0; ref < 2; ++ref)
      for (int r = 0; r < np; ++r) {
        FaceImage im{f, r, ref == 1};
        Walk expect = repeat_walk(target.skeleton(), decorated_boundary(target, im), n / np);
        if (image == expect) out.push_back(im);
      }
  }
  return out;
}

std::vector<ComplexHom> enumerate_complex_homomorphisms(std::shared_ptr<const Complex> x,
                                                        std::shared_ptr<const Complex> y,
                                                        std::uint64_t max_results) {
  auto skeleton_homs =
      enumerate_graph_homomorphisms(x->skeleton_ptr(), y->skeleton_ptr(), max_results);
  std::vector<ComplexHom> out;
  const int nf = x->face_count();
  for (const GraphHom& sk : skeleton_homs) {
    std::vector<std::vector<FaceImage>> options(nf);
    bool feasible = true;
    for (int f = 0; f < nf && feasible; ++f) {
      options[f] = face_solutions(*y, sk.walk_image(x->face(f).boundary));
      if (options[f].empty()) feasible = false;
    }
    if (!feasible) continue;

    std::vector<int> pick(nf, 0);
    while (true) {
      ComplexHom h;
      h.source = x;
      h.target = y;
      h.skeleton = sk;
      h.fmap.reserve(nf);
      for (int f = 0; f < nf; ++f) h.fmap.push_back(options[f][pick[f]]);
      out.push_back(std::move(h));
      if (out.size() >= max_results)
        raise(Errc::TooLarge, "homomorphism enumeration exceeded result budget");
      int f = nf - 1;
      while (f >= 0 && ++pick[f] == static_cast<int>(options[f].size())) pick[f--] = 0;
      if (f < 0) break;
    }
  }
  return out;
}

int ComplexProduct::face_of_label(const FaceLabel& lab) const {
  return product->require_face(product_face_id(left->face(lab.left_face).id,
                                               right->face(lab.right_face).id, lab.rot,
                                               lab.delta));
}

ComplexProduct::FaceLabel ComplexProduct::label_of_face(int pf) const { return face_labels_[pf]; }

ComplexProduct complex_tensor_product(std::shared_ptr<const Complex> left,
                                      std::shared_ptr<const Complex> right) {
  ComplexProduct out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.skeleton = tensor_product(out.left->skeleton_ptr(), out.right->skeleton_ptr());

  std::vector<Face> faces;
  for (int fa = 0; fa < out.left->face_count(); ++fa)
    for (int fb = 0; fb < out.right->face_count(); ++fb) {
      const Walk& ba = out.left->face(fa).boundary;
      const Walk& bb = out.right->face(fb).boundary;
      const int g = std::gcd(ba.length(), bb.length());
      for (int i = 0; i < g; ++i)
        for (int delta = 0; delta < 2; ++delta)
          faces.push_back(Face{product_face_id(out.left->face(fa).id, out.right->face(fb).id, i,
                                               delta),
                               lift_cycle(out.skeleton, ba, bb, i, delta)});
    }
  out.product = std::make_shared<Complex>(out.skeleton.product, std::move(faces));

  out.face_labels_.assign(out.product->face_count(), ComplexProduct::FaceLabel{});
  for (int fa = 0; fa < out.left->face_count(); ++fa)
    for (int fb = 0; fb < out.right->face_count(); ++fb) {
      const int g = std::gcd(out.left->face(fa).boundary.length(),
                             out.right->face(fb).boundary.length());
      for (int i = 0; i < g; ++i)
        for (int delta = 0; delta < 2; ++delta) {
          int pf = out.product->require_face(
              product_face_id(out.left->face(fa).id, out.right->face(fb).id, i, delta));
          out.face_labels_[pf] = {fa, fb, i, delta};
        }
    }
  return out;
}

ComplexHom complex_projection(const ComplexProduct& p, Side which) {
  ComplexHom h;
  h.source = p.product;
  h.target = which == Side::Left ? p.left : p.right;
  h.skeleton = tensor_projection(p.skeleton, which);
  h.fmap.reserve(p.product->face_count());
  for (int pf = 0; pf < p.product->face_count(); ++pf) {
    const auto lab = p.label_of_face(pf);
    if (which == Side::Left)
      h.fmap.push_back({lab.left_face, 0, false});
    else
      h.fmap.push_back({lab.right_face, lab.rot, lab.delta == 1});
  }
  return h;
}

ComplexHom universal_factor_complex(const ComplexProduct& p, const ComplexHom& phi_left,
                                    const ComplexHom& phi_right) {
  const Complex& z = *phi_left.source;
  if (phi_right.source->face_count() != z.face_count() ||
      phi_right.source->skeleton().vertex_count() != z.skeleton().vertex_count())
    raise(Errc::BadParameter, "component homomorphisms have different sources");

  ComplexHom out;
  out.source = phi_left.source;
  out.target = p.product;
  out.skeleton = universal_factor_graph(p.skeleton, phi_left.skeleton, phi_right.skeleton);
  out.fmap.reserve(z.face_count());
  for (int f = 0; f < z.face_count(); ++f) {
    const FaceImage& la = phi_left.fmap[f];
    const FaceImage& lb = phi_right.fmap[f];
    const int na = p.left->face(la.face).boundary.length();
    const int nb = p.right->face(lb.face).boundary.length();
    const int g = std::gcd(na, nb);
    const int L = na / g * nb;
    const bool delta = la.reflect != lb.reflect;
    const int eps = delta ? -1 : 1;
    const int i = mod(lb.rot - eps * la.rot, g);
    // Unique t in [0, L): t = la.rot (mod na) and eps*t = lb.rot - i (mod nb).
    int t = -1;
    for (int cand = la.rot; cand < L; cand += na)
      if (mod(eps * cand - (lb.rot - i), nb) == 0) {
        t = cand;
        break;
      }
    if (t < 0)
      raise(Errc::HypothesisViolated,
            "no common lift for face '" + z.face(f).id + "'");
    out.fmap.push_back(
        {p.face_of_label({la.face, lb.face, i, delta ? 1 : 0}), t, la.reflect});
  }
  return out;
}

GraphHom induced_link_homomorphism(const ComplexHom& h, int v) {
  LinkGraph sl = link(*h.source, v);
  LinkGraph tl = link(*h.target, h.skeleton.vmap[v]);

  std::map<int, int> vertex_of_dart;
  for (int i = 0; i < tl.graph.vertex_count(); ++i) vertex_of_dart[tl.dart_of_vertex[i]] = i;
  std::map<Corner, int> edge_of_corner;
  for (int k = 0; k < tl.graph.edge_count(); ++k) edge_of_corner[tl.corner_of_edge[k]] = k;

  GraphHom out;
  out.source = std::make_shared<MultiGraph>(sl.graph);
  out.target = std::make_shared<MultiGraph>(tl.graph);
  out.vmap.resize(sl.graph.vertex_count());
  for (int i = 0; i < sl.graph.vertex_count(); ++i) {
    auto it = vertex_of_dart.find(h.skeleton.dmap[sl.dart_of_vertex[i]]);
    if (it == vertex_of_dart.end())
      raise(Errc::HypothesisViolated, "dart image is not incident to the image vertex");
    out.vmap[i] = it->second;
  }
  out.dmap.resize(sl.graph.dart_count());
  for (int k = 0; k < sl.graph.edge_count(); ++k) {
    const Corner c = sl.corner_of_edge[k];
    auto it = edge_of_corner.find(h.corner_image(c));
    if (it == edge_of_corner.end())
      raise(Errc::HypothesisViolated, "corner image is not attached at the image vertex");
    const int flip = h.fmap[c.face].reflect ? 1 : 0;
    for (int s = 0; s < 2; ++s) out.dmap[dart_of(k, s)] = dart_of(it->second, s ^ flip);
  }
  return out;
}

NaryComplexProduct nary_complex_tensor_product(
    std::vector<std::shared_ptr<const Complex>> factors) {
  if (factors.empty()) raise(Errc::BadParameter, "need at least one factor");
  NaryComplexProduct out;
  out.factors = std::move(factors);
  out.product = out.factors[0];
  for (std::size_t k = 1; k < out.factors.size(); ++k) {
    out.steps.push_back(complex_tensor_product(out.product, out.factors[k]));
    out.product = out.steps.back().product;
  }
  return out;
}

ComplexHom NaryComplexProduct::projection(int j) const {
  const int m = static_cast<int>(factors.size());
  if (j < 0 || j >= m) raise(Errc::IndexOutOfRange, "factor index");
  if (m == 1) return identity_complex_hom(product);
  if (j == m - 1) return complex_projection(steps.back(), Side::Right);
  ComplexHom h = complex_projection(steps.back(), Side::Left);
  for (int k = static_cast<int>(steps.size()) - 2; k >= 0; --k) {
    if (j == k + 1) return compose(complex_projection(steps[k], Side::Right), h);
    h = compose(complex_projection(steps[k], Side::Left), h);
  }
  return h;  // j == 0
}

std::vector<int> NaryComplexProduct::vertex_tuple(int pv) const {
  std::vector<int> tuple(factors.size());
  int cur = pv;
  for (int k = static_cast<int>(steps.size()) - 1; k >= 0; --k) {
    auto [a, b] = steps[k].skeleton.pair_of_vertex(cur);
    tuple[k + 1] = b;
    cur = a;
  }
  tuple[0] = cur;
  return tuple;
}

std::vector<FaceImage> NaryComplexProduct::face_tuple(int pf) const {
  std::vector<FaceImage> tuple;
  tuple.reserve(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j)
    tuple.push_back(projection(static_cast<int>(j)).fmap[pf]);
  return tuple;
}

ComplexHom nary_universal_factor_complex(const NaryComplexProduct& to,
                                         const std::vector<ComplexHom>& phis) {
  if (phis.size() != to.factors.size()) raise(Errc::LengthMismatch, "one hom per factor required");
  ComplexHom acc = phis[0];
  for (std::size_t k = 0; k + 1 < phis.size(); ++k)
    acc = universal_factor_complex(to.steps[k], acc, phis[k + 1]);
  return acc;
}

ComplexHom assemble_complex_product_hom(const NaryComplexProduct& from,
                                        const NaryComplexProduct& to,
                                        const std::vector<ComplexHom>& component,
                                        const std::vector<int>& source_slot) {
  if (component.size() != to.factors.size() || source_slot.size() != to.factors.size())
    raise(Errc::LengthMismatch, "need one component hom and source slot per target factor");
  std::vector<ComplexHom> phis;
  phis.reserve(component.size());
  for (std::size_t i = 0; i < component.size(); ++i)
    phis.push_back(compose(component[i], from.projection(source_slot[i])));
  return nary_universal_factor_complex(to, phis);
}

}  // namespace polycell
