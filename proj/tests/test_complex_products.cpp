#include <doctest.h>

#include <numeric>
#include <set>

#include "polycell/complex_products.hpp"
#include "polycell/corpus.hpp"
#include "polycell/rng.hpp"
#include "polycell/symmetry.hpp"

using namespace polycell;

namespace {

std::shared_ptr<const Complex> sc(Complex x) { return shared_complex(std::move(x)); }
std::shared_ptr<const MultiGraph> sp(MultiGraph g) { return shared_graph(std::move(g)); }

}  // namespace

TEST_CASE("triangle x pentagon: counts fixed by the gcd/lcm rule") {
  ComplexProduct p = complex_tensor_product(sc(polygon(3)), sc(polygon(5)));
  CHECK(p.product->skeleton().vertex_count() == 15);
  CHECK(p.product->skeleton().edge_count() == 30);
  CHECK(p.product->face_count() == 2);  // 2 * gcd(3,5)
  for (const Face& f : p.product->faces()) CHECK(f.boundary.length() == 15);
  CHECK(euler_characteristic(*p.product) == -13);
}

TEST_CASE("wrapped 15-gons: 30 faces") {
  ComplexProduct p =
      complex_tensor_product(sc(wrapped_polygon(15, 3)), sc(wrapped_polygon(15, 5)));
  CHECK(p.product->skeleton().vertex_count() == 15);
  CHECK(p.product->skeleton().edge_count() == 30);
  CHECK(p.product->face_count() == 30);  // 2 * gcd(15,15)
  for (const Face& f : p.product->faces()) CHECK(f.boundary.length() == 15);
}

TEST_CASE("polygon product characteristic is -nm + 2gcd(n,m)") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) {
      ComplexProduct p = complex_tensor_product(sc(polygon(n)), sc(polygon(m)));
      long long chi = euler_characteristic(*p.product);
      CHECK(chi == -static_cast<long long>(n) * m + 2 * std::gcd(n, m));
      if (n != 1 || m != 1) CHECK(chi < 1);
    }
  ComplexProduct p11 = complex_tensor_product(sc(polygon(1)), sc(polygon(1)));
  CHECK(euler_characteristic(*p11.product) == 1);
}

TEST_CASE("face boundaries project onto both factor boundaries") {
  auto x = sc(polygon(4));
  auto y = sc(polygon(6));
  ComplexProduct p = complex_tensor_product(x, y);
  GraphHom pl = tensor_projection(p.skeleton, Side::Left);
  GraphHom pr = tensor_projection(p.skeleton, Side::Right);
  for (const Face& f : p.product->faces()) {
    CHECK(f.boundary.length() == 12);  // lcm(4,6)
    Walk wl = pl.walk_image(f.boundary);
    Walk wr = pr.walk_image(f.boundary);
    // projections traverse the factor boundaries with the primitive period
    CHECK(reduce_closed_walk(x->skeleton(), wl).primitive.length() == 4);
    CHECK(reduce_closed_walk(y->skeleton(), wr).primitive.length() == 6);
  }
  CHECK(p.product->face_count() == 4);  // 2 * gcd(4,6)
}

TEST_CASE("face labels round-trip") {
  auto x = sc(necklace(3, 6));
  auto y = sc(polygon(4));
  ComplexProduct p = complex_tensor_product(x, y);
  CHECK(p.product->face_count() == 3 * 1 * 2 * 2);  // 2*gcd(6,4) per face pair
  for (int pf = 0; pf < p.product->face_count(); ++pf) {
    auto lab = p.label_of_face(pf);
    CHECK(p.face_of_label(lab) == pf);
    CHECK(lab.left_face >= 0);
    CHECK(lab.left_face < x->face_count());
    CHECK(lab.right_face == 0);
    CHECK((lab.delta == 0 || lab.delta == 1));
  }
}

TEST_CASE("complex projections are complex homomorphisms") {
  ComplexProduct p = complex_tensor_product(sc(tetrahedron()), sc(polygon(3)));
  for (Side s : {Side::Left, Side::Right}) {
    ComplexHom proj = complex_projection(p, s);
    std::string why;
    CHECK(is_complex_homomorphism(proj, &why));
    CHECK(why.empty());
  }
}

TEST_CASE("link of the product is the product of the links") {
  auto x = sc(dunce_hat());
  auto y = sc(tetrahedron());
  ComplexProduct p = complex_tensor_product(x, y);
  for (int v = 0; v < x->skeleton().vertex_count(); ++v)
    for (int u = 0; u < y->skeleton().vertex_count(); ++u) {
      GraphProduct links =
          tensor_product(sp(link(*x, v).graph), sp(link(*y, u).graph));
      LinkGraph plink = link(*p.product, p.skeleton.vertex_of_pair(v, u));
      CHECK(graph_isomorphism(links.product, sp(plink.graph)).has_value());
    }
}

TEST_CASE("induced link homomorphism lands on the product link") {
  auto x = sc(tetrahedron());
  auto y = sc(polygon(3));
  ComplexProduct p = complex_tensor_product(x, y);
  ComplexHom proj = complex_projection(p, Side::Left);
  for (int pv = 0; pv < p.product->skeleton().vertex_count(); ++pv) {
    GraphHom lh = induced_link_homomorphism(proj, pv);
    CHECK(is_graph_homomorphism(lh));
    CHECK(lh.source->vertex_count() == link(*p.product, pv).graph.vertex_count());
  }
}

TEST_CASE("strip-to-one-gon homomorphisms follow the parity pattern") {
  auto target = sc(one_gon());
  auto exists = [&](Complex s) {
    return !enumerate_complex_homomorphisms(sc(std::move(s)), target).empty();
  };
  CHECK(exists(strip(2, false)));
  CHECK(!exists(strip(2, true)));
  CHECK(exists(strip(3, true)));
  CHECK(!exists(strip(3, false)));
  CHECK(exists(strip(4, false)));
  CHECK(!exists(strip(4, true)));
}

TEST_CASE("complex hom enumeration validates, composes, and inverts") {
  auto tri = sc(polygon(3));
  std::vector<ComplexHom> autos = enumerate_complex_homomorphisms(tri, tri);
  CHECK(autos.size() == 6);  // dihedral on the triangle
  ComplexHom id = identity_complex_hom(tri);
  CHECK(is_complex_homomorphism(id));
  for (const ComplexHom& h : autos) {
    CHECK(is_complex_homomorphism(h));
    REQUIRE(h.is_bijective());
    ComplexHom inv = invert(h);
    CHECK(is_complex_homomorphism(inv));
    CHECK(permutation_of(compose(h, inv)).is_identity());
  }
}

TEST_CASE("wrapping homs: a doubly wrapped hexagon folds onto the triangle") {
  auto src = sc(wrapped_polygon(6, 3));
  auto dst = sc(polygon(3));
  std::vector<ComplexHom> homs = enumerate_complex_homomorphisms(src, dst);
  CHECK(!homs.empty());
  for (const ComplexHom& h : homs) {
    CHECK(is_complex_homomorphism(h));
    CHECK(h.fmap[0].face == 0);
  }
  // the dunce walk reverses its last step, so it cannot wrap the one-gon
  CHECK(enumerate_complex_homomorphisms(sc(dunce_hat()), sc(one_gon())).empty());
}

TEST_CASE("face images compose decorations") {
  // in triangle x triangle, projections after automorphisms stay homomorphisms
  auto tri = sc(polygon(3));
  ComplexProduct p = complex_tensor_product(tri, tri);
  auto autos = enumerate_complex_homomorphisms(p.product, p.product);
  int bijective = 0;
  for (const ComplexHom& h : autos) {
    if (!h.is_bijective()) continue;
    ++bijective;
    ComplexHom through = compose(complex_projection(p, Side::Left), h);
    CHECK(is_complex_homomorphism(through));
  }
  CHECK(bijective == 72);
}

TEST_CASE("nary complex product of three triangles") {
  auto tri = sc(polygon(3));
  NaryComplexProduct p = nary_complex_tensor_product({tri, tri, tri});
  CHECK(p.product->skeleton().vertex_count() == 27);
  CHECK(p.product->skeleton().edge_count() == 108);
  CHECK(p.product->face_count() == 36);
  for (const Face& f : p.product->faces()) CHECK(f.boundary.length() == 3);
  for (int j = 0; j < 3; ++j) {
    ComplexHom proj = p.projection(j);
    CHECK(is_complex_homomorphism(proj));
  }
  for (int pv = 0; pv < 27; ++pv) {
    std::vector<int> t = p.vertex_tuple(pv);
    CHECK(t.size() == 3);
    for (int j = 0; j < 3; ++j) CHECK(p.projection(j).skeleton.vmap[pv] == t[j]);
  }
  for (int pf = 0; pf < p.product->face_count(); ++pf) {
    std::vector<FaceImage> t = p.face_tuple(pf);
    REQUIRE(t.size() == 3);
    for (const FaceImage& im : t) CHECK(im.face == 0);
  }
}

TEST_CASE("nary universal factor threads through all projections") {
  auto tri = sc(polygon(3));
  NaryComplexProduct p = nary_complex_tensor_product({tri, tri});
  std::vector<ComplexHom> autos = enumerate_complex_homomorphisms(tri, tri);
  REQUIRE(autos.size() >= 2);
  ComplexHom u = nary_universal_factor_complex(p, {autos[0], autos[1]});
  CHECK(is_complex_homomorphism(u));
  for (int j = 0; j < 2; ++j) {
    ComplexHom back = compose(p.projection(j), u);
    CHECK(back.skeleton.vmap == autos[j].skeleton.vmap);
    CHECK(back.fmap.size() == autos[j].fmap.size());
  }
}

TEST_CASE("assemble_complex_product_hom swaps isomorphic coordinates") {
  auto tri = sc(polygon(3));
  auto pent = sc(polygon(5));
  NaryComplexProduct p = nary_complex_tensor_product({tri, pent});
  NaryComplexProduct q = nary_complex_tensor_product({pent, tri});
  ComplexHom swap = assemble_complex_product_hom(
      p, q, {identity_complex_hom(pent), identity_complex_hom(tri)}, {1, 0});
  CHECK(is_complex_homomorphism(swap));
  CHECK(swap.is_bijective());
}

TEST_CASE("products of random complexes validate structurally") {
  Rng rng(23);
  for (int t = 0; t < 15; ++t) {
    auto x = sc(random_complex(rng, 5, 6, 2, 6));
    auto y = sc(random_complex(rng, 5, 6, 2, 6));
    ComplexProduct p = complex_tensor_product(x, y);
    CHECK(p.product->skeleton().vertex_count() ==
          x->skeleton().vertex_count() * y->skeleton().vertex_count());
    CHECK(p.product->skeleton().edge_count() ==
          2 * x->skeleton().edge_count() * y->skeleton().edge_count());
    long long faces = 0;
    for (const Face& fx : x->faces())
      for (const Face& fy : y->faces())
        faces += 2 * std::gcd(fx.boundary.length(), fy.boundary.length());
    CHECK(p.product->face_count() == faces);
    std::string why;
    CHECK(is_complex_homomorphism(complex_projection(p, Side::Left), &why));
    CHECK(is_complex_homomorphism(complex_projection(p, Side::Right), &why));
  }
}
