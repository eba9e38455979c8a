#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polycell/complex.hpp"
#include "polycell/graph_products.hpp"

namespace polycell {

// How a face lands on its image: the target face plus the boundary alignment.
// The source boundary maps to the target boundary rotated to start at corner
// `rot`, reversed when `reflect` is set, and repeated n/n' times. The
// alignment is part of the homomorphism's data: when the target boundary has
// rotational symmetry, distinct decorations realize the same skeleton map but
// count as distinct homomorphisms.
struct FaceImage {
  int face = -1;
  int rot = 0;  // normalized into [0, target face length)
  bool reflect = false;

  bool operator==(const FaceImage&) const = default;
  auto operator<=>(const FaceImage&) const = default;
};

// The boundary walk the image prescribes: rotate by rot, reverse if reflect.
Walk decorated_boundary(const Complex& x, const FaceImage& im);

struct ComplexHom {
  std::shared_ptr<const Complex> source;
  std::shared_ptr<const Complex> target;
  GraphHom skeleton;
  std::vector<FaceImage> fmap;  // by source face index

  // Corner j of face f lands on this corner position of fmap[f].face.
  int corner_position_image(int face, int j) const;
  Corner corner_image(const Corner& c) const;
  // Flags transform as (f, j, s) -> (f', sigma(j), s xor reflect).
  Flag flag_image(const Flag& fl) const;

  // Bijective on vertices, darts and faces, with face lengths preserved.
  bool is_bijective() const;

  bool operator==(const ComplexHom& o) const { return skeleton == o.skeleton && fmap == o.fmap; }
};

// Full validity check: skeleton homomorphism plus, for every face, the image
// walk equal to the decorated boundary repeated n/n' times.
bool is_complex_homomorphism(const ComplexHom& h, std::string* why = nullptr);

ComplexHom identity_complex_hom(std::shared_ptr<const Complex> x);
ComplexHom compose(const ComplexHom& second, const ComplexHom& first);  // second ∘ first
ComplexHom invert(const ComplexHom& h);                                 // h must be bijective

// All decorations under which `image` (a closed walk in `target`'s skeleton)
// wraps a target face boundary. Ordered by (face, reflect, rot).
std::vector<FaceImage> face_solutions(const Complex& target, const Walk& image);

// All homomorphisms x -> y: skeleton homomorphisms in enumeration order, each
// extended by every combination of per-face decorations.
std::vector<ComplexHom> enumerate_complex_homomorphisms(std::shared_ptr<const Complex> x,
                                                        std::shared_ptr<const Complex> y,
                                                        std::uint64_t max_results = 50'000'000);

// Tensor product of complexes. The skeleton is the tensor product of the
// skeletons; each face pair (fa of length n, fb of length m) contributes
// 2*gcd(n, m) faces labelled (fa, fb, i, delta) with i in [0, gcd) and
// delta in {0, 1}, attached along the lift of fa's boundary against fb's
// boundary started at corner i and reversed when delta = 1.
struct ComplexProduct {
  std::shared_ptr<const Complex> left;
  std::shared_ptr<const Complex> right;
  std::shared_ptr<const Complex> product;
  GraphProduct skeleton;

  struct FaceLabel {
    int left_face = -1;
    int right_face = -1;
    int rot = 0;
    int delta = 0;

    bool operator==(const FaceLabel&) const = default;
  };
  int face_of_label(const FaceLabel& lab) const;
  FaceLabel label_of_face(int pf) const;

  std::vector<FaceLabel> face_labels_;  // product face index -> label
};

ComplexProduct complex_tensor_product(std::shared_ptr<const Complex> left,
                                      std::shared_ptr<const Complex> right);

// Projections: face (fa, fb, i, delta) lands on fa with decoration (0, 0) on
// the left and on fb with decoration (i, delta) on the right.
ComplexHom complex_projection(const ComplexProduct& p, Side which);

// The unique psi with projections psi composing to the given pair of
// homomorphisms out of a common source.
ComplexHom universal_factor_complex(const ComplexProduct& p, const ComplexHom& phi_left,
                                    const ComplexHom& phi_right);

// Graph homomorphism link(source, v) -> link(target, image of v): darts map
// by the skeleton dart map, corners by the corner action, link dart sides
// flip on reflected faces. Source/target graphs are fresh copies of the links.
GraphHom induced_link_homomorphism(const ComplexHom& h, int v);

// Left fold of binary products, with composed projections.
struct NaryComplexProduct {
  std::vector<std::shared_ptr<const Complex>> factors;
  std::shared_ptr<const Complex> product;
  std::vector<ComplexProduct> steps;  // steps[k]: fold of factors[0..k+1]

  ComplexHom projection(int j) const;
  std::vector<int> vertex_tuple(int pv) const;
  // Image of product face pf under each projection.
  std::vector<FaceImage> face_tuple(int pf) const;
};
NaryComplexProduct nary_complex_tensor_product(std::vector<std::shared_ptr<const Complex>> factors);

ComplexHom nary_universal_factor_complex(const NaryComplexProduct& to,
                                         const std::vector<ComplexHom>& phis);

// Hom from.product -> to.product whose i-th coordinate is
// component[i] ∘ from.projection(source_slot[i]).
ComplexHom assemble_complex_product_hom(const NaryComplexProduct& from,
                                        const NaryComplexProduct& to,
                                        const std::vector<ComplexHom>& component,
                                        const std::vector<int>& source_slot);

}  // namespace polycell
