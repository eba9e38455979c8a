#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycell/multigraph.hpp"

namespace polycell {

// Dart-level graph homomorphism: vmap on vertices, dmap on darts. dmap must
// send the two darts of an edge to the two darts of a single target edge, and
// the dart endpoints must follow vmap.
struct GraphHom {
  std::shared_ptr<const MultiGraph> source;
  std::shared_ptr<const MultiGraph> target;
  std::vector<int> vmap;
  std::vector<int> dmap;

  int edge_image(int e) const { return dart_edge(dmap[dart_of(e, 0)]); }
  Step step_image(const Step& s) const {
    int d = dmap[step_enter_dart(s)];
    return Step{dart_edge(d), dart_side(d) == 0};
  }
  Walk walk_image(const Walk& w) const;
  bool is_bijective() const;

  bool operator==(const GraphHom& o) const { return vmap == o.vmap && dmap == o.dmap; }
};

bool is_graph_homomorphism(const GraphHom& h);
GraphHom identity_hom(std::shared_ptr<const MultiGraph> g);
GraphHom compose(const GraphHom& second, const GraphHom& first);  // second ∘ first
GraphHom invert(const GraphHom& h);                               // h must be bijective

// Tensor product with label maps. Product edge (a, b, delta) has its side-s
// dart over (side s of a, side s^delta of b); so its endpoints are
// (end_s(a), end_{s^delta}(b)). Ids encode the index pairs/triples.
struct GraphProduct {
  std::shared_ptr<const MultiGraph> left;
  std::shared_ptr<const MultiGraph> right;
  std::shared_ptr<const MultiGraph> product;

  int vertex_of_pair(int vl, int vr) const;
  std::pair<int, int> pair_of_vertex(int pv) const;
  int edge_of_label(int el, int er, int delta) const;
  struct EdgeLabel {
    int left_edge;
    int right_edge;
    int delta;
  };
  EdgeLabel label_of_edge(int pe) const;

  std::vector<int> vertex_map_;   // vl * |Vr| + vr -> product vertex
  std::vector<int> edge_map_;     // (el * |Er| + er) * 2 + delta -> product edge
  std::vector<std::pair<int, int>> vertex_labels_;  // product vertex -> (vl, vr)
  std::vector<EdgeLabel> edge_labels_;              // product edge -> label
};

GraphProduct tensor_product(std::shared_ptr<const MultiGraph> left,
                            std::shared_ptr<const MultiGraph> right);

enum class Side { Left, Right };
GraphHom tensor_projection(const GraphProduct& p, Side which);

// All homomorphisms g -> h in deterministic order (vmap, then dmap, lexicographic).
std::vector<GraphHom> enumerate_graph_homomorphisms(std::shared_ptr<const MultiGraph> g,
                                                    std::shared_ptr<const MultiGraph> h,
                                                    std::uint64_t max_results = 50'000'000);

// The unique psi with proj_left ∘ psi = phi_left and proj_right ∘ psi = phi_right.
GraphHom universal_factor_graph(const GraphProduct& p, const GraphHom& phi_left,
                                const GraphHom& phi_right);

// Lift two equal-length walks to the product, starting at the paired start.
Walk lift_path(const GraphProduct& p, const Walk& left, const Walk& right);

// Cycle lift: (lcm/n)·C1 against (lcm/m)·C2 rotated to start at vertex i and
// reversed when delta == 1. i is normalized modulo the length of C2.
Walk lift_cycle(const GraphProduct& p, const Walk& c1, const Walk& c2, int i, int delta);

// Rotate to start at position i; reverse first when delta == 1.
Walk cycle_variant(const MultiGraph& g, const Walk& c, int i, int delta);

// Direct product in S0 (simple graphs with loops), where a loop is the identity.
struct S0Product {
  std::shared_ptr<const MultiGraph> left;
  std::shared_ptr<const MultiGraph> right;
  std::shared_ptr<const MultiGraph> product;
  std::vector<int> vertex_map_;  // vl * |Vr| + vr -> product vertex
  int vertex_of_pair(int vl, int vr) const;
  std::vector<std::pair<int, int>> vertex_labels_;
};
S0Product direct_product_s0(std::shared_ptr<const MultiGraph> left,
                            std::shared_ptr<const MultiGraph> right);

// Cartesian product of simple loop-free graphs.
struct CartesianProduct {
  std::shared_ptr<const MultiGraph> left;
  std::shared_ptr<const MultiGraph> right;
  std::shared_ptr<const MultiGraph> product;
  std::vector<int> vertex_map_;
  int vertex_of_pair(int vl, int vr) const;
};
CartesianProduct cartesian_product(std::shared_ptr<const MultiGraph> left,
                                   std::shared_ptr<const MultiGraph> right);

// Left fold of binary tensor products with composed projections.
struct NaryGraphProduct {
  std::vector<std::shared_ptr<const MultiGraph>> factors;
  std::shared_ptr<const MultiGraph> product;
  std::vector<GraphProduct> steps;  // steps[k]: fold of factors[0..k+1]

  // Projection onto factor j as a composed hom.
  GraphHom projection(int j) const;
  std::vector<int> vertex_tuple(int pv) const;
};
NaryGraphProduct nary_tensor_product(std::vector<std::shared_ptr<const MultiGraph>> factors);

// The unique psi: Z -> product with projection(i) ∘ psi = phis[i] for all i.
GraphHom nary_universal_factor(const NaryGraphProduct& to, const std::vector<GraphHom>& phis);

// Hom from.product -> to.product whose i-th coordinate is
// component[i] ∘ from.projection(source_slot[i]); component[i] maps
// from.factors[source_slot[i]] -> to.factors[i]. Covers factor-wise maps,
// coordinate permutations, and re-associations.
GraphHom assemble_product_hom(const NaryGraphProduct& from, const NaryGraphProduct& to,
                              const std::vector<GraphHom>& component,
                              const std::vector<int>& source_slot);

}  // namespace polycell
