#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycell/complex_products.hpp"

namespace polycell {

inline constexpr std::uint64_t kNodeBudget = 50'000'000;
inline constexpr std::uint64_t kMaxResults = 2'000'000;
inline constexpr std::uint64_t kMaxGroupOrder = 2'000'000;

// Sort-preserving permutation of the ground set vertices ∪ darts ∪ faces.
// Graph permutations leave fperm empty.
struct Permutation {
  std::vector<int> vperm;
  std::vector<int> dperm;
  std::vector<int> fperm;

  static Permutation identity(int nv, int nd, int nf);
  Permutation after(const Permutation& first) const;  // this ∘ first
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

// The induced ground permutation of a bijective endomorphism. Source and
// target must be the same object (same canonical indexing).
Permutation permutation_of(const GraphHom& h);
Permutation permutation_of(const ComplexHom& h);

struct PermGroup {
  std::vector<Permutation> generators;  // small generating set
  std::vector<Permutation> elements;    // full enumeration, sorted

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;  // generator membership
  bool same_group(const PermGroup& other) const;      // mutual generator membership
};

// Closure of the generators under composition (finite groups close without
// explicit inverses). TooLarge beyond max_order elements.
PermGroup close_generators(int nv, int nd, int nf, std::vector<Permutation> gens,
                           std::uint64_t max_order = kMaxGroupOrder);

// All dart-level automorphisms / the first isomorphism, by backtracking over
// vertex images with color refinement; parallel-edge orderings and loop flips
// are enumerated explicitly. TooLarge when the node budget runs out.
std::vector<GraphHom> enumerate_graph_automorphisms(std::shared_ptr<const MultiGraph> g,
                                                    std::uint64_t budget = kNodeBudget);
std::optional<GraphHom> graph_isomorphism(std::shared_ptr<const MultiGraph> g,
                                          std::shared_ptr<const MultiGraph> h,
                                          std::uint64_t budget = kNodeBudget);
PermGroup graph_automorphism_group(std::shared_ptr<const MultiGraph> g,
                                   std::uint64_t budget = kNodeBudget);

// Complex automorphisms carry face decorations (rot, reflect); distinct
// decorations of one ground permutation are distinct homomorphisms, but the
// group below deduplicates the induced ground permutations.
std::vector<ComplexHom> enumerate_complex_automorphisms(std::shared_ptr<const Complex> x,
                                                        std::uint64_t budget = kNodeBudget);
std::optional<ComplexHom> complex_isomorphism(std::shared_ptr<const Complex> x,
                                              std::shared_ptr<const Complex> y,
                                              std::uint64_t budget = kNodeBudget);
PermGroup complex_automorphism_group(std::shared_ptr<const Complex> x,
                                     std::uint64_t budget = kNodeBudget);

bool is_vertex_transitive(std::shared_ptr<const MultiGraph> g, std::uint64_t budget = kNodeBudget);
bool is_edge_transitive(std::shared_ptr<const MultiGraph> g, std::uint64_t budget = kNodeBudget);
bool is_arc_transitive(std::shared_ptr<const MultiGraph> g, std::uint64_t budget = kNodeBudget);
// Single orbit on flags under the decorated automorphisms. A complex without
// faces has no flags and counts as transitive.
bool is_flag_transitive(std::shared_ptr<const Complex> x, std::uint64_t budget = kNodeBudget);

// The subgroup of the product's automorphisms generated by factor
// automorphisms acting coordinatewise plus coordinate swaps between
// isomorphic factors. With restrict_to (a component's ambient vertex set),
// the setwise stabilizer of that set restricted to it; the restricted ground
// matches the canonical indexing of the induced sub(graph|complex).
PermGroup cartesian_subgroup(const NaryGraphProduct& ambient,
                             const std::vector<int>* restrict_to = nullptr,
                             std::uint64_t budget = kNodeBudget,
                             std::uint64_t max_order = kMaxGroupOrder);
PermGroup cartesian_subgroup(const NaryComplexProduct& ambient,
                             const std::vector<int>* restrict_to = nullptr,
                             std::uint64_t budget = kNodeBudget,
                             std::uint64_t max_order = kMaxGroupOrder);

// Forget darts and faces; deduplicate. The vertex action is what the classic
// direct-product theorems speak about.
PermGroup vertex_action(const PermGroup& g);

// Printable form: one cycle list per sort, fixed points omitted.
std::string cycle_notation(const Permutation& p, const std::vector<std::string>& vlabels,
                           const std::vector<std::string>& dlabels,
                           const std::vector<std::string>& flabels);
std::vector<std::string> dart_labels(const MultiGraph& g);    // "edge:side"
std::vector<std::string> face_id_labels(const Complex& x);

}  // namespace polycell
