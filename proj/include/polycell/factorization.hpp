#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycell/complex_products.hpp"
#include "polycell/symmetry.hpp"

namespace polycell {

// S0: adjacency-level factorization, loops allowed in factors (loops act as
// units and never appear as factors themselves). S: dart-level factorization
// of simple graphs into simple factors.
enum class FactorClass { S0, S };

// An identification of a graph with a binary tensor product.
struct SkeletonSplit {
  GraphProduct product;  // the product carrying its label maps
  GraphHom iso;          // input graph -> product.product, bijective
};

struct GraphFactorization {
  FactorClass cls = FactorClass::S0;
  std::vector<std::shared_ptr<const MultiGraph>> factors;  // primes, canonical order
  std::shared_ptr<const MultiGraph> rebuilt;               // folded product of the factors
  std::optional<NaryGraphProduct> assembly;                // populated for class S
  GraphHom certificate;                                    // rebuilt -> input, re-verified
};

struct ComplexFactorization {
  std::vector<std::shared_ptr<const Complex>> factors;  // prime complexes, canonical order
  std::shared_ptr<const Complex> rebuilt;
  std::optional<NaryComplexProduct> assembly;
  ComplexHom certificate;  // rebuilt -> input, re-verified
};

struct ComplexSplit {
  std::shared_ptr<const Complex> left, right;  // null when the split is refused
  // On refusal: ids of two input faces whose projections generate a face the
  // input does not contain.
  std::string witness_left, witness_right;
  bool ok() const { return left != nullptr; }
};

// All ways of writing g as a dart-level tensor product of two smaller simple
// graphs, one SkeletonSplit per genuinely different identification (two
// identifications differing by a factor automorphism or a swap of isomorphic
// factors classify faces identically and are merged). Empty when g has no
// split; limited to simple connected inputs, which is all the complex
// machinery below needs.
std::vector<SkeletonSplit> enumerate_skeleton_splits(std::shared_ptr<const MultiGraph> g,
                                                     std::uint64_t budget = kNodeBudget);

// Project a face boundary through the split onto one side and reduce it to
// its primitive cycle. The returned face keeps the input face id.
Face reductive_projection(const Complex& x, const SkeletonSplit& split, const std::string& face_id,
                          Side which);

// Build candidate factors whose faces are the deduplicated reductive
// projections of x's faces, and accept iff their product has exactly the
// faces of x (transported through the split).
ComplexSplit try_complex_split(std::shared_ptr<const Complex> x, const SkeletonSplit& split);

bool is_prime_graph(std::shared_ptr<const MultiGraph> g, FactorClass cls,
                    std::uint64_t budget = kNodeBudget);
GraphFactorization graph_prime_factorization(std::shared_ptr<const MultiGraph> g, FactorClass cls,
                                             std::uint64_t budget = kNodeBudget);

// True iff no skeleton split admits a complex split. Elementary complexes
// short-circuit to prime. Non-simple complexes with a composite skeleton are
// outside the search's domain and raise (NotSimple via the split attempt, or
// Budget when the skeleton itself is out of reach).
bool is_prime_complex(std::shared_ptr<const Complex> x, std::uint64_t budget = kNodeBudget);

// Hypotheses checked up front: x simple; skeleton finite simple connected
// non-bipartite R-thin edge-transitive with more than one vertex.
ComplexFactorization complex_prime_factorization(std::shared_ptr<const Complex> x,
                                                 std::uint64_t budget = kNodeBudget);

}  // namespace polycell
