#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "polycell/complex_products.hpp"

namespace polycell {

struct FaceBlock {
  std::vector<int> members;     // product face indices, ascending
  std::vector<int> generators;  // generating face index per factor (label blocks only)
  std::vector<int> parity;      // corner-label parities, first coordinate normalized to 0
};

// Partition of the product faces: same generating face tuple and equal
// corner-label parity differences mod 2. Each generated family falls into
// 2^{m-1} blocks. Requires every factor to carry faces of one uniform even
// length; OddFaces otherwise.
std::vector<FaceBlock> face_blocks_by_label(const NaryComplexProduct& p);

// Transitive closure of the relation "two faces share an antipodal vertex
// pair". No preconditions: callers compare the result against label blocks.
// Odd-length faces have no antipodal corners and stay singletons. The factor
// count is advisory (the closure never depends on it); BadParameter when < 1.
std::vector<FaceBlock> face_blocks_intrinsic(const Complex& x, int factor_count = 1);

// Unordered antipodal vertex pairs -> faces containing them (each face once).
std::map<std::pair<int, int>, std::vector<int>> antipodal_pair_faces(const Complex& x);

struct BlockGraph {
  MultiGraph graph;                       // one vertex per face tuple
  std::vector<std::vector<int>> tuples;   // face index per factor, per graph vertex
  std::vector<MultiGraph> factor_graphs;  // face incidence graph of each factor
};

// Vertices are tuples in the product of the factors' face sets; tuples are
// adjacent iff they agree in all but one coordinate and differ there by
// incident (vertex-sharing) faces. NotOrdinary unless every factor is
// ordinary.
BlockGraph block_graph(const std::vector<std::shared_ptr<const Complex>>& factors);

enum class IncidenceVerdict { Both, Neither, Counterexample };

struct IncidenceReport {
  IncidenceVerdict verdict = IncidenceVerdict::Neither;
  // On Counterexample: either a member of b with no incident face in bp
  // (face_bp = -1), or an incident member pair found although the generator
  // condition fails.
  int face_b = -1;
  int face_bp = -1;
};

// Evaluates, for two incident blocks of p: (1) the generators differ in
// exactly one coordinate and are incident there; (2) every member of b is
// incident to some member of bp. Reports whether both, neither, or a
// counterexample separates them. NotIncident when the blocks do not touch.
IncidenceReport verify_block_incidence_equiv(const NaryComplexProduct& p, const FaceBlock& b,
                                             const FaceBlock& bp);

// Walks of d +-1 steps from height d-2k down to 0: C(d-1, k) of them arrive
// from 1 and C(d-1, k-1) from -1. RangeError outside 0 <= k <= d/2 or when
// from is not +1 or -1.
long long count_walk_arrivals(int d, int k, int from);

}  // namespace polycell
