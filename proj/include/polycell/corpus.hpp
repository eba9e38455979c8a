#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "polycell/complex.hpp"
#include "polycell/rng.hpp"

namespace polycell {

// Named graphs. Vertices are "0".."n-1" unless noted.
MultiGraph cycle_graph(int n);     // n >= 1; n=1 is a loop, n=2 a double edge
MultiGraph complete_graph(int n);  // n >= 1
MultiGraph path_graph(int n);      // n vertices, n-1 edges
MultiGraph star_graph(int leaves);
MultiGraph complete_bipartite_graph(int a, int b);
MultiGraph loop_graph();  // one vertex, one loop

// Named complexes.
Complex polygon(int n);  // n-cycle skeleton with one n-gon
Complex one_gon();       // polygon(1)
Complex wrapped_polygon(int total, int core);  // total-gon wound total/core times around a core-cycle
Complex cycle(int n);     // faceless
Complex complete(int n);  // faceless
Complex dunce_hat();      // one vertex, one loop e, face [e+ e+ e-]
Complex tetrahedron();    // surface: K4 skeleton, four triangles
Complex cube_surface();   // surface: Q3 skeleton, six squares
// Closed band of `squares` quadrilaterals; `twisted` glues the last one with a flip.
Complex strip(int squares, bool twisted);
// Cycle of `beads` faces of length face_len, consecutive beads glued at one
// vertex, the two glue vertices of each bead antipodal on its boundary.
Complex necklace(int beads, int face_len);
// Brick-wall hexagon tiling of the torus: 2*a*b vertices, a*b hexagons. b even.
Complex hex_torus(int a, int b);

std::shared_ptr<const MultiGraph> shared_graph(MultiGraph g);
std::shared_ptr<const Complex> shared_complex(Complex x);

// Seeded random instances. All draws come from the passed generator, so a
// fixed seed fixes the whole sequence.
MultiGraph random_multigraph(Rng& rng, int max_vertices, int max_edges);  // loops/parallels allowed
MultiGraph random_connected_simple_graph(Rng& rng, int max_vertices);     // >= 2 vertices
std::optional<Walk> random_closed_walk(const MultiGraph& g, Rng& rng, int max_len,
                                       int attempts = 32);
Complex random_complex(Rng& rng, int max_vertices, int max_edges, int max_faces,
                       int max_face_len);

// Every multigraph on `vertices` labeled vertices with exactly `edges` edges:
// multisets over the vertex pairs (loops included), deterministic order.
std::vector<MultiGraph> all_multigraphs(int vertices, int edges);

}  // namespace polycell
