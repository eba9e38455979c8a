#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polycell/error.hpp"

namespace polycell {

// Conventions used throughout:
//  * An edge has two darts (half-edges), side 0 and side 1; a loop still has
//    two darts. Dart index = 2*edge + side; the dart of side s sits at
//    endpoint ends[s].
//  * A traversal step (edge, forward) enters the edge at dart side 0 and
//    exits at side 1; backward is the opposite.
//  * Vertices and edges are canonically sorted by id, so equal inputs compile
//    to bit-identical graphs.

struct GraphData {
  struct EdgeSpec {
    std::string id;
    std::string end0;
    std::string end1;
  };
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
};

// First structural violation in raw graph data, if any.
std::optional<Violation> validate(const GraphData& data);

class MultiGraph {
 public:
  struct Edge {
    std::string id;
    std::array<int, 2> ends;
  };

  MultiGraph() = default;
  explicit MultiGraph(const GraphData& data);  // throws Error(SemanticError) on invalid data
  MultiGraph(std::vector<std::string> vertices, std::vector<GraphData::EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_index(const std::string& id) const;  // -1 when absent
  int edge_index(const std::string& id) const;    // -1 when absent
  int require_vertex(const std::string& id) const;
  int require_edge(const std::string& id) const;

  // Incident darts of v as (edge, side), sorted; loops contribute both sides.
  const std::vector<std::pair<int, int>>& incident_darts(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

  int dart_vertex(int dart) const { return edges_[dart >> 1].ends[dart & 1]; }
  bool is_loop(int e) const { return edges_[e].ends[0] == edges_[e].ends[1]; }

  // Number of edges joining u and v (u == v counts loops).
  int multiplicity(int u, int v) const;

  GraphData data() const;  // back to raw form (already canonical)

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> incidence_;
  std::unordered_map<std::string, int> vertex_lookup_;
  std::unordered_map<std::string, int> edge_lookup_;
};

inline int dart_of(int edge, int side) { return 2 * edge + side; }
inline int dart_edge(int dart) { return dart >> 1; }
inline int dart_side(int dart) { return dart & 1; }
inline int dart_sibling(int dart) { return dart ^ 1; }

struct Step {
  int edge = -1;
  bool forward = true;

  bool operator==(const Step&) const = default;
  auto operator<=>(const Step&) const = default;
};

inline int step_enter_dart(const Step& s) { return dart_of(s.edge, s.forward ? 0 : 1); }
inline int step_exit_dart(const Step& s) { return dart_of(s.edge, s.forward ? 1 : 0); }

struct Walk {
  int start = -1;
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }
  bool operator==(const Walk&) const = default;
};

int step_source(const MultiGraph& g, const Step& s);
int step_target(const MultiGraph& g, const Step& s);

bool walk_valid(const MultiGraph& g, const Walk& w);
bool walk_closed(const MultiGraph& g, const Walk& w);
void require_closed_walk(const MultiGraph& g, const Walk& w);  // EmptyWalk / InvalidWalk

// Vertices visited: length()+1 entries, first == start, last == end.
std::vector<int> walk_vertices(const MultiGraph& g, const Walk& w);

Walk rotate_walk(const MultiGraph& g, const Walk& w, int offset);  // closed walks only
Walk reverse_walk(const MultiGraph& g, const Walk& w);
Walk repeat_walk(const MultiGraph& g, const Walk& w, int times);  // closed walks only

// Primitive closed walk and its multiplicity: w == primitive repeated k times,
// with the smallest possible primitive length.
struct ReducedWalk {
  Walk primitive;
  int multiplicity = 1;
};
ReducedWalk reduce_closed_walk(const MultiGraph& g, const Walk& w);

// Canonical token for a closed walk: equal tokens iff the walks agree up to
// rotation, and (by default) also up to reversal.
std::string canonical_cycle_key(const MultiGraph& g, const Walk& w, bool include_reversal = true);

struct ComponentSplit {
  std::vector<std::vector<int>> vertex_sets;  // sorted within and between parts
  std::vector<MultiGraph> subgraphs;          // induced, ids preserved
  std::vector<int> component_of;              // vertex -> part index
};
ComponentSplit components(const MultiGraph& g);

bool is_connected(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);  // loops and odd cycles both break bipartiteness
bool has_odd_closed_walk(const MultiGraph& g);

// No parallel edges (loops allowed): the class S0 carrier check.
bool in_s0(const MultiGraph& g);
// Simple: in S0 and loop-free.
bool is_simple(const MultiGraph& g);

// Distinct closed-neighbourhood test: neighbour sets ignore edge multiplicity,
// and a loop puts the vertex into its own set.
bool is_r_thin(const MultiGraph& g);
std::vector<std::vector<int>> neighbor_sets(const MultiGraph& g);

// BFS hop distance; -1 when unreachable.
int shortest_path_distance(const MultiGraph& g, int from, int to);

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b, const std::string& tag_a,
                          const std::string& tag_b);

}  // namespace polycell
