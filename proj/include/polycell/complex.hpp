#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycell/multigraph.hpp"

namespace polycell {

// A polygonal face: an n-gon (n >= 1) attached along a closed dart walk.
struct Face {
  std::string id;
  Walk boundary;
};

struct ComplexData {
  GraphData skeleton;
  struct FaceSpec {
    std::string id;
    // (edge id, forward?) steps of the attaching walk
    std::vector<std::pair<std::string, bool>> steps;
  };
  std::vector<FaceSpec> faces;
};

std::optional<Violation> validate(const ComplexData& data);

class Complex {
 public:
  Complex() : skel_(std::make_shared<MultiGraph>()) {}
  explicit Complex(const ComplexData& data);
  Complex(MultiGraph skeleton, std::vector<Face> faces);  // faces sorted by id; walks re-checked
  Complex(std::shared_ptr<const MultiGraph> skeleton, std::vector<Face> faces);

  const MultiGraph& skeleton() const { return *skel_; }
  std::shared_ptr<const MultiGraph> skeleton_ptr() const { return skel_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const Face& face(int f) const { return faces_[f]; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_index(const std::string& id) const;
  int require_face(const std::string& id) const;

  ComplexData data() const;

 private:
  std::shared_ptr<const MultiGraph> skel_;
  std::vector<Face> faces_;
};

// Corner j of a face of length n sits at boundary vertex j and joins the exit
// dart of step j-1 (side 0 of the link edge) with the enter dart of step j.
struct Corner {
  int face = -1;
  int position = -1;

  bool operator==(const Corner&) const = default;
  auto operator<=>(const Corner&) const = default;
};

int corner_vertex(const Complex& x, const Corner& c);
int corner_dart(const Complex& x, const Corner& c, int side);  // side 0: exit of j-1; side 1: enter of j

// A flag is a corner with one of its two triangle sides: side 0 borders the
// exit dart of step j-1, side 1 the enter dart of step j.
struct Flag {
  Corner corner;
  int side = 0;

  bool operator==(const Flag&) const = default;
  auto operator<=>(const Flag&) const = default;
};

// All flags in canonical order: by (face, position, side).
std::vector<Flag> flags(const Complex& x);
// Offset of face f's flags within the canonical order; index = offset + 2*pos + side.
std::vector<int> flag_offsets(const Complex& x);

// Link graph at v: one vertex per dart at v (id "edge:side"), one edge per
// face corner at v (id "face@position").
struct LinkGraph {
  MultiGraph graph;
  std::vector<int> dart_of_vertex;     // link vertex -> skeleton dart
  std::vector<Corner> corner_of_edge;  // link edge -> corner
};
LinkGraph link(const Complex& x, int v);

long long euler_characteristic(const Complex& x);

// First integral homology as (betti rank, torsion invariant factors > 1).
struct Homology {
  long long betti = 0;
  std::vector<long long> torsion;

  bool operator==(const Homology&) const = default;
};
Homology homology_h1(const Complex& x);

enum class SimplyConnectedVerdict { FailsChi, FailsH1, Passes };
SimplyConnectedVerdict simply_connected_necessary(const Complex& x);

// Polygonal: injective attaching maps, simple skeleton, and pairwise closed
// cell intersections that are empty or a single closed cell.
bool is_polygonal(const Complex& x);

// Simple complex: at least one face, no multiply-wrapped face, no two faces
// attached along the same cycle (up to rotation, and reversal by default).
bool is_simple_complex(const Complex& x, bool reversal_in_keys = true);

// Elementary: connected, uniform even face length 2n >= 2, antipodal corners
// of a face at distinct vertices, and each vertex pair carrying at most one
// antipodal corner pair.
bool is_elementary(const Complex& x);

// Ordinary: connected, uniform even face length 2n >= 4, corners of a face at
// a common vertex have equal parity, and the corners of a face meeting another
// face are a single corner or two cyclically consecutive corners.
bool is_ordinary(const Complex& x);

// Faces attached at v (each corner once).
std::vector<Corner> corners_at_vertex(const Complex& x, int v);

// The component of the given vertex as a sub-complex; ids are preserved.
Complex component_complex(const Complex& x, int v);

bool complexes_equal(const Complex& a, const Complex& b);  // identical ids and structure

}  // namespace polycell
