#pragma once

#include <string>
#include <vector>

#include "disk3/plane_graph.hpp"

// Rooted canonical form of a plane graph with designated outer face: minimal
// breadth-first encoding over all starts on the outer walk and both
// orientations.  Two graphs get equal codes exactly when some relabeling maps
// one onto the other carrying rotations (possibly all reversed) and the outer
// face onto the outer face, i.e. rooted isomorphism up to rotation and
// reflection of the boundary.

namespace disk3 {

struct CanonForm {
  std::string code;
  // Every labeling old id -> new id that achieves the code.  Size = number of
  // rooted automorphisms; at most 2 * outer length.
  std::vector<std::vector<int>> labelings;
};

CanonForm canon(const PlaneGraph& g);

bool rooted_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

// Permutations old id -> old id preserving adjacency, rotations up to global
// reflection, and the outer face.  Includes the identity.
std::vector<std::vector<int>> rooted_automorphisms(const PlaneGraph& g);

}  // namespace disk3
