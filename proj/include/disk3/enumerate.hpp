#pragma once

#include <functional>

#include "disk3/coloring.hpp"
#include "disk3/plane_graph.hpp"

// Exhaustive generation of the 2-connected plane graphs rooted at a fixed
// outer cycle, filtered by cycle constraints, one representative per rooted
// isomorphism class.  Construction is by ear insertion into inner faces: every
// 2-connected graph strictly containing its outer cycle has a removable ear
// (an open ear decomposition can end on one), so repeated insertion reaches
// every class; duplicates are cut by accepting a child only when the inserted
// ear is the canonical removable ear of the child, and by expanding one move
// per orbit of the parent's automorphisms.

namespace disk3 {

struct GenConstraints {
  int outer_len = 6;
  int max_vertices = 12;
  int max_triangles = 1;     // triangles other than the outer cycle
  int min_other_cycle = 5;   // shortest allowed cycle besides those and the outer cycle
  bool require_2connected = true;  // false is unsupported
};

// Throws BadConstraints.
void validate_constraints(const GenConstraints& c);

// Streams every graph in the family exactly once, deterministic order.
void enumerate_graphs(const GenConstraints& c,
                      const std::function<void(const PlaneGraph&)>& sink);
std::vector<PlaneGraph> enumerate_all(const GenConstraints& c);

// Deterministic split for workers and checkpoints: the bare cycle seed plus
// its accepted children; every other graph in the family descends from exactly
// one of those children.
struct EnumRoots {
  PlaneGraph seed;
  std::vector<PlaneGraph> roots;
};
EnumRoots enumeration_roots(const GenConstraints& c);

// Emits root and all accepted descendants of root.
void enumerate_subtree(const GenConstraints& c, const PlaneGraph& root,
                       const std::function<void(const PlaneGraph&)>& sink);

// Members of the family whose precoloring extension behavior changes when any
// single interior edge is removed.
std::vector<PlaneGraph> find_critical(const GenConstraints& c);

// Structural facts that hold for every critical graph in the family; the
// sweeps assert they are never violated.
struct CriticalityClaims {
  std::vector<int> internal_low_degree;    // internal vertices of degree < 3
  std::vector<int> internal_multi_attach;  // internal vertices with >= 2 outer neighbors
  std::vector<CycleRef> bad_interiors;     // non-facial cycles whose interior is not critical

  bool pass() const {
    return internal_low_degree.empty() && internal_multi_attach.empty() && bad_interiors.empty();
  }
};
CriticalityClaims check_criticality_claims(const PlaneGraph& g);

}  // namespace disk3
