#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "disk3/plane_graph.hpp"

// Precoloring extension with colors {1, 2, 3}.  A precoloring assigns a color
// to some vertices (0 = unassigned); an extension is a proper 3-coloring of
// the whole graph agreeing with it.  The search is exact backtracking, so
// these functions are the ground truth the rest of the library is checked
// against.

namespace disk3 {

using Precoloring = std::vector<int8_t>;

// First extension found under the deterministic search order (most constrained
// vertex first, lowest id on ties, colors ascending), or nullopt.  A
// precoloring that is already improper has no extension.
// Throws DomainMismatch if phi has the wrong size or colors outside 0..3.
std::optional<Precoloring> extend_coloring(const PlaneGraph& g, const Precoloring& phi);

long long count_extensions(const PlaneGraph& g, const Precoloring& phi);

// All proper colorings of the outer cycle alone (the rest unassigned), in
// lexicographic order along the stored outer walk.  Throws OuterNotCycle.
std::vector<Precoloring> proper_precolorings(const PlaneGraph& g);

// A graph G with outer cycle R is R-critical when G != R and removing any
// single non-R edge changes which precolorings of R extend: for every such
// edge there is a proper precoloring of R extending to G - e but not to G.
// (Single-edge removals are the maximal proper subgraphs containing R, and
// extendability only improves under taking subgraphs, so checking them
// suffices.)
struct SubgraphWitness {
  int removed_u = -1, removed_v = -1;
  bool found = false;
  Precoloring phi;  // extends in g minus the edge, not in g; empty if !found
};

struct CriticalityReport {
  bool graph_equals_outer = false;
  bool is_critical = false;
  // One entry per non-outer edge, in lexicographic edge order.  On the first
  // edge with no witness the scan stops and the report is negative.
  std::vector<SubgraphWitness> witnesses;
};

CriticalityReport criticality(const PlaneGraph& g);

bool is_critical(const PlaneGraph& g);

}  // namespace disk3
