#pragma once

#include <array>
#include <optional>

#include "disk3/coloring.hpp"
#include "disk3/plane_graph.hpp"

// The decidable class: plane graphs whose outer face is a simple cycle of
// length at most six, with at most one triangle besides the outer cycle and no
// other cycle shorter than five.  For these, extendability of a precoloring of
// the outer cycle is decided by two local conditions instead of search.

namespace disk3 {

struct ClassReport {
  int outer_len = 0;
  std::vector<CycleRef> triangles;     // all 3-cycles, outer cycle included when it is one
  std::vector<CycleRef> short_cycles;  // all 4-cycles, likewise
  bool in_class = false;
  std::optional<CycleRef> designated_triangle;  // the one triangle besides the outer cycle
};

// Throws OuterNotCycle when the outer face is not a simple cycle.
ClassReport validate_class(const PlaneGraph& g);

// Lowest-numbered face lying inside the closed disk bounded by every cycle of
// length at most four (with no such cycles, every face qualifies and face 0 is
// returned).  nullopt when no face works.
std::optional<int> find_core_face(const PlaneGraph& g);

struct ExtensionDecision {
  enum class Variant { Extends, FailsA, FailsB };
  Variant variant = Variant::Extends;
  // FailsA: a monochromatic edge between outer-cycle vertices, reported as the
  // first outer-walk edge in walk order, else the lexicographically first chord.
  int edge_u = -1, edge_v = -1;
  // FailsB: three outer vertices of this color matched to the triangle by
  // vertex-disjoint edges; cycle_verts ascending, cycle_verts[i] adjacent to
  // triangle_verts[i].
  int color = 0;
  std::array<int, 3> cycle_verts{{-1, -1, -1}};
  std::array<int, 3> triangle_verts{{-1, -1, -1}};
};

// Decides extendability of phi (a full coloring of the outer cycle, nothing
// else) without search:
//   1. monochromatic outer-walk edge            -> FailsA
//   2. outer cycle shorter than six             -> Extends
//   3. monochromatic chord on the outer cycle   -> FailsA
//   4. some color matched into a triangle disjoint from the outer cycle by
//      three vertex-disjoint edges              -> FailsB
//   5. otherwise                                -> Extends
// Throws NotInClass, IncompletePrecoloring, DomainMismatch.
ExtensionDecision decide_extension(const PlaneGraph& g, const Precoloring& phi,
                                   const ClassReport& cls);
ExtensionDecision decide_extension(const PlaneGraph& g, const Precoloring& phi);

// Weaker triangle condition: the designated triangle is disjoint from the
// outer cycle and each of its vertices has a neighbor of the given color on
// it.  Agrees with the matching form on the whole class (the sweep checks
// this); kept separate so tests can compare the two readings.
bool weak_triangle_block(const PlaneGraph& g, const ClassReport& cls, const Precoloring& phi,
                         int color);

// One-line machine-readable form with 1-based vertex ids:
//   "extends" | "fails_a u v" | "fails_b x u1 u2 u3 t1 t2 t3"
std::string decision_line(const ExtensionDecision& d);

enum class CatalogMatch { Fig1a, Fig1b, Other };

// Which of the two extremal graphs g is, up to rooted isomorphism.
CatalogMatch classify_critical(const PlaneGraph& g);

}  // namespace disk3
