#pragma once

#include "disk3/plane_graph.hpp"

// The two extremal graphs rooted at a hexagonal outer face, plus the interior
// shape predicates that the small-scale sweeps check every critical graph
// against.

namespace disk3 {

// Hexagon r1..r6 with the chord r1r3: faces of lengths 6, 3, 5.
PlaneGraph fig1a();

// Hexagon r1..r6 around a triangle t1t2t3 joined by the spokes t1r1, t2r5,
// t3r3: faces of lengths 6, 3, 5, 5, 5.
PlaneGraph fig1b();

// Every inner face is a 4-face.
bool quadrangulated_interior(const PlaneGraph& g);

// Outer cycle of length five, exactly one triangular inner face, that face
// sharing an edge with the outer cycle, and every other inner face a 4-face.
// False whenever any part fails.
bool pentagon_one_triangle_shape(const PlaneGraph& g);

// Shape of a critical graph rooted at an outer cycle C in a girth-5 host:
//   Chorded       all vertices on C, C not induced, |C| >= 8
//   TreeCore      the vertices off C induce a tree with at most |C|-8
//                 vertices, each of degree three in the graph, |C| >= 9
//   UnicyclicCore the vertices off C induce a connected subgraph with exactly
//                 one cycle, of length five, at most |C|-5 vertices, each of
//                 degree three in the graph, |C| >= 10
//   None          anything else
// Throws GirthTooSmall (girth below five) and OuterTooLong (|C| > 11).
enum class BoundaryShapeCase { None, Chorded, TreeCore, UnicyclicCore };

struct BoundaryShape {
  BoundaryShapeCase kind = BoundaryShapeCase::None;
  int chord_u = -1, chord_v = -1;  // Chorded: one chord of C
  std::vector<int> core;           // TreeCore, UnicyclicCore: vertices off C
  std::vector<int> core_cycle;     // UnicyclicCore: its unique cycle
};

BoundaryShape boundary_shape(const PlaneGraph& h);

}  // namespace disk3
