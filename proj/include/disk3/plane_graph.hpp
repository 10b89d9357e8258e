#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Plane graphs as rotation systems: per vertex, the clockwise cyclic order of
// its neighbors.  Faces are recovered by tracing; a designated face is the
// outer one.  Vertices are 0-based ints internally, 1-based in the text format.
// Everything here assumes n <= 64 so vertex sets fit in one word.

namespace disk3 {

enum class Err {
  NonSimple,
  Disconnected,
  NonPlanarRotation,
  OuterFaceNotFound,
  CycleNotFound,
  OuterNotCycle,
  DomainMismatch,
  NotInClass,
  IncompletePrecoloring,
  GirthTooSmall,
  OuterTooLong,
  NoDesignatedTriangleFace,
  OuterLenNot6,
  BadConstraints,
  ParseError,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

inline constexpr int max_vertices_supported = 64;
inline constexpr int inf_distance = 1 << 30;

// Closed facial walk: verts[i] -> verts[i+1 mod size] are its directed edges.
// A walk visits each directed edge at most once but may repeat vertices (it
// does not in 2-connected graphs).  Stored starting at its minimal directed
// edge, so equal faces compare equal as sequences.
struct FacialWalk {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }
  uint64_t vertex_mask() const;
  bool is_simple_cycle() const;
};

// Simple cycle in canonical form: starts at its minimal vertex and runs in the
// direction whose second vertex is smaller than its last.  Unique per cycle up
// to rotation and reflection, so CycleRefs compare with ==.
struct CycleRef {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }
  uint64_t vertex_mask() const;
  bool operator==(const CycleRef& o) const { return verts == o.verts; }
  bool operator<(const CycleRef& o) const;
};

// Normalizes an arbitrary traversal of a simple cycle.
CycleRef canon_cycle(const std::vector<int>& verts);

struct RotationInput {
  int n = 0;
  std::vector<std::vector<int>> rotation;  // clockwise neighbor order, 0-based
  std::vector<int> outer;                  // outer face, as a vertex sequence
};

struct PlaneGraph {
  int n = 0;
  std::vector<std::vector<int>> rotation;
  std::vector<uint64_t> adj;        // adjacency bitmasks
  int edges = 0;
  std::vector<FacialWalk> faces;    // ordered by minimal directed edge
  int outer_face_id = -1;

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  const FacialWalk& outer_face() const { return faces[outer_face_id]; }

  // Position of v in rotation[u]; -1 if not adjacent.
  int rotation_index(int u, int v) const;
  // Face containing the directed edge u->v.
  int face_at(int u, int v) const;

  // The outer walk as a simple cycle.  Throws OuterNotCycle otherwise.
  std::vector<int> outer_cycle() const;
  uint64_t outer_mask() const { return outer_face().vertex_mask(); }

private:
  friend PlaneGraph build(const RotationInput&);
  std::vector<int> face_of_edge_;   // indexed by u * n + rotation_index(u, v)
  std::vector<int8_t> nbr_index_;   // indexed by u * n + v
};

// Validates and derives everything: simplicity, connectivity, face tracing,
// Euler check V - E + F == 2, outer face lookup.
// Throws NonSimple, Disconnected, NonPlanarRotation, OuterFaceNotFound.
PlaneGraph build(const RotationInput& in);

// Same graph with all rotations reversed (the mirror embedding).
PlaneGraph mirrored(const PlaneGraph& g);

// Text format:
//   vertices N
//   rot v: a b c ...      one line per vertex, clockwise
//   outer: v1 v2 ... vk
// 1-based ids, '#' starts a comment.  Writers emit a canonical form (rotations
// start at the smallest neighbor, the outer line is the traced walk from its
// minimal directed edge), so emit-parse-emit is byte-identical.
PlaneGraph parse_rotg(const std::string& text);
PlaneGraph load_rotg(const std::string& path);
std::string to_rotg(const PlaneGraph& g);

// All simple cycles of length <= max_len, deduplicated up to rotation and
// reflection, sorted by (length, vertex sequence).
std::vector<CycleRef> cycles_up_to(const PlaneGraph& g, int max_len);

// Length of a shortest cycle, or 0 if the graph is a forest.
int girth(const PlaneGraph& g);

// Faces strictly inside the closed disk bounded by c (the side away from the
// outer face), as a bitmask of face ids.  c need not be facial.
// Throws CycleNotFound if c is not a cycle of g.
uint64_t faces_inside(const PlaneGraph& g, const CycleRef& c);

// The subgraph drawn inside c, rooted at c: vertices and edges of c plus
// everything strictly inside, with c as the new outer face.  orig_vertex maps
// new ids back to ids in g.
struct InteriorSubgraph {
  PlaneGraph graph;
  std::vector<int> orig_vertex;
};
InteriorSubgraph interior_subgraph(const PlaneGraph& g, const CycleRef& c);

// Fewest edges on a path from any vertex of xs to any vertex of ys
// (inf_distance if unreachable).
int subgraph_distance(const PlaneGraph& g, const std::vector<int>& xs,
                      const std::vector<int>& ys);

}  // namespace disk3
