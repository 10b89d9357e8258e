#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disk3/plane_graph.hpp"

namespace disk3 {

// Exact rational with denominator 3, stored as the numerator in thirds.
struct Thirds {
  int64_t t = 0;

  friend Thirds operator+(Thirds a, Thirds b) { return {a.t + b.t}; }
  friend Thirds operator-(Thirds a, Thirds b) { return {a.t - b.t}; }
  Thirds& operator+=(Thirds o) {
    t += o.t;
    return *this;
  }
  Thirds& operator-=(Thirds o) {
    t -= o.t;
    return *this;
  }
  friend bool operator==(Thirds a, Thirds b) { return a.t == b.t; }
  friend bool operator!=(Thirds a, Thirds b) { return a.t != b.t; }

  std::string str() const;
};

inline Thirds whole(int64_t w) { return {3 * w}; }
inline Thirds third(int64_t n) { return {n}; }

// Charge bookkeeping for a graph with outer cycle of length six and one inner
// triangular face.  Initial charges: the outer face gets 0, the triangular
// face gets 2, every other face gets its length minus 4; an outer vertex of
// degree two gets -1/3, an outer vertex of degree three gets 0, every other
// vertex gets its degree minus 4.  Redistribution: every inner face sends 1/3
// to each incident degree-two vertex and each incident internal degree-three
// vertex, and the triangular face also sends 1/3 to each distinct face it
// shares an edge with.
struct ChargeLedger {
  int triangle_face = -1;
  int n_deg2 = 0;  // outer vertices of degree two
  int n_deg3 = 0;  // outer vertices of degree three
  std::vector<Thirds> vertex_initial, vertex_final;
  std::vector<Thirds> face_initial, face_final;
  Thirds initial_total, redistributed_total;
};

ChargeLedger discharge(const PlaneGraph& g);

// Sum over faces of (length - 4) plus sum over vertices of (degree - 4);
// equals -8 for every plane graph by Euler's formula.
int64_t euler_deficiency(const PlaneGraph& g);

}  // namespace disk3
