#pragma once

#include <vector>

#include "disk3/plane_graph.hpp"

// Hand-built graphs shared across test files.  Rotations are clockwise; all
// face structures below were checked by tracing the walks by hand.

namespace fixtures {

inline disk3::RotationInput cycle_input(int k) {
  disk3::RotationInput in;
  in.n = k;
  in.rotation.resize(k);
  for (int i = 0; i < k; ++i) {
    in.rotation[i] = {(i + 1) % k, (i + k - 1) % k};
    in.outer.push_back(i);
  }
  return in;
}

inline disk3::PlaneGraph cycle(int k) { return disk3::build(cycle_input(k)); }

// Inserts v into rotation[u] right after w.
inline void insert_after(std::vector<int>& rot, int w, int v) {
  for (size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == w) {
      rot.insert(rot.begin() + i + 1, v);
      return;
    }
}

// C_k plus the chord u-v drawn inside.
inline disk3::PlaneGraph with_chord(int k, int u, int v) {
  disk3::RotationInput in = cycle_input(k);
  insert_after(in.rotation[u], (u + 1) % k, v);
  insert_after(in.rotation[v], (v + 1) % k, u);
  return disk3::build(in);
}

// C_k plus a path u - k - k+1 - ... - (k+len-2) - v drawn inside.
inline disk3::PlaneGraph with_ear(int k, int u, int v, int len) {
  disk3::RotationInput in = cycle_input(k);
  in.n = k + len - 1;
  insert_after(in.rotation[u], (u + 1) % k, k);
  insert_after(in.rotation[v], (v + 1) % k, k + len - 2);
  for (int i = 1; i < len; ++i) {
    int prev = i == 1 ? u : k + i - 2;
    int next = i == len - 1 ? v : k + i;
    in.rotation.push_back({prev, next});
  }
  return disk3::build(in);
}

// Tetrahedron: outer triangle 0 1 2, center 3.  All four faces triangular.
inline disk3::PlaneGraph k4() {
  return disk3::build({4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}, {0, 1, 2}});
}

// Same adjacency with rotation[3] reversed: V-E+F = 0, not planar.
inline disk3::RotationInput k4_twisted() {
  return {4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 2, 1}}, {0, 1, 2}};
}

// Hexagon with a center vertex joined to vertices 0, 2, 4: three inner
// 4-faces.
inline disk3::PlaneGraph tripod7() {
  return disk3::build(
      {7, {{1, 6, 5}, {2, 0}, {1, 3, 6}, {2, 4}, {5, 6, 3}, {4, 0}, {0, 2, 4}}, {0, 1, 2, 3, 4, 5}});
}

// Hexagon with the two chords 0-2 and 3-5: two inner triangles and a 4-face.
inline disk3::PlaneGraph double_triangle6() {
  return disk3::build(
      {6, {{1, 2, 5}, {2, 0}, {1, 3, 0}, {4, 5, 2}, {5, 3}, {4, 0, 3}}, {0, 1, 2, 3, 4, 5}});
}

// C9 with a center vertex joined to vertices 0, 3, 6: three inner 5-faces.
inline disk3::PlaneGraph spoked9() {
  disk3::RotationInput in = cycle_input(9);
  in.n = 10;
  for (int u : {0, 3, 6}) insert_after(in.rotation[u], (u + 1) % 9, 9);
  in.rotation.push_back({0, 3, 6});
  return disk3::build(in);
}

// C10 around an inner C5, vertex 10+j spoked to 2j: six inner 5-faces.
inline disk3::PlaneGraph ring10_core5() {
  disk3::RotationInput in = cycle_input(10);
  in.n = 15;
  for (int j = 0; j < 5; ++j) insert_after(in.rotation[2 * j], (2 * j + 1) % 10, 10 + j);
  for (int j = 0; j < 5; ++j)
    in.rotation.push_back({2 * j, 10 + (j + 1) % 5, 10 + (j + 4) % 5});
  return disk3::build(in);
}

}  // namespace fixtures
