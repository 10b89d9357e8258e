#include "disk3/discharge.hpp"

#include <cassert>

namespace disk3 {

std::string Thirds::str() const {
  if (t % 3 == 0) return std::to_string(t / 3);
  return std::to_string(t) + "/3";
}

int64_t euler_deficiency(const PlaneGraph& g) {
  int64_t s = 0;
  for (const FacialWalk& f : g.faces) s += f.length() - 4;
  for (int v = 0; v < g.n; ++v) s += g.degree(v) - 4;
  return s;
}

ChargeLedger discharge(const PlaneGraph& g) {
  if (g.outer_cycle().size() != 6) throw Error(Err::OuterLenNot6, "outer cycle length is not 6");

  ChargeLedger led;
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (static_cast<int>(f) == g.outer_face_id) continue;
    if (g.faces[f].length() == 3) {
      if (led.triangle_face >= 0)
        throw Error(Err::NoDesignatedTriangleFace, "more than one inner triangular face");
      led.triangle_face = static_cast<int>(f);
    }
  }
  if (led.triangle_face < 0)
    throw Error(Err::NoDesignatedTriangleFace, "no inner triangular face");

  uint64_t outer = g.outer_mask();
  led.vertex_initial.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    bool on_outer = (outer >> v) & 1;
    if (on_outer && d == 2) {
      led.vertex_initial[v] = third(-1);
      ++led.n_deg2;
    } else if (on_outer && d == 3) {
      led.vertex_initial[v] = whole(0);
      ++led.n_deg3;
    } else {
      led.vertex_initial[v] = whole(d - 4);
    }
  }
  led.face_initial.resize(g.faces.size());
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (static_cast<int>(f) == g.outer_face_id)
      led.face_initial[f] = whole(0);
    else if (static_cast<int>(f) == led.triangle_face)
      led.face_initial[f] = whole(2);
    else
      led.face_initial[f] = whole(g.faces[f].length() - 4);
  }
  for (Thirds c : led.vertex_initial) led.initial_total += c;
  for (Thirds c : led.face_initial) led.initial_total += c;

  led.vertex_final = led.vertex_initial;
  led.face_final = led.face_initial;
  for (size_t f = 0; f < g.faces.size(); ++f) {
    if (static_cast<int>(f) == g.outer_face_id) continue;
    uint64_t seen = 0;
    for (int v : g.faces[f].verts) {
      if ((seen >> v) & 1) continue;
      seen |= uint64_t{1} << v;
      int d = g.degree(v);
      bool internal = !((outer >> v) & 1);
      if (d == 2 || (internal && d == 3)) {
        led.face_final[f] -= third(1);
        led.vertex_final[v] += third(1);
      }
    }
  }
  {
    const std::vector<int>& tw = g.faces[led.triangle_face].verts;
    uint64_t sent = 0;
    for (size_t i = 0; i < tw.size(); ++i) {
      int a = tw[i], b = tw[(i + 1) % tw.size()];
      int other = g.face_at(b, a);
      assert(other != led.triangle_face);
      if ((sent >> other) & 1) continue;
      sent |= uint64_t{1} << other;
      led.face_final[led.triangle_face] -= third(1);
      led.face_final[other] += third(1);
    }
  }
  for (Thirds c : led.vertex_final) led.redistributed_total += c;
  for (Thirds c : led.face_final) led.redistributed_total += c;
  return led;
}

}  // namespace disk3
