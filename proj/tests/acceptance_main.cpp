// Release gate: one line per criterion, [PASS] or [FAIL]; exit status is the
// number of failed criteria.  Everything here is exhaustive at its stated
// scale — no sampling, no shortcuts that change the checked property.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "disk3/canonical.hpp"
#include "disk3/catalog.hpp"
#include "disk3/coloring.hpp"
#include "disk3/discharge.hpp"
#include "disk3/enumerate.hpp"
#include "disk3/plane_graph.hpp"
#include "disk3/verify.hpp"
#include "oracles.hpp"

using namespace disk3;

namespace {

GenConstraints gc(int outer, int maxn, int tri, int minc) {
  GenConstraints c;
  c.outer_len = outer;
  c.max_vertices = maxn;
  c.max_triangles = tri;
  c.min_other_cycle = minc;
  return c;
}

std::string num(int64_t v) { return std::to_string(static_cast<long long>(v)); }

// 3-cycles as vertex sets, the outer cycle included when it is one.
int64_t total_triangles(const PlaneGraph& g) {
  int64_t count = 0;
  for (int u = 0; u < g.n; ++u) {
    uint64_t nb = g.adj[u] & ~((uint64_t{2} << u) - 1);
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      count += std::popcount(g.adj[u] & g.adj[v] & ~((uint64_t{2} << v) - 1));
    }
  }
  return count;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// 1. The fast decision agrees with the backtracking oracle on every graph of
// the class (outer length 3..6, at most 12 vertices) for all 3^k assignments.
Outcome criterion_1() {
  Outcome out;
  int64_t graphs = 0, assignments = 0, bad = 0;
  for (int k = 3; k <= 6; ++k) {
    VerifyTally t = verify_sweep(gc(k, 12, 1, 5), VerifyOptions{});
    graphs += t.graphs;
    assignments += t.assignments;
    bad += t.disagreement_count;
    if (t.disagreement_count != 0) {
      out.pass = false;
      out.detail += "outer " + num(k) + ": " + num(t.disagreement_count) + " disagreements; ";
    }
  }
  out.detail += num(graphs) + " graphs, " + num(assignments) + " assignments, " +
                num(bad) + " disagreements";
  return out;
}

// 2. With outer length 6 and at most 11 vertices the critical graphs are
// exactly the two catalog graphs; with outer length 3..5 there are none.
Outcome criterion_2() {
  Outcome out;
  std::vector<PlaneGraph> found = find_critical(gc(6, 11, 1, 5));
  int like_a = 0, like_b = 0;
  PlaneGraph a = fig1a(), b = fig1b();
  for (const PlaneGraph& g : found) {
    if (rooted_isomorphic(g, a)) ++like_a;
    if (rooted_isomorphic(g, b)) ++like_b;
  }
  if (found.size() != 2 || like_a != 1 || like_b != 1) {
    out.pass = false;
    out.detail += "hexagon: found " + num(found.size()) + " (" + num(like_a) +
                  " like Fig1a, " + num(like_b) + " like Fig1b); ";
  } else {
    out.detail += "hexagon: exactly Fig1a and Fig1b; ";
  }
  std::string shorter;
  for (int k = 3; k <= 5; ++k) {
    size_t n = find_critical(gc(k, 11, 1, 5)).size();
    if (n != 0) {
      out.pass = false;
      shorter += " outer " + num(k) + ": " + num(n) + ",";
    }
  }
  out.detail += shorter.empty() ? "outer 3/4/5: none" : ("unexpected criticals:" + shorter);
  return out;
}

// 3. Pentagon boundary, triangle-free, 4-cycles allowed: no critical graphs
// up to 12 vertices.
Outcome criterion_3() {
  std::vector<PlaneGraph> found = find_critical(gc(5, 12, 0, 4));
  Outcome out;
  out.pass = found.empty();
  out.detail = "criticals found: " + num(found.size());
  return out;
}

// 4. Hexagon boundary, triangle-free, 4-cycles allowed: every critical graph
// up to 12 vertices has an all-quadrilateral interior.
Outcome criterion_4() {
  Outcome out;
  int64_t found = 0, violations = 0;
  for (const PlaneGraph& g : find_critical(gc(6, 12, 0, 4))) {
    ++found;
    if (!quadrangulated_interior(g)) ++violations;
  }
  out.pass = violations == 0;
  out.detail = num(found) + " criticals, " + num(violations) + " interior-shape violations";
  return out;
}

// 5. Outer length 3..5, at most 12 vertices, 4-cycles allowed: every critical
// graph with exactly one triangle in total is a pentagon whose triangular face
// shares an edge with the boundary and whose other inner faces are
// quadrilaterals.  For an outer triangle, exactly one triangle in total means
// a triangle-free interior, so that leg enumerates the 0-extra-triangle
// family — the same graph set, far fewer candidates.
Outcome criterion_5() {
  Outcome out;
  std::string legs;
  for (int k = 3; k <= 5; ++k) {
    GenConstraints c = k == 3 ? gc(3, 12, 0, 4) : gc(k, 12, 1, 4);
    int64_t found = 0, violations = 0;
    enumerate_graphs(c, [&](const PlaneGraph& g) {
      if (total_triangles(g) != 1) return;
      if (!is_critical(g)) return;
      ++found;
      if (!pentagon_one_triangle_shape(g)) ++violations;
    });
    if (violations != 0) out.pass = false;
    legs += "outer " + num(k) + ": " + num(found) + " criticals, " + num(violations) +
            " shape violations; ";
  }
  out.detail = legs.substr(0, legs.size() - 2);
  return out;
}

// 6. Exact precoloring counts on the catalog graphs, decided and brute-forced
// over all 3^6 assignments: Fig1a 36 blocked / 30 extendable, Fig1b 24 / 42.
Outcome criterion_6() {
  Outcome out;
  struct Want {
    const char* name;
    PlaneGraph g;
    int64_t blocked, extendable;
  };
  Want wants[] = {{"Fig1a", fig1a(), 36, 30}, {"Fig1b", fig1b(), 24, 42}};
  for (const Want& w : wants) {
    VerifyTally t = verify_graph(w.g);
    int64_t blocked = t.fails_a + t.fails_b;
    bool ok = t.assignments == 729 && t.proper == 66 && t.extendable == w.extendable &&
              blocked == w.blocked && t.disagreement_count == 0;
    if (!ok) out.pass = false;
    out.detail += std::string(w.name) + ": " + num(blocked) + " blocked / " +
                  num(t.extendable) + " extendable, " + num(t.disagreement_count) +
                  " disagreements; ";
  }
  out.detail.resize(out.detail.size() - 2);
  return out;
}

// 7. For every class graph with hexagonal boundary and a triangular inner
// face, the initial charge total equals n3 + 5*n2/3 - 7 and redistribution
// preserves it, in exact thirds; the spoked catalog graph totals exactly 1.
Outcome criterion_7() {
  Outcome out;
  int64_t charged = 0, violations = 0;
  enumerate_graphs(gc(6, 12, 1, 5), [&](const PlaneGraph& g) {
    ChargeLedger led;
    try {
      led = discharge(g);
    } catch (const Error& e) {
      if (e.code() == Err::NoDesignatedTriangleFace) return;
      throw;
    }
    ++charged;
    Thirds expect = whole(led.n_deg3 - 7) + third(5 * led.n_deg2);
    Thirds face_sum, vertex_sum, face_fin, vertex_fin;
    for (Thirds q : led.face_initial) face_sum += q;
    for (Thirds q : led.vertex_initial) vertex_sum += q;
    for (Thirds q : led.face_final) face_fin += q;
    for (Thirds q : led.vertex_final) vertex_fin += q;
    bool ok = led.initial_total == expect && led.redistributed_total == led.initial_total &&
              face_sum + vertex_sum == led.initial_total &&
              face_fin + vertex_fin == led.redistributed_total;
    if (!ok) ++violations;
  });
  ChargeLedger lb = discharge(fig1b());
  bool b_ok = lb.initial_total == whole(1) && lb.redistributed_total == whole(1);
  out.pass = violations == 0 && b_ok;
  out.detail = num(charged) + " graphs with a triangular face, " + num(violations) +
               " violations, Fig1b total " + lb.initial_total.str();
  return out;
}

// 8. Structural claims on the critical graphs found at full class constraints:
// internal degrees >= 3, at most one boundary neighbor per internal vertex,
// and the interior of every non-facial cycle is itself critical.
Outcome criterion_8() {
  Outcome out;
  int64_t checked = 0, violations = 0;
  for (int k = 3; k <= 6; ++k) {
    for (const PlaneGraph& g : find_critical(gc(k, 11, 1, 5))) {
      ++checked;
      if (!check_criticality_claims(g).pass()) ++violations;
    }
  }
  out.pass = violations == 0;
  out.detail = num(checked) + " critical graphs, " + num(violations) + " claim violations";
  return out;
}

// 9. At toy scale (pentagon boundary, at most 8 vertices) the generator's
// output matches an independent brute force over edge subsets and rotation
// systems, class by class.
Outcome criterion_9() {
  Outcome out;
  std::set<std::string> mine;
  enumerate_graphs(gc(5, 8, 1, 5), [&](const PlaneGraph& g) { mine.insert(canon(g).code); });
  oracles::BfConstraints bc;
  bc.outer_len = 5;
  bc.max_vertices = 8;
  bc.max_triangles = 1;
  bc.min_other_cycle = 5;
  std::set<std::string> brute = oracles::bf_codes(bc);
  out.pass = mine == brute;
  out.detail = num(mine.size()) + " generated classes vs " + num(brute.size()) + " brute classes" +
               (out.pass ? ", identical" : ", MISMATCH");
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"decision procedure matches oracle across the class", criterion_1},
      {"hexagon critical catalog", criterion_2},
      {"pentagon triangle-free criticals", criterion_3},
      {"hexagon triangle-free critical shape", criterion_4},
      {"one-triangle short-boundary critical shape", criterion_5},
      {"catalog precoloring counts", criterion_6},
      {"charge identity and conservation", criterion_7},
      {"critical-graph structural claims", criterion_8},
      {"generator matches brute-force embeddings", criterion_9},
  };
  int failures = 0;
  for (int i = 0; i < 9; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entries[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.1f", secs);
    std::printf("[%s] criterion %d: %s (%s) [%ss]\n", o.pass ? "PASS" : "FAIL", i + 1,
                entries[i].name, o.detail.c_str(), wall);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
