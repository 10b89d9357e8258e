#include <cstdio>
#include <fstream>
#include <sstream>

#include "disk3/catalog.hpp"
#include "disk3/enumerate.hpp"
#include "disk3/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace disk3;
using namespace fixtures;
using nlohmann::ordered_json;

static GenConstraints gc(int outer, int max_n, int tri, int min_other) {
  GenConstraints c;
  c.outer_len = outer;
  c.max_vertices = max_n;
  c.max_triangles = tri;
  c.min_other_cycle = min_other;
  return c;
}

static bool tallies_equal(const VerifyTally& a, const VerifyTally& b) {
  return a.graphs == b.graphs && a.assignments == b.assignments && a.proper == b.proper &&
         a.improper == b.improper && a.extendable == b.extendable && a.fails_a == b.fails_a &&
         a.fails_b == b.fails_b && a.disagreement_count == b.disagreement_count;
}

TEST_CASE("single graph verification tallies") {
  VerifyTally a = verify_graph(fig1a());
  CHECK(a.graphs == 1);
  CHECK(a.assignments == 729);
  CHECK(a.proper == 66);
  CHECK(a.improper == 663);
  CHECK(a.extendable == 30);
  CHECK(a.fails_a == 36);
  CHECK(a.fails_b == 0);
  CHECK(a.disagreement_count == 0);
  CHECK(a.disagreements.empty());

  VerifyTally b = verify_graph(fig1b());
  CHECK(b.assignments == 729);
  CHECK(b.proper == 66);
  CHECK(b.extendable == 42);
  CHECK(b.fails_a == 0);
  CHECK(b.fails_b == 24);
  CHECK(b.disagreement_count == 0);

  VerifyTally s = verify_graph(cycle(6));
  CHECK(s.proper == 66);
  CHECK(s.extendable == 66);
  CHECK(s.fails_a == 0);
  CHECK(s.fails_b == 0);

  VerifyTally c5 = verify_graph(cycle(5));
  CHECK(c5.assignments == 243);
  CHECK(c5.proper == 30);
  CHECK(c5.extendable == 30);
}

TEST_CASE("tally merge adds fields") {
  VerifyTally a = verify_graph(fig1a());
  VerifyTally b = verify_graph(fig1b());
  VerifyTally m = a;
  m.merge(b);
  CHECK(m.graphs == 2);
  CHECK(m.assignments == 1458);
  CHECK(m.proper == 132);
  CHECK(m.extendable == 72);
  CHECK(m.fails_a == 36);
  CHECK(m.fails_b == 24);
}

TEST_CASE("sweep equals the graph-by-graph loop") {
  GenConstraints c = gc(6, 8, 1, 5);
  VerifyTally direct;
  for (const PlaneGraph& g : enumerate_all(c)) direct.merge(verify_graph(g));
  VerifyTally swept = verify_sweep(c, {});
  CHECK(tallies_equal(direct, swept));
  CHECK(swept.disagreement_count == 0);
}

TEST_CASE("sweep result is worker-count independent") {
  GenConstraints c = gc(6, 9, 1, 5);
  VerifyOptions one, three;
  one.workers = 1;
  three.workers = 3;
  VerifyTally t1 = verify_sweep(c, one);
  VerifyTally t3 = verify_sweep(c, three);
  CHECK(tallies_equal(t1, t3));
  CHECK(t1.graphs == 51);
  CHECK(t1.assignments == 51 * 729);
  CHECK(t1.proper == 51 * 66);
  CHECK(t1.fails_b == 24);  // only the spoked triangle contributes
  CHECK(t1.disagreement_count == 0);
}

TEST_CASE("checkpoint resume reproduces the answer") {
  GenConstraints c = gc(6, 8, 1, 5);
  std::string path = "checkpoint_test.json";
  std::remove(path.c_str());

  VerifyOptions opt;
  opt.checkpoint_path = path;
  VerifyTally full = verify_sweep(c, opt);

  // Finished checkpoint on disk: resuming does no new work and agrees.
  VerifyTally again = verify_sweep(c, opt);
  CHECK(tallies_equal(full, again));

  // Strip the checkpoint down to its first completed unit and resume.
  {
    std::ifstream in(path);
    REQUIRE(in.good());
    ordered_json j;
    in >> j;
    REQUIRE(j.at("completed").size() >= 2);
    ordered_json kept = ordered_json::array();
    kept.push_back(j.at("completed")[0]);
    j["completed"] = kept;
    std::ofstream out(path, std::ios::trunc);
    out << j.dump(2) << "\n";
  }
  VerifyTally resumed = verify_sweep(c, opt);
  CHECK(tallies_equal(full, resumed));
  std::remove(path.c_str());
}

TEST_CASE("checkpoint mismatches are refused") {
  GenConstraints c = gc(6, 7, 1, 5);
  std::string path = "checkpoint_bad.json";
  VerifyOptions opt;
  opt.checkpoint_path = path;

  auto expect_parse_error = [&] {
    try {
      verify_sweep(c, opt);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Err::ParseError);
    }
  };

  std::remove(path.c_str());
  VerifyTally fresh = verify_sweep(c, opt);  // writes a good checkpoint

  ordered_json good;
  {
    std::ifstream in(path);
    in >> good;
  }

  auto rewrite = [&](const ordered_json& j) {
    std::ofstream out(path, std::ios::trunc);
    out << j.dump(2) << "\n";
  };

  ordered_json j = good;
  j["schema"] = "something-else";
  rewrite(j);
  expect_parse_error();

  j = good;
  j["constraints"]["max_vertices"] = 9;
  rewrite(j);
  expect_parse_error();

  j = good;
  j["units"] = j["units"].get<int>() + 1;
  rewrite(j);
  expect_parse_error();

  j = good;
  j["completed"][0]["unit"] = 999;
  rewrite(j);
  expect_parse_error();

  {
    std::ofstream out(path, std::ios::trunc);
    out << "{ not json\n";
  }
  expect_parse_error();

  // A good checkpoint for different constraints is refused too.
  rewrite(good);
  GenConstraints other = gc(6, 7, 0, 5);
  try {
    verify_sweep(other, opt);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ParseError);
  }

  std::remove(path.c_str());
  CHECK(fresh.disagreement_count == 0);
}

TEST_CASE("report shape") {
  GenConstraints c = gc(6, 7, 1, 5);
  VerifyTally t = verify_sweep(c, {});
  std::string text = report_json(c, t, 2, 1.23456);
  ordered_json j = ordered_json::parse(text);

  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"schema", "command", "constraints", "workers", "graphs",
                                         "assignments", "proper", "improper", "extendable",
                                         "fails_a", "fails_b", "disagreement_count",
                                         "disagreements", "ok", "wall_seconds"});

  CHECK(j["schema"] == "disk3-report-v1");
  CHECK(j["command"] == "verify");
  CHECK(j["constraints"]["outer_len"] == 6);
  CHECK(j["constraints"]["max_vertices"] == 7);
  CHECK(j["constraints"]["max_triangles"] == 1);
  CHECK(j["constraints"]["min_other_cycle"] == 5);
  CHECK(j["workers"] == 2);
  CHECK(j["graphs"] == t.graphs);
  CHECK(j["assignments"] == t.assignments);
  CHECK(j["proper"] == t.proper);
  CHECK(j["improper"] == t.improper);
  CHECK(j["extendable"] == t.extendable);
  CHECK(j["fails_a"] == t.fails_a);
  CHECK(j["fails_b"] == t.fails_b);
  CHECK(j["disagreement_count"] == 0);
  CHECK(j["disagreements"].is_array());
  CHECK(j["disagreements"].empty());
  CHECK(j["ok"] == true);
  CHECK(j["wall_seconds"] == 1.235);  // rounded to milliseconds

  // Identical inputs give identical reports apart from the wall clock.
  VerifyTally t2 = verify_sweep(c, {});
  std::string other = report_json(c, t2, 2, 9.876);
  ordered_json j2 = ordered_json::parse(other);
  j.erase("wall_seconds");
  j2.erase("wall_seconds");
  CHECK(j == j2);
}

TEST_CASE("recorded disagreement cap") {
  CHECK(max_recorded_disagreements == 50);
}
