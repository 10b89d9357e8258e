#include "disk3/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace disk3 {

namespace {

using ordered_json = nlohmann::ordered_json;

void add_disagreement(VerifyTally& t, Disagreement d) {
  ++t.disagreement_count;
  if (static_cast<int>(t.disagreements.size()) < max_recorded_disagreements)
    t.disagreements.push_back(std::move(d));
}

}  // namespace

void VerifyTally::merge(const VerifyTally& o) {
  graphs += o.graphs;
  assignments += o.assignments;
  proper += o.proper;
  improper += o.improper;
  extendable += o.extendable;
  fails_a += o.fails_a;
  fails_b += o.fails_b;
  disagreement_count += o.disagreement_count;
  for (const Disagreement& d : o.disagreements) {
    if (static_cast<int>(disagreements.size()) >= max_recorded_disagreements) break;
    disagreements.push_back(d);
  }
}

VerifyTally verify_graph(const PlaneGraph& g) {
  VerifyTally t;
  t.graphs = 1;
  ClassReport cls = validate_class(g);
  const std::vector<int>& walk = g.outer_face().verts;
  const int k = static_cast<int>(walk.size());

  std::vector<int8_t> colors(k, 1);
  Precoloring phi(g.n, 0);
  for (;;) {
    for (int i = 0; i < k; ++i) phi[walk[i]] = colors[i];
    bool proper = true;
    for (int i = 0; i < k; ++i)
      if (colors[i] == colors[(i + 1) % k]) proper = false;

    ExtensionDecision d = decide_extension(g, phi, cls);
    bool fast = d.variant == ExtensionDecision::Variant::Extends;
    bool oracle = extend_coloring(g, phi).has_value();

    ++t.assignments;
    if (!proper) {
      ++t.improper;
    } else {
      ++t.proper;
      switch (d.variant) {
        case ExtensionDecision::Variant::Extends: ++t.extendable; break;
        case ExtensionDecision::Variant::FailsA: ++t.fails_a; break;
        case ExtensionDecision::Variant::FailsB: ++t.fails_b; break;
      }
    }
    if (fast != oracle) {
      Disagreement dis;
      dis.rotg = to_rotg(g);
      dis.phi.assign(colors.begin(), colors.end());
      dis.decided = decision_line(d);
      dis.oracle_extends = oracle;
      add_disagreement(t, std::move(dis));
    }

    int i = k - 1;
    while (i >= 0 && colors[i] == 3) colors[i--] = 1;
    if (i < 0) break;
    ++colors[i];
  }
  for (int i = 0; i < k; ++i) phi[walk[i]] = 0;
  return t;
}

namespace {

ordered_json constraints_json(const GenConstraints& c) {
  ordered_json j;
  j["outer_len"] = c.outer_len;
  j["max_vertices"] = c.max_vertices;
  j["max_triangles"] = c.max_triangles;
  j["min_other_cycle"] = c.min_other_cycle;
  return j;
}

ordered_json tally_json(const VerifyTally& t) {
  ordered_json j;
  j["graphs"] = t.graphs;
  j["assignments"] = t.assignments;
  j["proper"] = t.proper;
  j["improper"] = t.improper;
  j["extendable"] = t.extendable;
  j["fails_a"] = t.fails_a;
  j["fails_b"] = t.fails_b;
  j["disagreement_count"] = t.disagreement_count;
  ordered_json ds = ordered_json::array();
  for (const Disagreement& d : t.disagreements) {
    ordered_json e;
    e["rotg"] = d.rotg;
    e["phi"] = d.phi;
    e["decided"] = d.decided;
    e["oracle_extends"] = d.oracle_extends;
    ds.push_back(std::move(e));
  }
  j["disagreements"] = std::move(ds);
  return j;
}

VerifyTally tally_from_json(const ordered_json& j) {
  VerifyTally t;
  t.graphs = j.at("graphs").get<int64_t>();
  t.assignments = j.at("assignments").get<int64_t>();
  t.proper = j.at("proper").get<int64_t>();
  t.improper = j.at("improper").get<int64_t>();
  t.extendable = j.at("extendable").get<int64_t>();
  t.fails_a = j.at("fails_a").get<int64_t>();
  t.fails_b = j.at("fails_b").get<int64_t>();
  t.disagreement_count = j.at("disagreement_count").get<int64_t>();
  for (const ordered_json& e : j.at("disagreements")) {
    Disagreement d;
    d.rotg = e.at("rotg").get<std::string>();
    d.phi = e.at("phi").get<std::vector<int>>();
    d.decided = e.at("decided").get<std::string>();
    d.oracle_extends = e.at("oracle_extends").get<bool>();
    t.disagreements.push_back(std::move(d));
  }
  return t;
}

void write_checkpoint(const std::string& path, const GenConstraints& c, int units,
                      const std::map<int, VerifyTally>& done) {
  ordered_json j;
  j["schema"] = "disk3-checkpoint-v1";
  j["constraints"] = constraints_json(c);
  j["units"] = units;
  ordered_json arr = ordered_json::array();
  for (const auto& [unit, tally] : done) {
    ordered_json e;
    e["unit"] = unit;
    e["tally"] = tally_json(tally);
    arr.push_back(std::move(e));
  }
  j["completed"] = std::move(arr);

  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Err::ParseError, "cannot write checkpoint file " + tmp);
    out << j.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(Err::ParseError, "cannot move checkpoint into place at " + path);
}

std::map<int, VerifyTally> load_checkpoint(const std::string& path, const GenConstraints& c,
                                           int units) {
  std::map<int, VerifyTally> done;
  std::ifstream in(path);
  if (!in) return done;  // nothing to resume
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Err::ParseError, "checkpoint " + path + ": " + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "disk3-checkpoint-v1")
      throw Error(Err::ParseError, "checkpoint " + path + ": unknown schema");
    if (j.at("constraints") != constraints_json(c))
      throw Error(Err::ParseError, "checkpoint " + path + ": constraints differ from this run");
    if (j.at("units").get<int>() != units)
      throw Error(Err::ParseError, "checkpoint " + path + ": unit count differs from this run");
    for (const ordered_json& e : j.at("completed")) {
      int unit = e.at("unit").get<int>();
      if (unit < 0 || unit >= units)
        throw Error(Err::ParseError, "checkpoint " + path + ": unit out of range");
      done[unit] = tally_from_json(e.at("tally"));
    }
  } catch (const ordered_json::exception& e) {
    throw Error(Err::ParseError, "checkpoint " + path + ": " + e.what());
  }
  return done;
}

}  // namespace

VerifyTally verify_sweep(const GenConstraints& c, const VerifyOptions& opt) {
  EnumRoots roots = enumeration_roots(c);
  const int units = 1 + static_cast<int>(roots.roots.size());

  std::map<int, VerifyTally> done;
  if (!opt.checkpoint_path.empty()) done = load_checkpoint(opt.checkpoint_path, c, units);

  std::mutex mu;
  std::atomic<int> next{0};
  auto run_unit = [&](int unit) {
    VerifyTally t;
    if (unit == 0) {
      t = verify_graph(roots.seed);
    } else {
      enumerate_subtree(c, roots.roots[unit - 1],
                        [&](const PlaneGraph& g) { t.merge(verify_graph(g)); });
    }
    return t;
  };
  std::exception_ptr first_error;
  auto worker = [&] {
    try {
      for (;;) {
        int unit = next.fetch_add(1);
        if (unit >= units) break;
        {
          std::lock_guard<std::mutex> lk(mu);
          if (done.count(unit) || first_error) {
            if (first_error) break;
            continue;
          }
        }
        VerifyTally t = run_unit(unit);
        std::lock_guard<std::mutex> lk(mu);
        done[unit] = std::move(t);
        if (!opt.checkpoint_path.empty()) write_checkpoint(opt.checkpoint_path, c, units, done);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!first_error) first_error = std::current_exception();
    }
  };

  int workers = std::max(1, std::min(opt.workers, 64));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  VerifyTally total;
  assert(static_cast<int>(done.size()) == units);
  for (const auto& [unit, tally] : done) total.merge(tally);
  return total;
}

std::string report_json(const GenConstraints& c, const VerifyTally& t, int workers,
                        double wall_seconds) {
  ordered_json j;
  j["schema"] = "disk3-report-v1";
  j["command"] = "verify";
  j["constraints"] = constraints_json(c);
  j["workers"] = workers;
  ordered_json counts = tally_json(t);
  for (auto& [key, value] : counts.items()) j[key] = value;
  j["ok"] = t.disagreement_count == 0;
  j["wall_seconds"] = std::round(wall_seconds * 1000.0) / 1000.0;
  return j.dump(2) + "\n";
}

}  // namespace disk3
