#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disk3/decider.hpp"
#include "disk3/enumerate.hpp"

// Exhaustive cross-check of the two-condition decision procedure against the
// backtracking oracle: every generated graph, every assignment of {1,2,3} to
// the outer cycle.

namespace disk3 {

struct Disagreement {
  std::string rotg;          // offending graph, serialized
  std::vector<int> phi;      // colors along the outer walk, 1-based vertex order
  std::string decided;       // decision_line of the fast answer
  bool oracle_extends = false;
};

// First recorded disagreements per unit; the exact total is kept separately.
inline constexpr int max_recorded_disagreements = 50;

struct VerifyTally {
  int64_t graphs = 0;
  int64_t assignments = 0;
  int64_t proper = 0;      // assignments proper on the outer cycle
  int64_t improper = 0;
  int64_t extendable = 0;  // of the proper ones
  int64_t fails_a = 0;
  int64_t fails_b = 0;
  int64_t disagreement_count = 0;
  std::vector<Disagreement> disagreements;

  void merge(const VerifyTally& o);
};

// All 3^k outer assignments of one graph, decision procedure vs oracle.
VerifyTally verify_graph(const PlaneGraph& g);

struct VerifyOptions {
  int workers = 1;
  std::string checkpoint_path;  // empty: no checkpointing
};

// Sweep over the generated family.  Work is split into units (the seed, then
// one unit per seed child subtree), processed by worker threads, merged in
// unit order so the result never depends on scheduling.  With a checkpoint
// path, finished units are written out after each completion and a matching
// file is resumed from; a file whose schema, constraints, or unit count
// differ raises ParseError.
VerifyTally verify_sweep(const GenConstraints& c, const VerifyOptions& opt);

// Machine-readable report, schema disk3-report-v1.  Field order is fixed;
// wall_seconds is the only field that varies between identical runs.
std::string report_json(const GenConstraints& c, const VerifyTally& t, int workers,
                        double wall_seconds);

}  // namespace disk3
