#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disk3/catalog.hpp"
#include "disk3/decider.hpp"
#include "disk3/discharge.hpp"
#include "disk3/enumerate.hpp"
#include "disk3/verify.hpp"

namespace {

using namespace disk3;

// Exit codes: 0 ok / Extends, 10 FailsA, 11 FailsB, 2 usage, 3 input or
// class errors, 20 verifier disagreement.

Precoloring phi_along_outer(const PlaneGraph& g, const std::vector<int>& colors) {
  const std::vector<int>& walk = g.outer_face().verts;
  if (colors.size() != walk.size())
    throw Error(Err::DomainMismatch, "--phi needs " + std::to_string(walk.size()) +
                                         " colors for this outer cycle, got " +
                                         std::to_string(colors.size()));
  Precoloring phi(g.n, 0);
  for (size_t i = 0; i < walk.size(); ++i) {
    if (colors[i] < 1 || colors[i] > 3)
      throw Error(Err::DomainMismatch, "colors must be 1, 2 or 3");
    phi[walk[i]] = static_cast<int8_t>(colors[i]);
  }
  return phi;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Err::ParseError, "cannot write " + path);
  out << content;
}

const char* match_name(CatalogMatch m) {
  switch (m) {
    case CatalogMatch::Fig1a: return "Fig1a";
    case CatalogMatch::Fig1b: return "Fig1b";
    default: return "Other";
  }
}

int run_check(const std::string& file, const std::vector<int>& colors) {
  PlaneGraph g = load_rotg(file);
  ExtensionDecision d = decide_extension(g, phi_along_outer(g, colors));
  std::cout << decision_line(d) << "\n";
  switch (d.variant) {
    case ExtensionDecision::Variant::Extends: return 0;
    case ExtensionDecision::Variant::FailsA: return 10;
    default: return 11;
  }
}

int run_classify(const std::string& file) {
  std::cout << match_name(classify_critical(load_rotg(file))) << "\n";
  return 0;
}

GenConstraints make_constraints(int outer, int max_n, int max_tri, int min_cycle) {
  GenConstraints c;
  c.outer_len = outer;
  c.max_vertices = max_n;
  c.max_triangles = max_tri;
  c.min_other_cycle = min_cycle;
  validate_constraints(c);
  return c;
}

int run_enumerate(const GenConstraints& c, const std::string& out_dir) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  int count = 0;
  enumerate_graphs(c, [&](const PlaneGraph& g) {
    std::cout << "graph " << count << " n=" << g.n << " edges=" << g.edges
              << " faces=" << g.faces.size() << "\n";
    if (!out_dir.empty())
      write_file(out_dir + "/graph_" + std::to_string(count) + ".rotg", to_rotg(g));
    ++count;
  });
  std::cout << "total " << count << "\n";
  return 0;
}

int run_critical(const GenConstraints& c, const std::string& out_dir) {
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::vector<PlaneGraph> found = find_critical(c);
  for (size_t i = 0; i < found.size(); ++i) {
    std::cout << "critical " << i << " n=" << found[i].n
              << " classify=" << match_name(classify_critical(found[i])) << "\n";
    if (!out_dir.empty())
      write_file(out_dir + "/critical_" + std::to_string(i) + ".rotg", to_rotg(found[i]));
  }
  std::cout << "found " << found.size() << "\n";
  return 0;
}

int run_verify(const GenConstraints& c, int workers, const std::string& report_path,
               const std::string& checkpoint_path) {
  VerifyOptions opt;
  opt.workers = workers;
  opt.checkpoint_path = checkpoint_path;
  auto t0 = std::chrono::steady_clock::now();
  VerifyTally t = verify_sweep(c, opt);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << "graphs " << t.graphs << "\n"
            << "assignments " << t.assignments << "\n"
            << "proper " << t.proper << "\n"
            << "improper " << t.improper << "\n"
            << "extendable " << t.extendable << "\n"
            << "fails_a " << t.fails_a << "\n"
            << "fails_b " << t.fails_b << "\n"
            << "disagreements " << t.disagreement_count << "\n";
  for (const Disagreement& d : t.disagreements) {
    std::cout << "disagreement decided=" << d.decided << " oracle_extends=" << d.oracle_extends
              << " phi=";
    for (size_t i = 0; i < d.phi.size(); ++i) std::cout << (i ? "," : "") << d.phi[i];
    std::cout << "\n";
  }
  if (!report_path.empty()) write_file(report_path, report_json(c, t, workers, wall));
  std::cerr << "wall_seconds " << wall << "\n";
  return t.disagreement_count == 0 ? 0 : 20;
}

int run_discharge(const std::string& file) {
  PlaneGraph g = load_rotg(file);
  ChargeLedger led = discharge(g);
  std::cout << "triangle_face " << led.triangle_face << "\n"
            << "n2 " << led.n_deg2 << "\n"
            << "n3 " << led.n_deg3 << "\n";
  for (size_t f = 0; f < g.faces.size(); ++f) {
    std::cout << "face " << f << " len=" << g.faces[f].length() << " initial="
              << led.face_initial[f].str() << " final=" << led.face_final[f].str();
    if (static_cast<int>(f) == g.outer_face_id) std::cout << " outer";
    if (static_cast<int>(f) == led.triangle_face) std::cout << " triangle";
    std::cout << "\n";
  }
  for (int v = 0; v < g.n; ++v)
    std::cout << "vertex " << v + 1 << " deg=" << g.degree(v) << " initial="
              << led.vertex_initial[v].str() << " final=" << led.vertex_final[v].str() << "\n";
  std::cout << "initial_total " << led.initial_total.str() << "\n"
            << "final_total " << led.redistributed_total.str() << "\n";
  return 0;
}

int run_catalog_emit(const std::string& which, const std::string& out_path) {
  std::string text = to_rotg(which == "fig1a" ? fig1a() : fig1b());
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedure, catalog and verification for 3-coloring "
               "plane graphs with a precolored outer cycle"};
  app.require_subcommand(1);

  std::string file, out_dir, out_path, report_path, checkpoint_path, catalog_name;
  std::vector<int> colors;
  int outer = 6, max_n = 12, max_tri = 1, min_cycle = 5, workers = 1;

  CLI::App* cmd_check = app.add_subcommand("check", "decide extendability of a precoloring");
  cmd_check->add_option("file", file, "input .rotg")->required();
  cmd_check->add_option("--phi", colors, "colors along the outer cycle, comma separated")
      ->required()
      ->delimiter(',');

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "match a graph against the two extremal graphs");
  cmd_classify->add_option("file", file, "input .rotg")->required();

  auto add_constraint_flags = [&](CLI::App* cmd, int default_max_n) {
    cmd->add_option("--outer", outer, "outer cycle length (3..6)")->capture_default_str();
    max_n = default_max_n;
    cmd->add_option("--max-n", max_n, "largest vertex count")->capture_default_str();
    cmd->add_option("--max-triangles", max_tri, "triangles besides the outer cycle (0 or 1)")
        ->capture_default_str();
    cmd->add_option("--min-cycle", min_cycle, "smallest allowed length of other cycles")
        ->capture_default_str();
  };

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "generate every graph in the class, exactly once");
  add_constraint_flags(cmd_enumerate, 12);
  cmd_enumerate->add_option("-o,--out-dir", out_dir, "write each graph as a .rotg here");

  CLI::App* cmd_critical = app.add_subcommand("critical", "search the class for critical graphs");
  add_constraint_flags(cmd_critical, 11);
  cmd_critical->add_option("-o,--out-dir", out_dir, "write each critical graph as a .rotg here");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "cross-check the decision procedure against the oracle");
  add_constraint_flags(cmd_verify, 12);
  cmd_verify->add_option("--report", report_path, "write a JSON report here");
  cmd_verify->add_option("--workers", workers, "worker threads")->capture_default_str();
  cmd_verify->add_option("--checkpoint", checkpoint_path, "resumable progress file");

  CLI::App* cmd_discharge =
      app.add_subcommand("discharge", "charge ledger for a hexagon-rooted graph with a triangle");
  cmd_discharge->add_option("file", file, "input .rotg")->required();

  CLI::App* cmd_catalog = app.add_subcommand("catalog", "extremal graph constructors");
  CLI::App* cmd_emit = cmd_catalog->add_subcommand("emit", "write a catalog graph as .rotg");
  cmd_emit->add_option("name", catalog_name, "fig1a or fig1b")
      ->required()
      ->check(CLI::IsMember({"fig1a", "fig1b"}));
  cmd_emit->add_option("-o,--out", out_path, "output file (default stdout)");
  cmd_catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_check)) return run_check(file, colors);
    if (app.got_subcommand(cmd_classify)) return run_classify(file);
    if (app.got_subcommand(cmd_enumerate))
      return run_enumerate(make_constraints(outer, max_n, max_tri, min_cycle), out_dir);
    if (app.got_subcommand(cmd_critical))
      return run_critical(make_constraints(outer, max_n, max_tri, min_cycle), out_dir);
    if (app.got_subcommand(cmd_verify))
      return run_verify(make_constraints(outer, max_n, max_tri, min_cycle), workers, report_path,
                        checkpoint_path);
    if (app.got_subcommand(cmd_discharge)) return run_discharge(file);
    if (app.got_subcommand(cmd_catalog)) return run_catalog_emit(catalog_name, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
