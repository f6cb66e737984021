// Command-line front end: runs classification cases, builds and exports the
// two exceptional graphs, and analyzes user-supplied groups and graphs.
//
// Exit codes: 0 verified success, 1 verification failure (an expected
// classification value did not reproduce), 2 usage or I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cayley/arc_transitivity.hpp"
#include "cayley/canonical.hpp"
#include "cayley/classify.hpp"
#include "cayley/coset.hpp"
#include "cayley/error.hpp"
#include "cayley/graph.hpp"
#include "cayley/group_data.hpp"

using namespace cayley;

namespace {

int cmd_catalog(const std::string& format) {
  if (format == "json") {
    std::string sep;
    std::printf("[");
    for (const CatalogEntry& e : catalog()) {
      std::printf("%s\n  {\"name\": \"%s\", \"degree\": %u, \"order\": %llu, "
                  "\"transitive\": %s}",
                  sep.c_str(), e.name.c_str(), e.degree,
                  static_cast<unsigned long long>(e.order),
                  e.transitive ? "true" : "false");
      sep = ",";
    }
    std::printf("\n]\n");
  } else {
    std::printf("%-12s %6s %12s %s\n", "name", "degree", "order", "transitive");
    for (const CatalogEntry& e : catalog())
      std::printf("%-12s %6u %12llu %s\n", e.name.c_str(), e.degree,
                  static_cast<unsigned long long>(e.order),
                  e.transitive ? "yes" : "no");
  }
  return 0;
}

int cmd_classify(const std::string& case_id, unsigned threads,
                 const std::string& output_dir, const std::string& format) {
  if (!output_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec || !std::filesystem::is_directory(output_dir)) {
      std::fprintf(stderr, "error: output directory %s is not writable\n",
                   output_dir.c_str());
      return 2;
    }
  }
  if (!case_id.empty()) {
    SearchReport report = run_case(case_id);
    std::string json = report_to_json(report);
    if (format == "json")
      std::printf("%s\n", json.c_str());
    else
      std::printf("%s: verdict=%s [%s]\n", report.spec.id.c_str(),
                  report.verdict.c_str(), report.ok() ? "ok" : "FAILED");
    if (!output_dir.empty()) {
      std::ofstream out(output_dir + "/" + report.spec.id + ".json");
      out << json << "\n";
    }
    return report.ok() ? 0 : 1;
  }
  ClassificationReport report = run_all(threads);
  if (format == "json")
    std::printf("%s\n", classification_to_json(report).c_str());
  else
    std::printf("%s", classification_summary(report).c_str());
  if (!output_dir.empty()) {
    std::ofstream out(output_dir + "/classification.json");
    out << classification_to_json(report) << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_build_graph(int delta, const std::string& out_path) {
  SearchReport report = run_case("m12.2-s4");
  if (!report.ok()) {
    std::fprintf(stderr, "error: the search did not reproduce the expected values\n");
    return 1;
  }
  const auto& orbits = report.delta_orbit_partition.at(0);
  Perm g = orbits.at(delta - 1).front();
  GroupSpec amb = load_group("M12.2.deg24");
  GroupSpec m11 = load_group("M11.deg24");
  PermGroup k = PermGroup::from_generators(report.k_classes.at(0).rep.generators);
  Graph graph = coset_graph(amb.group, k, g);
  save_graph_file(graph, out_path);
  std::printf("wrote %s: %u vertices, %llu edges\n", out_path.c_str(),
              graph.vertex_count(),
              static_cast<unsigned long long>(graph.edge_count()));
  return 0;
}

struct Expectation {
  std::string key;
  int64_t value;
};

int cmd_analyze(const std::string& graph_path, const std::string& group_path,
                const std::vector<std::string>& expects, const std::string& format) {
  Graph graph = load_graph_file(graph_path);
  graph.validate();

  std::optional<GroupAction> action;
  if (!group_path.empty()) {
    GroupSpec spec = load_group_file(group_path, 65535);
    if (spec.degree != graph.vertex_count()) {
      std::fprintf(stderr, "error: group degree %u does not match %u vertices\n",
                   spec.degree, graph.vertex_count());
      return 2;
    }
    GroupAction act;
    act.group = spec.group;
    act.point_count = spec.degree;
    act.images = spec.generators;
    action = std::move(act);
  }

  uint32_t valency = 0;
  bool regular = graph.is_regular(&valency);
  InvariantSignature sig = invariant_signature(graph);
  CanonicalResult canon = canonicalize(graph);
  if (!action) {
    GroupAction act;
    act.group = canon.aut;
    act.point_count = graph.vertex_count();
    act.images = canon.aut.generators();
    action = std::move(act);
  }
  int strans = s_transitivity(graph, *action);

  if (format == "json") {
    std::printf("{\n  \"vertices\": %u,\n  \"edges\": %llu,\n", graph.vertex_count(),
                static_cast<unsigned long long>(graph.edge_count()));
    if (regular) std::printf("  \"valency\": %u,\n", valency);
    std::printf("  \"connected\": %s,\n  \"girth\": %u,\n",
                graph.is_connected() ? "true" : "false", sig.girth);
    std::printf("  \"cycle_counts_3_to_8\": [");
    for (size_t i = 0; i < sig.cycle_counts.size(); ++i)
      std::printf("%s%llu", i ? ", " : "",
                  static_cast<unsigned long long>(sig.cycle_counts[i]));
    std::printf("],\n  \"aut_order\": %llu,\n  \"s_transitivity\": %d,\n",
                static_cast<unsigned long long>(canon.aut.order()), strans);
    std::printf("  \"certificate_hash\": %llu\n}\n",
                static_cast<unsigned long long>(canon.form.certificate_hash));
  } else {
    std::printf("vertices:        %u\n", graph.vertex_count());
    std::printf("edges:           %llu\n",
                static_cast<unsigned long long>(graph.edge_count()));
    if (regular) std::printf("valency:         %u\n", valency);
    std::printf("connected:       %s\n", graph.is_connected() ? "yes" : "no");
    std::printf("girth:           %u\n", sig.girth);
    std::printf("aut order:       %llu\n",
                static_cast<unsigned long long>(canon.aut.order()));
    std::printf("s-transitivity:  %d%s\n", strans,
                group_path.empty() ? " (under the full automorphism group)" : "");
    std::printf("certificate:     %llu\n",
                static_cast<unsigned long long>(canon.form.certificate_hash));
  }

  bool all_ok = true;
  for (const std::string& e : expects) {
    size_t eq = e.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: --expect needs key=value, got %s\n", e.c_str());
      return 2;
    }
    std::string key = e.substr(0, eq);
    int64_t want = std::stoll(e.substr(eq + 1));
    int64_t got;
    if (key == "vertices") got = graph.vertex_count();
    else if (key == "edges") got = static_cast<int64_t>(graph.edge_count());
    else if (key == "valency") got = valency;
    else if (key == "connected") got = graph.is_connected();
    else if (key == "girth") got = sig.girth;
    else if (key == "aut_order") got = static_cast<int64_t>(canon.aut.order());
    else if (key == "s_transitivity") got = strans;
    else {
      std::fprintf(stderr, "error: unknown expectation key %s\n", key.c_str());
      return 2;
    }
    if (got != want) {
      std::fprintf(stderr, "expectation failed: %s expected %lld, observed %lld\n",
                   key.c_str(), static_cast<long long>(want),
                   static_cast<long long>(got));
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census of connected tetravalent 2-transitive Cayley graphs of "
               "finite simple groups"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "run the classification searches");
  std::string case_id;
  unsigned threads = 1;
  std::string output_dir;
  classify->add_option("--case", case_id, "run a single case by id");
  bool run_all_flag = false;
  classify->add_flag("--all", run_all_flag, "run every case");
  classify->add_option("--threads", threads, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  classify->add_option("--output-dir", output_dir, "directory for JSON reports");

  auto* build = app.add_subcommand("build-graph", "construct one of the two graphs");
  int delta = 1;
  std::string out_path;
  build->add_option("--delta", delta, "which graph: 1 or 2")
      ->check(CLI::Range(1, 2))
      ->required();
  build->add_option("--out", out_path, "output edge-list file")->required();

  auto* analyze = app.add_subcommand("analyze", "analyze a graph file");
  std::string graph_path, group_path;
  std::vector<std::string> expects;
  analyze->add_option("--graph", graph_path, "edge-list file")->required();
  analyze->add_option("--group", group_path,
                      "generator file acting on the vertices");
  analyze->add_option("--expect", expects,
                      "key=value to verify (vertices, edges, valency, connected, "
                      "girth, aut_order, s_transitivity); exit 1 on mismatch");

  auto* cat = app.add_subcommand("catalog", "list the shipped groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (*cat) return cmd_catalog(format);
    if (*classify) {
      if (case_id.empty() && !run_all_flag) {
        std::fprintf(stderr, "error: classify needs --all or --case <id>\n");
        return 2;
      }
      return cmd_classify(case_id, threads, output_dir, format);
    }
    if (*build) return cmd_build_graph(delta, out_path);
    if (*analyze) return cmd_analyze(graph_path, group_path, expects, format);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == ErrorKind::kVerification ? 1 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
