#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cocirc/explorer.hpp"
#include "cocirc/generators.hpp"
#include "cocirc/io.hpp"
#include "cocirc/labeled_graph.hpp"
#include "cocirc/oriented_matroid.hpp"
#include "cocirc/recognizer.hpp"
#include "cocirc/sign_vector.hpp"

namespace fs = std::filesystem;
using namespace cocirc;

namespace {

struct GenerateArgs {
  int n = 0;
  int r = 0;
  std::string kind = "cyclic";
  std::uint64_t seed = 1;
  int coord_bound = 99;
  std::string out_dir = ".";
};

int run_generate(const GenerateArgs& args) {
  if (args.r < 2 || args.n < args.r) {
    std::cerr << "generate: need n >= r >= 2\n";
    return 2;
  }
  OrientedMatroid m;
  std::string name;
  if (args.kind == "cyclic") {
    m = cyclic(args.n, args.r);
    name = "cyclic_n" + std::to_string(args.n) + "_r" + std::to_string(args.r) + ".om";
  } else {
    m = random_realizable(args.n, args.r, args.seed, args.coord_bound);
    name = "random_n" + std::to_string(args.n) + "_r" + std::to_string(args.r) + "_s" +
           std::to_string(args.seed) + ".om";
  }
  const fs::path path = fs::path(args.out_dir) / name;
  write_file(path.string(), write_om(m));
  std::cout << path.string() << '\n';
  return 0;
}

struct BuildGraphArgs {
  std::string om_file;
  std::string out_dir;
};

int run_build_graph(const BuildGraphArgs& args) {
  const OrientedMatroid m = parse_om(read_file(args.om_file));
  const AxiomReport report = validate_axioms(m);
  if (!report.ok()) {
    for (const std::string& witness : report.witnesses) std::cerr << witness << '\n';
    std::cerr << "build-graph: input is not a uniform oriented matroid\n";
    return 1;
  }
  const auto [g, labeling] = build_cocircuit_graph(m);
  fs::path dir = args.out_dir.empty() ? fs::path(args.om_file).parent_path()
                                      : fs::path(args.out_dir);
  if (dir.empty()) dir = ".";
  const std::string stem = fs::path(args.om_file).stem().string();
  const fs::path graph_path = dir / (stem + ".graph");
  const fs::path labeling_path = dir / (stem + ".labeling");
  write_file(graph_path.string(), write_graph(g));
  write_file(labeling_path.string(), write_labeling(labeling));
  std::cout << graph_path.string() << '\n' << labeling_path.string() << '\n';
  return 0;
}

int run_validate(const std::string& om_file) {
  const OrientedMatroid m = parse_om(read_file(om_file));
  const AxiomReport report = validate_axioms(m);
  std::cout << "C1 " << (report.c1_ok ? "ok" : "fail") << '\n';
  std::cout << "C2 " << (report.c2_ok ? "ok" : "fail") << '\n';
  std::cout << "C3 " << (report.c3_ok ? "ok" : "fail") << '\n';
  for (const std::string& witness : report.witnesses) std::cout << witness << '\n';
  return report.ok() ? 0 : 1;
}

struct RecognizeArgs {
  std::string graph_file;
  std::string out_dir;
  bool all_candidates = false;
  long max_backtrack = 100000;
};

int run_recognize(const RecognizeArgs& args) {
  const Graph g = parse_graph(read_file(args.graph_file));
  RecognizeOptions options;
  options.all_candidates = args.all_candidates;
  options.max_backtrack = args.max_backtrack;
  const RecognitionResult result = recognize(g, options);
  if (!result.accepted) {
    std::cout << "NOT-COCIRCUIT-GRAPH " << stage_name(result.reject_stage) << '\n';
    if (args.all_candidates)
      std::cout << "VERIFIED-LABELINGS " << result.census.verified_labelings << '\n';
    std::cerr << stage_name(result.reject_stage) << ": " << result.reject_witness << '\n';
    return 1;
  }
  std::cout << "COCIRCUIT-GRAPH n=" << result.params.n << " r=" << result.params.r << '\n';
  if (args.all_candidates)
    std::cout << "VERIFIED-LABELINGS " << result.census.verified_labelings << '\n';
  fs::path dir = args.out_dir.empty() ? fs::path(args.graph_file).parent_path()
                                      : fs::path(args.out_dir);
  if (dir.empty()) dir = ".";
  const std::string stem = fs::path(args.graph_file).stem().string();
  const fs::path om_path = dir / (stem + ".recognized.om");
  const fs::path labeling_path = dir / (stem + ".recognized.labeling");
  write_file(om_path.string(), write_om(result.om));
  write_file(labeling_path.string(), write_labeling(result.labeling));
  std::cout << om_path.string() << '\n' << labeling_path.string() << '\n';
  return 0;
}

struct CrabbedArgs {
  std::string graph_file;
  std::string labeling_file;
  int pairs = 0;
  std::uint64_t seed = 1;
};

int run_crabbed_check(const CrabbedArgs& args) {
  const Graph g = parse_graph(read_file(args.graph_file));
  const SignLabeling labeling = parse_labeling(read_file(args.labeling_file));
  if (labeling.vertex_count() != g.vertex_count) {
    std::cerr << "crabbed-check: labeling has " << labeling.vertex_count()
              << " vertices, graph has " << g.vertex_count << '\n';
    return 2;
  }
  std::vector<std::pair<int, int>> pairs;
  if (args.pairs == 0) {
    for (int v = 0; v < g.vertex_count; ++v)
      for (int w = v + 1; w < g.vertex_count; ++w) pairs.emplace_back(v, w);
  } else {
    std::mt19937_64 rng(args.seed);
    for (int i = 0; i < args.pairs; ++i) {
      int v = 0;
      int w = 0;
      do {
        v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.vertex_count));
        w = static_cast<int>(rng() % static_cast<std::uint64_t>(g.vertex_count));
      } while (v == w);
      pairs.emplace_back(v, w);
    }
  }
  int failures = 0;
  for (auto [v, w] : pairs) {
    const std::vector<int> zv = zero_support(labeling.label[static_cast<std::size_t>(v)]);
    const std::vector<int> zw = zero_support(labeling.label[static_cast<std::size_t>(w)]);
    std::vector<int> only_v;
    std::set_difference(zv.begin(), zv.end(), zw.begin(), zw.end(), std::back_inserter(only_v));
    const int expected = static_cast<int>(only_v.size());
    const int count = count_disjoint_crabbed_paths(g, labeling, v, w);
    std::cout << v << ' ' << w << ' ' << count << ' ' << expected << '\n';
    if (count != expected) ++failures;
  }
  if (failures == 0) {
    std::cout << "OK " << pairs.size() << " pairs\n";
    return 0;
  }
  std::cout << "FAIL " << failures << " of " << pairs.size() << " pairs\n";
  return 1;
}

struct ExploreArgs {
  int rmin = 2;
  int rmax = 4;
  int nmax = 8;
  int seeds = 3;
  int coord_bound = 99;
  bool coline_check = false;
  long max_backtrack = 100000;
  std::string out_file;
};

int run_explore(const ExploreArgs& args) {
  if (args.rmin < 2 || args.rmax < args.rmin || args.nmax < args.rmin || args.seeds < 0) {
    std::cerr << "explore: need 2 <= rmin <= rmax, nmax >= rmin, seeds >= 0\n";
    return 2;
  }
  std::ofstream file;
  if (!args.out_file.empty()) {
    file.open(args.out_file, std::ios::binary);
    if (!file) {
      std::cerr << "explore: cannot open " << args.out_file << '\n';
      return 2;
    }
  }
  std::ostream& out = args.out_file.empty() ? std::cout : file;

  bool coline_ok = true;
  out << census_csv_header() << '\n';
  for (int r = args.rmin; r <= args.rmax; ++r) {
    for (int n = r; n <= args.nmax; ++n) {
      for (int seed = 0; seed <= args.seeds; ++seed) {
        const std::string tag = seed == 0
                                    ? "cyclic n=" + std::to_string(n) + " r=" + std::to_string(r)
                                    : "random n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                          " seed=" + std::to_string(seed);
        const OrientedMatroid m =
            seed == 0 ? cyclic(n, r)
                      : random_realizable(n, r, static_cast<std::uint64_t>(seed),
                                          args.coord_bound);
        const CensusRow row = census_row(m, args.max_backtrack);
        out << census_csv_line(row) << '\n';
        if (r >= 4 && row.census.non_antipodal_critical > 0)
          std::cerr << "WARNING: " << tag << ": " << row.census.non_antipodal_critical
                    << " non-antipodal pairs at the antipodal distance\n";
        if (args.coline_check) {
          std::string witness;
          if (coline_distance_check(m, &witness)) {
            std::cerr << "coline-check ok: " << tag << '\n';
          } else {
            std::cerr << "coline-check FAIL: " << tag << ": " << witness << '\n';
            coline_ok = false;
          }
        }
      }
    }
  }
  return coline_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniform oriented matroid cocircuit graph toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "write a generated instance as an om file");
  generate->add_option("-n", gen.n, "ground set size")->required();
  generate->add_option("-r", gen.r, "rank")->required();
  generate->add_option("--kind", gen.kind, "cyclic or random")
      ->check(CLI::IsMember({"cyclic", "random"}));
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--coord-bound", gen.coord_bound, "coordinate bound for random instances");
  generate->add_option("--out", gen.out_dir, "output directory");

  BuildGraphArgs build;
  CLI::App* build_graph =
      app.add_subcommand("build-graph", "build the cocircuit graph of an om file");
  build_graph->add_option("om_file", build.om_file, "input om file")->required();
  build_graph->add_option("--out", build.out_dir, "output directory");

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "check the cocircuit axioms of an om file");
  validate->add_option("om_file", validate_file, "input om file")->required();

  RecognizeArgs rec;
  CLI::App* recognize_cmd =
      app.add_subcommand("recognize", "decide whether a graph is a cocircuit graph");
  recognize_cmd->add_option("graph_file", rec.graph_file, "input graph file")->required();
  recognize_cmd->add_flag("--all-candidates", rec.all_candidates,
                          "try every antipode candidate and count verified labelings");
  recognize_cmd->add_option("--max-backtrack", rec.max_backtrack,
                            "branch budget for labeling reconstruction");
  recognize_cmd->add_option("--out", rec.out_dir, "output directory");

  CrabbedArgs crabbed;
  CLI::App* crabbed_check =
      app.add_subcommand("crabbed-check", "compare disjoint crabbed path counts to the formula");
  crabbed_check->add_option("graph_file", crabbed.graph_file, "input graph file")->required();
  crabbed_check->add_option("labeling_file", crabbed.labeling_file, "input labeling file")
      ->required();
  crabbed_check->add_option("--pairs", crabbed.pairs, "number of sampled pairs (0 = all)");
  crabbed_check->add_option("--seed", crabbed.seed, "sampling seed");

  ExploreArgs explore;
  CLI::App* explore_cmd = app.add_subcommand("explore", "census over generated instances");
  explore_cmd->add_option("--rmin", explore.rmin, "smallest rank");
  explore_cmd->add_option("--rmax", explore.rmax, "largest rank");
  explore_cmd->add_option("--nmax", explore.nmax, "largest ground set size");
  explore_cmd->add_option("--seeds", explore.seeds, "random seeds per (n, r)");
  explore_cmd->add_option("--coord-bound", explore.coord_bound,
                          "coordinate bound for random instances");
  explore_cmd->add_flag("--coline-check", explore.coline_check,
                        "also run the coline distance check per instance");
  explore_cmd->add_option("--max-backtrack", explore.max_backtrack,
                          "branch budget for labeling reconstruction");
  explore_cmd->add_option("--out", explore.out_file, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (build_graph->parsed()) return run_build_graph(build);
    if (validate->parsed()) return run_validate(validate_file);
    if (recognize_cmd->parsed()) return run_recognize(rec);
    if (crabbed_check->parsed()) return run_crabbed_check(crabbed);
    if (explore_cmd->parsed()) return run_explore(explore);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const DegeneracyError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
