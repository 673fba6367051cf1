// Command-line front end: analyze instances against the Delta2 + 1 bound
// and generate the built-in instance families.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyperchrom/instances.hpp"
#include "hyperchrom/io.hpp"
#include "hyperchrom/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw hyperchrom::InputError("cannot open " + path);
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw hyperchrom::InputError("cannot write " + path.string());
  }
  out << content;
}

struct AnalyzeArgs {
  std::string input;
  std::string json_path;
  std::string dot_dir;
  std::uint64_t seed = 0;
  std::string pivot;
  bool all_pivots = false;
  bool oracle_check = false;
  int automorphism_cap = 12;
};

int run_analyze(const AnalyzeArgs& args) {
  const hyperchrom::Hypergraph h = hyperchrom::parse_instance(read_input(args.input));

  hyperchrom::AnalyzeOptions opts;
  opts.solver_seed = args.seed;
  opts.pivot_label = args.pivot;
  opts.all_pivots = args.all_pivots;
  opts.oracle_check = args.oracle_check;
  opts.automorphism_cap = args.automorphism_cap;

  const hyperchrom::ConjectureReport report = hyperchrom::analyze(h, opts);

  std::cout << hyperchrom::report_text(report);

  if (!args.json_path.empty()) {
    if (args.json_path == "-") {
      std::cout << hyperchrom::report_json(report);
    } else {
      write_file(args.json_path, hyperchrom::report_json(report));
    }
  }

  if (!args.dot_dir.empty()) {
    const std::filesystem::path dir(args.dot_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / (h.name() + ".2sec.dot"), hyperchrom::two_section_dot(h));
    for (const auto& a : report.analyses) {
      if (a.split.kind != hyperchrom::CaseKind::Case2) {
        continue;
      }
      write_file(dir / (h.name() + ".hgamma.dot"), hyperchrom::derived_dot(a.helly.hgamma));
      for (const auto& b : a.per_color) {
        write_file(dir / (h.name() + ".hstar.c" + std::to_string(b.c0 + 1) + ".dot"),
                   hyperchrom::derived_dot(b.hstar));
      }
      break;  // one Case-2 pivot is enough for the drawings
    }
  }

  if (!report.direct.holds) {
    const std::filesystem::path artifact = h.name() + ".counterexample.json";
    write_file(artifact, hyperchrom::counterexample_json(h, report));
    std::cerr << "bound violated; counterexample written to " << artifact.string() << "\n";
  }
  return hyperchrom::report_exit_code(report);
}

struct GenArgs {
  bool fano = false;
  std::vector<int> flower;          // petals, edge size
  int helly_positive = 0;           // missing-color count
  std::vector<long long> random_;   // n, m, size_min, size_max, seed
  std::string out;
};

int run_gen(const GenArgs& args) {
  std::string doc;
  if (args.fano) {
    doc = hyperchrom::serialize_instance(hyperchrom::fano());
  } else if (!args.flower.empty()) {
    doc = hyperchrom::serialize_instance(hyperchrom::flower(args.flower[0], args.flower[1]));
  } else if (args.helly_positive > 0) {
    const hyperchrom::HellyPositiveInstance inst =
        hyperchrom::helly_positive(args.helly_positive);
    doc = hyperchrom::serialize_instance_with_pivot(inst.hypergraph, inst.pivot_label);
  } else if (!args.random_.empty()) {
    hyperchrom::GeneratorConfig cfg;
    cfg.n = static_cast<int>(args.random_[0]);
    cfg.m = static_cast<int>(args.random_[1]);
    cfg.size_min = static_cast<int>(args.random_[2]);
    cfg.size_max = static_cast<int>(args.random_[3]);
    cfg.seed = static_cast<std::uint64_t>(args.random_[4]);
    doc = hyperchrom::serialize_instance(hyperchrom::random_linear(cfg));
  } else {
    throw hyperchrom::InputError("choose one of --fano, --flower, --helly-positive, --random");
  }

  if (args.out.empty() || args.out == "-") {
    std::cout << doc;
  } else {
    write_file(args.out, doc);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic indices of linear hypergraphs and the Delta2 + 1 bound"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one instance file (\"-\" = stdin)");
  analyze->add_option("file", analyze_args.input, "instance JSON")->required();
  analyze->add_option("--json", analyze_args.json_path, "write the JSON report here (\"-\" = stdout)");
  analyze->add_option("--dot", analyze_args.dot_dir, "write DOT drawings into this directory");
  analyze->add_option("--seed", analyze_args.seed, "solver tie-breaking seed");
  analyze->add_option("--pivot", analyze_args.pivot, "force this vertex as the pivot");
  analyze->add_flag("--all-pivots", analyze_args.all_pivots,
                    "analyze every maximum-degree pivot");
  analyze->add_flag("--oracle-check", analyze_args.oracle_check,
                    "cross-check against the brute-force oracles");
  analyze->add_option("--aut-cap", analyze_args.automorphism_cap,
                      "skip the symmetry section above this many vertices");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "emit a built-in instance as JSON");
  auto* f_fano = gen->add_flag("--fano", gen_args.fano, "the Fano plane");
  auto* f_flower = gen->add_option("--flower", gen_args.flower,
                                   "flower: PETALS EDGE_SIZE, edges meeting in one center")
                       ->expected(2);
  auto* f_helly = gen->add_option("--helly-positive", gen_args.helly_positive,
                                  "pencil construction with K missing colors at the "
                                  "suggested pivot");
  auto* f_random = gen->add_option("--random", gen_args.random_,
                                   "random linear instance: N M SIZE_MIN SIZE_MAX SEED")
                       ->expected(5);
  f_fano->excludes(f_flower)->excludes(f_helly)->excludes(f_random);
  f_flower->excludes(f_helly)->excludes(f_random);
  f_helly->excludes(f_random);
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      return run_analyze(analyze_args);
    }
    return run_gen(gen_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
