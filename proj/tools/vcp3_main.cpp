#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vcp3/bench.hpp"
#include "vcp3/cut_count.hpp"
#include "vcp3/generators.hpp"
#include "vcp3/graph.hpp"
#include "vcp3/nice_decomposition.hpp"
#include "vcp3/oracle.hpp"
#include "vcp3/report.hpp"
#include "vcp3/rng.hpp"
#include "vcp3/tree_decomposition.hpp"
#include "vcp3/vcp3_dp.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracleMismatch = 3;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

vcp3::GraphFormat pick_format(const std::string& path, const std::string& format_flag) {
  if (format_flag == "edge-list") return vcp3::GraphFormat::EdgeList;
  if (format_flag == "pace-gr") return vcp3::GraphFormat::PaceGr;
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".gr") return vcp3::GraphFormat::PaceGr;
  return vcp3::GraphFormat::EdgeList;
}

vcp3::ConvolutionMode pick_convolution(const std::string& flag) {
  if (flag == "fast") return vcp3::ConvolutionMode::Fast;
  if (flag == "naive") return vcp3::ConvolutionMode::Naive;
  return vcp3::ConvolutionMode::Auto;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ids.push_back(std::stoi(item));
  }
  return ids;
}

struct SolveArgs {
  std::string problem;
  std::string graph_path;
  std::string td_path;
  std::string heuristic = "min-degree";
  std::string format;
  std::string convolution;  // empty = auto
  std::string json_path;
  std::string required_list;
  int k = -1;
  std::uint64_t seed = 0;
  int reps = 20;
  int threads = 1;
  bool oracle_check = false;
};

int run_solve(const SolveArgs& args) {
  using clock = std::chrono::steady_clock;
  vcp3::RunReport report;
  report.problem = args.problem;
  report.graph_path = args.graph_path;
  report.seed = args.seed;
  report.repetitions = args.reps;
  report.convolution = args.convolution.empty() ? "auto" : args.convolution;

  auto t0 = clock::now();
  vcp3::Graph g = vcp3::parse_graph_file(args.graph_path, pick_format(args.graph_path, args.format));
  report.parse_seconds = seconds_since(t0);
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();

  t0 = clock::now();
  vcp3::TreeDecomposition td;
  if (!args.td_path.empty()) {
    td = vcp3::parse_td_file(args.td_path);
    auto validation = vcp3::validate(td, g);
    if (!validation.valid()) {
      std::cerr << "error: decomposition rejected:\n" << validation.to_string();
      return kExitFailure;
    }
  } else {
    td = vcp3::heuristic_decompose(g, args.heuristic == "min-fill"
                                          ? vcp3::EliminationStrategy::MinFill
                                          : vcp3::EliminationStrategy::MinDegree);
  }
  vcp3::NiceDecomposition nd = vcp3::make_nice(td, g);
  report.decompose_seconds = seconds_since(t0);
  report.width_used = nd.width();
  report.node_counts = nd.kind_counts();

  vcp3::SolveOptions solve_options;
  solve_options.convolution = pick_convolution(args.convolution);

  t0 = clock::now();
  if (args.problem == "vcp3") {
    vcp3::SolveResult result = vcp3::solve_vcp3(g, nd, solve_options);
    report.solve_seconds = seconds_since(t0);
    if (!vcp3::is_vcp3_set(g, result.witness) || result.witness.size() != result.size) {
      std::cerr << "error: witness failed verification\n";
      return kExitFailure;
    }
    report.size = result.size;
    report.witness = result.witness.ids();
    if (args.oracle_check) {
      if (g.vertex_count() > 24) {
        std::cerr << "error: --oracle-check requires n <= 24\n";
        return kExitFailure;
      }
      auto brute = vcp3::brute_vcp3(g);
      if (brute.size != result.size) {
        std::cerr << "ORACLE MISMATCH: solver " << result.size << " vs brute force " << brute.size
                  << '\n';
        return kExitOracleMismatch;
      }
      std::cout << "oracle-check  pass (brute force size " << brute.size << ")\n";
    }
  } else {
    vcp3::VertexSet required(parse_id_list(args.required_list));
    for (int v : required) {
      if (v < 0 || v >= g.vertex_count()) {
        std::cerr << "error: --S vertex " << v << " out of range\n";
        return kExitFailure;
      }
    }
    report.required = required.ids();
    vcp3::CutCountOptions cc_options;
    cc_options.threads = std::max(1, args.threads);
    std::optional<int> minimized;
    if (args.k >= 0) {
      report.k = args.k;
      bool yes = vcp3::decide_constrained_cvcp3(g, nd, required, args.k, args.seed, args.reps,
                                                cc_options);
      report.decision = yes;
    } else {
      minimized = vcp3::minimize_cvcp3(g, nd, required, args.seed, args.reps, cc_options);
      if (minimized) {
        report.size = *minimized;
      } else {
        report.no_solution = true;
      }
    }
    report.solve_seconds = seconds_since(t0);
    if (args.oracle_check) {
      if (g.vertex_count() > 20) {
        std::cerr << "error: --oracle-check requires n <= 20 for cvcp3\n";
        return kExitFailure;
      }
      auto brute = vcp3::brute_cvcp3(g, required);
      bool mismatch = false;
      std::ostringstream what;
      if (args.k >= 0) {
        const bool oracle_yes = brute.has_value() && *brute <= args.k;
        if (oracle_yes != *report.decision) {
          mismatch = true;
          what << "decide said " << (*report.decision ? "YES" : "NO") << ", brute force says "
               << (oracle_yes ? "YES" : "NO");
        }
      } else {
        if (brute.has_value() != minimized.has_value() ||
            (brute.has_value() && *brute != *minimized)) {
          mismatch = true;
          what << "minimize said "
               << (minimized ? std::to_string(*minimized) : std::string("no solution"))
               << ", brute force says "
               << (brute ? std::to_string(*brute) : std::string("no solution"));
        }
      }
      if (mismatch) {
        std::cerr << "ORACLE MISMATCH: " << what.str()
                  << " (NO answers may be one-sided error, probability <= 2^-" << args.reps
                  << ")\n";
        return kExitOracleMismatch;
      }
      std::cout << "oracle-check  pass\n";
    }
  }

  std::cout << report.to_text();
  if (!args.json_path.empty()) {
    if (args.json_path == "-") {
      std::cout << report.to_json();
    } else {
      std::ofstream out(args.json_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << args.json_path << '\n';
        return kExitFailure;
      }
      out << report.to_json();
    }
  }
  return 0;
}

struct GenArgs {
  std::string family = "tree";
  int n = 10;
  int k = 2;
  double delete_prob = 0.3;
  int m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  auto family = vcp3::family_from_name(args.family);
  if (!family) {
    std::cerr << "error: unknown family " << args.family << '\n';
    return kExitUsage;
  }
  vcp3::InstanceSpec spec;
  spec.family = *family;
  spec.n = args.n;
  spec.k = args.k;
  spec.edge_delete_prob = args.delete_prob;
  spec.m = args.m;
  spec.seed = args.seed;
  vcp3::GeneratedInstance inst = vcp3::generate(spec);

  std::ofstream out(args.out, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << args.out << '\n';
    return kExitFailure;
  }
  vcp3::emit_gr(out, inst.graph);
  std::cout << "wrote " << args.out << " (n=" << inst.graph.vertex_count()
            << ", m=" << inst.graph.edge_count() << ")\n";
  if (inst.decomposition) {
    std::string td_path = args.out;
    if (td_path.size() >= 3 && td_path.substr(td_path.size() - 3) == ".gr") {
      td_path = td_path.substr(0, td_path.size() - 3) + ".td";
    } else {
      td_path += ".td";
    }
    std::ofstream td_out(td_path, std::ios::binary);
    if (!td_out) {
      std::cerr << "error: cannot write " << td_path << '\n';
      return kExitFailure;
    }
    vcp3::emit_td(td_out, *inst.decomposition, inst.graph.vertex_count());
    std::cout << "wrote " << td_path << " (width " << inst.decomposition->width() << ")\n";
  }
  return 0;
}

struct BenchArgs {
  std::string family = "partial-k-tree";
  int n = 60;
  std::string widths = "1,2,3,4,5";
  double delete_prob = 0.3;
  int m = 0;
  int instances = 5;
  int repeats = 3;
  std::uint64_t seed = 0;
  std::string csv_path;
  std::string convolution;
  bool oracle_check = false;
};

int run_bench(const BenchArgs& args) {
  auto family = vcp3::family_from_name(args.family);
  if (!family) {
    std::cerr << "error: unknown family " << args.family << '\n';
    return kExitUsage;
  }
  std::vector<int> widths = parse_id_list(args.widths);
  if (*family != vcp3::Family::PartialKTree) widths = {0};  // single sweep, width from heuristic

  vcp3::SolveOptions solve_options;
  solve_options.convolution = pick_convolution(args.convolution);
  solve_options.validate_input = false;  // validated once below

  std::vector<vcp3::bench::Row> rows;
  for (int width : widths) {
    for (int instance = 0; instance < args.instances; ++instance) {
      vcp3::InstanceSpec spec;
      spec.family = *family;
      spec.n = args.n;
      spec.k = std::max(1, width);
      spec.edge_delete_prob = args.delete_prob;
      spec.m = args.m;
      spec.seed = vcp3::stream_seed(args.seed, static_cast<std::uint64_t>(width) * 1000 +
                                                   static_cast<std::uint64_t>(instance));
      vcp3::GeneratedInstance inst = vcp3::generate(spec);
      vcp3::TreeDecomposition td =
          inst.decomposition ? *inst.decomposition
                             : vcp3::heuristic_decompose(inst.graph, vcp3::EliminationStrategy::MinDegree);
      vcp3::NiceDecomposition nd = vcp3::make_nice(td, inst.graph);

      double best_ms = -1;
      vcp3::SolveResult result;
      for (int rep = 0; rep < std::max(1, args.repeats); ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        result = vcp3::solve_vcp3(inst.graph, nd, solve_options);
        double ms = seconds_since(t0) * 1e3;
        if (best_ms < 0 || ms < best_ms) best_ms = ms;
      }

      vcp3::bench::Row row;
      row.family = vcp3::family_name(*family);
      row.instance = instance;
      row.n = inst.graph.vertex_count();
      row.m = inst.graph.edge_count();
      row.width = nd.width();
      row.nice_nodes = nd.node_count();
      row.size = result.size;
      row.solve_ms = best_ms;
      if (args.oracle_check && inst.graph.vertex_count() <= 24) {
        auto t0 = std::chrono::steady_clock::now();
        auto brute = vcp3::brute_vcp3(inst.graph);
        row.oracle_ms = seconds_since(t0) * 1e3;
        row.oracle_size = brute.size;
        if (brute.size != result.size) {
          std::cerr << "ORACLE MISMATCH on " << row.family << " instance " << instance << '\n';
          return kExitOracleMismatch;
        }
      }
      rows.push_back(row);
    }
  }

  std::cout << vcp3::bench::csv_header() << '\n';
  for (const auto& row : rows) std::cout << vcp3::bench::to_csv(row) << '\n';

  // Aggregate: median solve time per width.
  std::cout << "\nwidth  median_ms\n";
  for (int width : widths) {
    std::vector<double> times;
    for (const auto& row : rows)
      if (*family != vcp3::Family::PartialKTree || row.width == width) times.push_back(row.solve_ms);
    if (times.empty()) continue;
    std::sort(times.begin(), times.end());
    std::cout << width << "      " << times[times.size() / 2] << '\n';
  }

  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << args.csv_path << '\n';
      return kExitFailure;
    }
    vcp3::bench::write_csv(out, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and randomized solvers for the vertex cover P3 problem and its connected "
               "variant on graphs of small treewidth"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--problem", solve_args.problem, "vcp3 or cvcp3")
      ->required()
      ->check(CLI::IsMember({"vcp3", "cvcp3"}));
  solve->add_option("--graph", solve_args.graph_path, "input graph file")->required();
  solve->add_option("--td", solve_args.td_path, "tree decomposition file (.td); heuristic otherwise");
  solve->add_option("--heuristic", solve_args.heuristic, "elimination order when no --td")
      ->check(CLI::IsMember({"min-degree", "min-fill"}));
  solve->add_option("--format", solve_args.format, "graph format override")
      ->check(CLI::IsMember({"edge-list", "pace-gr"}));
  solve->add_option("--k", solve_args.k, "cvcp3 decision bound (omit to minimize)");
  solve->add_option("--S", solve_args.required_list, "cvcp3 required vertices, comma list, 0-indexed");
  solve->add_option("--seed", solve_args.seed, "random seed (cvcp3)");
  solve->add_option("--reps", solve_args.reps, "cvcp3 weight repetitions");
  solve->add_option("--convolution", solve_args.convolution, "join-node convolution")
      ->check(CLI::IsMember({"fast", "naive"}));
  solve->add_option("--threads", solve_args.threads, "parallel cvcp3 repetitions; 1 is the baseline");
  solve->add_flag("--oracle-check", solve_args.oracle_check, "compare against brute force (small n)");
  solve->add_option("--json", solve_args.json_path, "write machine-readable report ('-' = stdout)");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", gen_args.family, "tree|cycle|cactus|partial-k-tree|random-gnm")
      ->required();
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--k", gen_args.k, "partial-k-tree order");
  gen->add_option("--delete-prob", gen_args.delete_prob, "partial-k-tree edge deletion probability");
  gen->add_option("--m", gen_args.m, "random-gnm edge count");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out, "output .gr path (.td emitted for planted families)")
      ->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "timing sweeps");
  bench->add_option("--family", bench_args.family, "instance family");
  bench->add_option("--n", bench_args.n, "vertex count");
  bench->add_option("--widths", bench_args.widths, "partial-k-tree width sweep, comma list");
  bench->add_option("--delete-prob", bench_args.delete_prob, "partial-k-tree deletion probability");
  bench->add_option("--m", bench_args.m, "random-gnm edge count");
  bench->add_option("--instances", bench_args.instances, "instances per width");
  bench->add_option("--repeats", bench_args.repeats, "timing repeats, best kept");
  bench->add_option("--seed", bench_args.seed, "generator seed");
  bench->add_option("--csv", bench_args.csv_path, "write rows as CSV");
  bench->add_option("--convolution", bench_args.convolution, "join-node convolution")
      ->check(CLI::IsMember({"fast", "naive"}));
  bench->add_flag("--oracle-check", bench_args.oracle_check, "brute-force column when n <= 24");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
