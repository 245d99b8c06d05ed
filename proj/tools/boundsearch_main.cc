// Copyright 2026 The boundsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end.
//
//   boundsearch solve --graph g.json --alg beauty [--l-est X] [--l-prune X]
//   boundsearch synth --weighted-graph w.json --seed S --out g.json
//   boundsearch gen --model random --n 200 --p 0.05 --out w.json
//   boundsearch bench --suite suite.json --out-dir results/
//
// Exit codes: 0 success, 2 unreachable goal, 3 invalid input, 4 timeout.

#include <cerrno>
#include <cmath>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boundsearch/anytime.h"
#include "boundsearch/csv.h"
#include "boundsearch/generators.h"
#include "boundsearch/graph_io.h"
#include "boundsearch/search.h"
#include "boundsearch/suite.h"
#include "boundsearch/synth.h"

namespace boundsearch {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnreachable = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitTimeout = 4;

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "inf" as well as any finite non-negative number.
double ParseThreshold(const std::string& text, const char* flag) {
  if (text == "inf" || text == "infinity") return kInfinity;
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno != 0 || !(x >= 0.0) ||
      std::isinf(x)) {
    throw InvalidInput(std::string(flag) + ": expected a number or inf, got '" +
                       text + "'");
  }
  return x;
}

std::string PathText(const Path& path) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (i > 0) out << ' ';
    out << path.edges[i].value();
  }
  out << ']';
  return out.str();
}

Problem LoadValidProblem(const std::string& file) {
  Problem p = LoadProblem(file);
  const std::vector<Violation> violations = ValidateGraph(p.graph);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << file << ": " << violations.size() << " estimator violation(s)";
    for (const Violation& v : violations) {
      msg << "\n  " << ViolationKindName(v.kind) << ": " << v.message;
    }
    throw InvalidInput(msg.str());
  }
  return p;
}

struct SolveArgs {
  std::string graph;
  std::string alg = "beauty";
  std::string l_est = "inf";
  std::string l_prune = "inf";
  int max_iters = 10;
  std::optional<double> epsilon;
  std::optional<double> timeout;
  std::string metrics_out;
};

int Solve(const SolveArgs& args) {
  const Problem p = LoadValidProblem(args.graph);
  EstimationCache cache(p.graph);
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (args.timeout) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(*args.timeout));
  }

  MetricsRecord record;
  record.instance_id = std::filesystem::path(args.graph).stem().string();
  bool found = false;
  if (args.alg == "abeauty") {
    AnytimeOptions opts;
    opts.max_iterations = args.max_iters;
    opts.epsilon = args.epsilon;
    opts.deadline = deadline;
    const AnytimeResult r = AnytimeBeauty(p, cache, opts);
    for (const IterationEntry& e : r.log) {
      if (!e.found) continue;
      std::cout << "iteration " << e.iteration << ": path " << PathText(e.path)
                << " l_under " << FormatNumber(e.l_under) << " l_over "
                << FormatNumber(e.l_over) << (e.forced ? " (forced)" : "")
                << '\n';
    }
    found = r.found;
    record.algorithm = "a_beauty-" + std::to_string(args.max_iters);
    record.metrics = r.metrics;
    record.opt = r.found;
    record.l_under = r.found ? r.log.back().l_under : kInfinity;
    record.l_over = r.l_star;
    record.iterations = static_cast<int>(r.log.size());
    if (found) {
      std::cout << "path " << PathText(r.path) << "\nl_star "
                << FormatNumber(r.l_star) << '\n';
    }
  } else {
    SearchOptions opts;
    opts.deadline = deadline;
    SearchResult r;
    if (args.alg == "eiucs") {
      record.algorithm = "ei_ucs";
      r = EiUcs(p, cache, opts);
    } else {
      record.algorithm = "beauty";
      opts.l_est = ParseThreshold(args.l_est, "--l-est");
      opts.l_prune = ParseThreshold(args.l_prune, "--l-prune");
      r = Beauty(p, cache, opts);
    }
    found = r.found;
    record.metrics = r.metrics;
    record.opt = r.opt;
    record.l_under = r.l_under;
    record.l_over = r.l_over;
    if (found) {
      std::cout << "path " << PathText(r.path) << "\nopt "
                << (r.opt ? "true" : "false") << "\nl_under "
                << FormatNumber(r.l_under) << "\nl_over "
                << FormatNumber(r.l_over) << '\n';
    }
  }

  const Metrics& m = record.metrics;
  std::cout << "expansions " << m.expansions << "\nevaluations "
            << m.evaluations << "\nprunings " << m.prunings;
  for (std::size_t i = 0; i < m.layer_invocations.size(); ++i) {
    std::cout << "\nw_" << i + 1 << ' ' << m.layer_invocations[i];
  }
  std::cout << "\nT_w " << FormatNumber(m.estimation_time) << "\nT_v "
            << FormatNumber(m.search_time()) << '\n';

  if (!args.metrics_out.empty()) {
    WriteFile(args.metrics_out, MetricsCsvHeader() + MetricsCsvRow(record));
  }
  if (!found) {
    std::cerr << "no path to a goal vertex\n";
    return kExitUnreachable;
  }
  return kExitOk;
}

int Synth(const std::string& weighted, std::int64_t seed,
          const std::string& out) {
  const WeightedGraph g = LoadWeightedGraph(weighted);
  WriteFile(out, SerializeProblem(SynthEstimators(g, seed)));
  return kExitOk;
}

struct GenArgs {
  std::string model = "random";
  std::uint32_t n = 100;
  double p = 0.05;
  std::uint32_t rows = 10;
  std::uint32_t cols = 10;
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 20;
  std::uint64_t rng_seed = 0;
  std::string out;
};

int Gen(const GenArgs& args) {
  WeightedGraph g;
  if (args.model == "random") {
    g = GenerateRandomGraph({args.n, args.p, args.cost_min, args.cost_max,
                             args.rng_seed});
  } else {
    g = GenerateGridGraph({args.rows, args.cols, args.cost_min, args.cost_max,
                           args.rng_seed});
  }
  WriteFile(args.out, SerializeWeightedGraph(g));
  return kExitOk;
}

int Bench(const std::string& suite_file, const std::string& out_dir) {
  const std::filesystem::path suite_path(suite_file);
  const SuiteConfig config =
      ParseSuiteConfig(ReadFile(suite_path), suite_path.parent_path());
  const SuiteReport report = RunSuite(config);
  WriteSuiteOutputs(report, out_dir);
  for (const AlgorithmAggregate& a : report.aggregates) {
    std::cout << a.algorithm << ": r_L3 mean " << FormatNumber(a.r_l3.mean)
              << " (n=" << a.r_l3.count << "), r_exp mean "
              << FormatNumber(a.r_exp.mean) << '\n';
  }
  if (!report.timed_out.empty()) {
    std::cout << report.timed_out.size() << " instance(s) timed out\n";
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Shortest-path search over graphs with estimated edge weights"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Search one graph");
  solve_cmd->add_option("--graph", solve.graph, "Estimated graph JSON")
      ->required();
  solve_cmd->add_option("--alg", solve.alg, "eiucs, beauty or abeauty")
      ->check(CLI::IsMember({"eiucs", "beauty", "abeauty"}));
  solve_cmd->add_option("--l-est", solve.l_est, "Estimation threshold");
  solve_cmd->add_option("--l-prune", solve.l_prune, "Pruning threshold");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Anytime iteration cap")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--epsilon", solve.epsilon,
                        "Anytime stopping ratio l_over/l_under - 1")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--timeout", solve.timeout, "Seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--metrics-out", solve.metrics_out, "Metrics CSV");

  std::string weighted, synth_out;
  std::int64_t seed = 0;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Attach synthesized estimators");
  synth_cmd->add_option("--weighted-graph", weighted, "Weighted graph JSON")
      ->required();
  synth_cmd->add_option("--seed", seed, "Hash seed")
      ->required()
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--out", synth_out, "Output graph JSON")->required();

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a weighted graph");
  gen_cmd->add_option("--model", gen.model, "random or grid")
      ->check(CLI::IsMember({"random", "grid"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (random)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (random)");
  gen_cmd->add_option("--rows", gen.rows, "Rows (grid)");
  gen_cmd->add_option("--cols", gen.cols, "Columns (grid)");
  gen_cmd->add_option("--cost-min", gen.cost_min, "Smallest edge cost");
  gen_cmd->add_option("--cost-max", gen.cost_max, "Largest edge cost");
  gen_cmd->add_option("--rng-seed", gen.rng_seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output weighted graph JSON")
      ->required();

  std::string suite_file, out_dir;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run an experiment suite");
  bench_cmd->add_option("--suite", suite_file, "Suite JSON")->required();
  bench_cmd->add_option("--out-dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (*solve_cmd) return Solve(solve);
    if (*synth_cmd) return Synth(weighted, seed, synth_out);
    if (*gen_cmd) return Gen(gen);
    return Bench(suite_file, out_dir);
  } catch (const SearchTimeout& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const FormatError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace
}  // namespace boundsearch

int main(int argc, char** argv) { return boundsearch::Main(argc, argv); }
