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

// Experiment driver. A suite is the cross product of instance sources, seeds
// and algorithms. Every instance is also solved by the EI-UCS baseline, and
// each algorithm is scored against it:
//
//   r_L3  = final-layer invocations(alg) / final-layer invocations(EI-UCS)
//   r_exp = expansions(alg) / expansions(EI-UCS)
//
// "Final layer" is each edge's own last estimator, which is the third layer
// for synthesized instances.

#ifndef BOUNDSEARCH_SUITE_H_
#define BOUNDSEARCH_SUITE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boundsearch/anytime.h"
#include "boundsearch/estimation.h"
#include "boundsearch/generators.h"
#include "boundsearch/synth.h"

namespace boundsearch {

struct AlgorithmSpec {
  enum class Kind { kEiUcs, kBeauty, kAnytime };
  Kind kind = Kind::kBeauty;
  int max_iterations = 1;  // kAnytime only

  // "ei_ucs", "beauty", "a_beauty-<N>".
  std::string name() const;
};

// Accepts the canonical names plus the CLI aliases "eiucs" and
// "abeauty-<N>". Throws std::invalid_argument otherwise.
AlgorithmSpec ParseAlgorithm(std::string_view name);

struct WeightedGraphFile {
  std::filesystem::path path;
};
struct EstimatedGraphFile {
  std::filesystem::path path;
};

// Generated and weighted-file sources are synthesized once per suite seed;
// estimated-graph files are used verbatim and run once.
struct InstanceSpec {
  std::string id;
  std::variant<RandomGraphSpec, GridGraphSpec, WeightedGraphFile,
               EstimatedGraphFile, Problem>
      source;
};

struct SuiteConfig {
  std::vector<InstanceSpec> instances;
  std::vector<std::int64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<AlgorithmSpec> algorithms;
  double timeout_seconds = 60.0;
  int threads = 1;
  SynthConfig synth;
  EstimationOptions estimation;
};

// Suite JSON:
//   {"instances": [...], "seeds": [int], "algorithms": [string],
//    "timeout_seconds": number, "threads": int (optional)}
// Instance entries:
//   {"id": str?, "generator": "random", "n", "p", "cost_min", "cost_max",
//    "rng_seed"}
//   {"id": str?, "generator": "grid", "rows", "cols", "cost_min",
//    "cost_max", "rng_seed"}
//   {"id": str?, "weighted_graph": "file.json"}
//   {"id": str?, "graph": "file.json"}
// Relative file paths resolve against `base_dir`. Throws FormatError.
SuiteConfig ParseSuiteConfig(std::string_view json,
                             const std::filesystem::path& base_dir = {});

struct RunRow {
  std::string instance_id;
  std::string algorithm;
  bool found = false;
  bool opt = false;
  double l_under = kInfinity;
  double l_over = kInfinity;
  int iterations = 1;
  Metrics metrics;
  double oracle_l_star = kInfinity;
  double r_l3 = 0.0;   // NaN when the baseline used no final-layer estimator
  double r_exp = 0.0;  // NaN when the baseline expanded nothing
  std::vector<IterationEntry> log;  // anytime runs only
};

struct Stat {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Ignores NaN samples.
Stat Summarize(std::vector<double> samples);

struct AlgorithmAggregate {
  std::string algorithm;
  Stat r_l3;
  Stat r_exp;
  // Indexed by iteration - 1. Convergence is l_under_i / L*, pruning is
  // prunings_i / evaluations_i.
  std::vector<Stat> convergence;
  std::vector<Stat> pruning;
  // Number of instances that stopped at each iteration.
  std::map<int, int> final_iteration_histogram;
  // Instances whose result disagreed with the oracle L*.
  int oracle_mismatches = 0;
};

struct SuiteReport {
  std::vector<RunRow> rows;
  std::vector<AlgorithmAggregate> aggregates;
  std::vector<std::string> timed_out;
  std::vector<std::string> unreachable;
};

SuiteReport RunSuite(const SuiteConfig& config);

// Writes runs.csv, iterations.csv and summary.json into `dir`.
void WriteSuiteOutputs(const SuiteReport& report,
                       const std::filesystem::path& dir);

std::string SummaryJson(const SuiteReport& report);

}  // namespace boundsearch

#endif  // BOUNDSEARCH_SUITE_H_
