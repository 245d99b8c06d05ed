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


#include "boundsearch/suite.h"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "boundsearch/csv.h"
#include "boundsearch/graph_io.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace boundsearch {
namespace {

SuiteConfig ExampleSuite(std::vector<std::string> algorithms) {
  SuiteConfig config;
  config.instances.push_back({"example", testing::ExampleProblem()});
  for (const std::string& a : algorithms) {
    config.algorithms.push_back(ParseAlgorithm(a));
  }
  return config;
}

TEST(ParseAlgorithm, NamesAndAliases) {
  EXPECT_EQ(ParseAlgorithm("ei_ucs").name(), "ei_ucs");
  EXPECT_EQ(ParseAlgorithm("eiucs").name(), "ei_ucs");
  EXPECT_EQ(ParseAlgorithm("beauty").name(), "beauty");
  EXPECT_EQ(ParseAlgorithm("a_beauty-10").max_iterations, 10);
  EXPECT_EQ(ParseAlgorithm("abeauty-2").name(), "a_beauty-2");
  for (const char* bad : {"", "a_beauty-", "a_beauty-0", "a_beauty-2x",
                          "dijkstra"}) {
    EXPECT_THROW(ParseAlgorithm(bad), std::invalid_argument) << bad;
  }
}

TEST(Summarize, Statistics) {
  const Stat s = Summarize({4, 1, 3, 2, std::nan("")});
  EXPECT_EQ(s.count, 4u);
  EXPECT_EQ(s.mean, 2.5);
  EXPECT_EQ(s.median, 2.5);
  EXPECT_EQ(s.min, 1);
  EXPECT_EQ(s.max, 4);
  EXPECT_DOUBLE_EQ(s.stddev, std::sqrt(1.25));
  EXPECT_EQ(Summarize({}).count, 0u);
  EXPECT_EQ(Summarize({7}).stddev, 0);
}

TEST(RunSuite, ExampleBeauty) {
  const SuiteReport report = RunSuite(ExampleSuite({"beauty"}));
  ASSERT_EQ(report.rows.size(), 1u);
  const RunRow& row = report.rows[0];
  EXPECT_EQ(row.algorithm, "beauty");
  EXPECT_EQ(row.r_exp, 1.0);
  // EI-UCS calls every edge's last estimator once (6); BEAUTY skips e21's.
  EXPECT_EQ(row.metrics.final_layer_invocations, 5);
  EXPECT_DOUBLE_EQ(row.r_l3, 5.0 / 6.0);
  EXPECT_EQ(row.oracle_l_star, 7);
  ASSERT_EQ(report.aggregates.size(), 1u);
  EXPECT_EQ(report.aggregates[0].oracle_mismatches, 0);
  EXPECT_TRUE(report.timed_out.empty());
}

TEST(RunSuite, ExampleAnytimeHistogram) {
  const SuiteReport report = RunSuite(ExampleSuite({"a_beauty-10"}));
  ASSERT_EQ(report.aggregates.size(), 1u);
  const AlgorithmAggregate& agg = report.aggregates[0];
  EXPECT_EQ(agg.final_iteration_histogram, (std::map<int, int>{{2, 1}}));
  ASSERT_EQ(agg.convergence.size(), 2u);
  EXPECT_DOUBLE_EQ(agg.convergence[0].mean, 5.0 / 7.0);
  EXPECT_EQ(agg.convergence[1].mean, 1.0);
  ASSERT_EQ(agg.pruning.size(), 2u);
  EXPECT_EQ(agg.pruning[0].mean, 0.0);
}

TEST(RunSuite, EmptySuite) {
  const SuiteReport report = RunSuite(SuiteConfig{});
  EXPECT_TRUE(report.rows.empty());
  EXPECT_TRUE(report.aggregates.empty());
}

TEST(RunSuite, GeneratedInstancesPerSeed) {
  SuiteConfig config;
  config.instances.push_back(
      {"r", RandomGraphSpec{.n = 30, .edge_prob = 0.15, .cost_min = 1,
                            .cost_max = 20, .rng_seed = 2}});
  config.seeds = {0, 1, 2};
  config.algorithms = {ParseAlgorithm("ei_ucs"), ParseAlgorithm("beauty"),
                       ParseAlgorithm("a_beauty-2")};
  config.threads = 2;
  const SuiteReport report = RunSuite(config);
  EXPECT_EQ(report.rows.size() + 3 * report.unreachable.size(), 9u);
  for (const RunRow& row : report.rows) {
    EXPECT_EQ(row.l_over, row.oracle_l_star) << row.instance_id;
    if (row.algorithm != "a_beauty-2") EXPECT_EQ(row.r_exp, 1.0);
    if (row.algorithm == "ei_ucs") EXPECT_EQ(row.r_l3, 1.0);
  }
}

TEST(RunSuite, TimeoutExcludesInstance) {
  SuiteConfig config;
  config.instances.push_back(
      {"big", GridGraphSpec{.rows = 80, .cols = 80, .cost_min = 1,
                            .cost_max = 9}});
  config.seeds = {0};
  config.algorithms = {ParseAlgorithm("beauty")};
  config.timeout_seconds = 1e-9;
  const SuiteReport report = RunSuite(config);
  EXPECT_EQ(report.timed_out, std::vector<std::string>{"big/seed=0"});
  EXPECT_TRUE(report.rows.empty());
}

TEST(ParseSuiteConfig, AllInstanceKinds) {
  const SuiteConfig c = ParseSuiteConfig(R"({
    "instances": [
      {"id": "r", "generator": "random", "n": 10, "p": 0.2, "rng_seed": 4},
      {"generator": "grid", "rows": 2, "cols": 3},
      {"weighted_graph": "w.json"},
      {"id": "e", "graph": "/abs/e.json"}
    ],
    "seeds": [0, 5],
    "algorithms": ["beauty", "abeauty-10"],
    "timeout_seconds": 3
  })", "/base");
  ASSERT_EQ(c.instances.size(), 4u);
  EXPECT_EQ(c.instances[0].id, "r");
  EXPECT_EQ(std::get<RandomGraphSpec>(c.instances[0].source).n, 10u);
  EXPECT_EQ(std::get<GridGraphSpec>(c.instances[1].source).cols, 3u);
  EXPECT_EQ(std::get<WeightedGraphFile>(c.instances[2].source).path,
            std::filesystem::path("/base/w.json"));
  EXPECT_EQ(std::get<EstimatedGraphFile>(c.instances[3].source).path,
            std::filesystem::path("/abs/e.json"));
  EXPECT_EQ(c.seeds, (std::vector<std::int64_t>{0, 5}));
  ASSERT_EQ(c.algorithms.size(), 2u);
  EXPECT_EQ(c.algorithms[1].max_iterations, 10);
  EXPECT_EQ(c.timeout_seconds, 3);
}

TEST(ParseSuiteConfig, RejectsBadConfigs) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"instances": [{"generator": "lattice"}]})",
           R"({"instances": [{"id": "x"}]})",
           R"({"instances": [{"generator": "random", "p": 0.1}]})",
           R"({"algorithms": ["astar"]})",
           R"({"timeout_seconds": 0})",
       }) {
    EXPECT_THROW(ParseSuiteConfig(bad), FormatError) << bad;
  }
}

TEST(WriteSuiteOutputs, WritesThreeFiles) {
  const SuiteReport report = RunSuite(ExampleSuite({"ei_ucs", "a_beauty-10"}));
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "boundsearch_suite_test";
  std::filesystem::remove_all(dir);
  WriteSuiteOutputs(report, dir);
  const std::string runs = ReadFile(dir / "runs.csv");
  EXPECT_EQ(runs.substr(0, MetricsCsvHeader().size()), MetricsCsvHeader());
  EXPECT_NE(runs.find("example,a_beauty-10,"), std::string::npos);
  const std::string iters = ReadFile(dir / "iterations.csv");
  EXPECT_NE(iters.find("example,a_beauty-10,2,"), std::string::npos);
  EXPECT_NE(ReadFile(dir / "summary.json").find("\"r_L3\""),
            std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Csv, MetricsRow) {
  MetricsRecord r;
  r.instance_id = "a,b";
  r.algorithm = "beauty";
  r.metrics.layer_invocations = {6, 3};
  r.metrics.expansions = 3;
  r.metrics.evaluations = 6;
  r.metrics.estimation_time = 36;
  r.metrics.tau_v = 0.5;
  r.l_under = 7;
  r.l_over = 7.25;
  r.opt = true;
  EXPECT_EQ(MetricsCsvRow(r), "\"a,b\",beauty,6,3,0,3,6,0,36,1.5,7,7.25,1,1\n");
  EXPECT_EQ(FormatNumber(kInfinity), "inf");
  EXPECT_EQ(FormatNumber(0.1), "0.1");
}

TEST(Csv, IterationRow) {
  IterationEntry e;
  e.iteration = 1;
  e.found = true;
  e.path.edges = {testing::kE01, testing::kE14};
  e.l_under = 5;
  e.l_over = 8;
  e.l_est = 0;
  e.l_prune = kInfinity;
  e.metrics_delta.layer_invocations = {4, 1};
  EXPECT_EQ(IterationCsvRow("x", "a_beauty-10", e),
            "x,a_beauty-10,1,0,0,inf,5,8,0,0 2,4,1,0,0,0,0,0,0\n");
}

}  // namespace
}  // namespace boundsearch
