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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "boundsearch/csv.h"
#include "boundsearch/graph_io.h"
#include "boundsearch/oracle.h"
#include "boundsearch/search.h"
#include "json.hpp"

namespace boundsearch {
namespace {

using Json = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double Ratio(double num, double den) { return den > 0.0 ? num / den : kNaN; }

// One (instance, seed) pair, materialized.
struct Cell {
  std::string id;
  Problem problem;
};

struct CellOutcome {
  std::vector<RunRow> rows;
  bool timed_out = false;
  bool unreachable = false;
};

template <typename T>
T Get(const Json& obj, const char* name, T fallback) {
  auto it = obj.find(name);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw FormatError(std::string("bad value for \"") + name + "\"");
  }
}

template <typename T>
T Require(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw FormatError(std::string("bad value for \"") + name + "\"");
  }
}

std::vector<Cell> Materialize(const SuiteConfig& config) {
  std::vector<Cell> cells;
  for (const InstanceSpec& spec : config.instances) {
    auto per_seed = [&](const WeightedGraph& g) {
      for (std::int64_t seed : config.seeds) {
        cells.push_back({spec.id + "/seed=" + std::to_string(seed),
                         SynthEstimators(g, seed, config.synth)});
      }
    };
    std::visit(
        [&](const auto& src) {
          using T = std::decay_t<decltype(src)>;
          if constexpr (std::is_same_v<T, RandomGraphSpec>) {
            per_seed(GenerateRandomGraph(src));
          } else if constexpr (std::is_same_v<T, GridGraphSpec>) {
            per_seed(GenerateGridGraph(src));
          } else if constexpr (std::is_same_v<T, WeightedGraphFile>) {
            per_seed(LoadWeightedGraph(src.path));
          } else if constexpr (std::is_same_v<T, EstimatedGraphFile>) {
            cells.push_back({spec.id, LoadProblem(src.path)});
          } else {
            cells.push_back({spec.id, src});
          }
        },
        spec.source);
  }
  return cells;
}

RunRow RunOne(const Cell& cell, const AlgorithmSpec& alg,
              const SuiteConfig& config,
              std::chrono::steady_clock::time_point deadline) {
  EstimationCache cache(cell.problem.graph, config.estimation);
  RunRow row;
  row.instance_id = cell.id;
  row.algorithm = alg.name();
  if (alg.kind == AlgorithmSpec::Kind::kAnytime) {
    AnytimeOptions opts;
    opts.max_iterations = alg.max_iterations;
    opts.deadline = deadline;
    AnytimeResult r = AnytimeBeauty(cell.problem, cache, opts);
    row.found = r.found;
    row.opt = r.found;
    row.l_under = r.found ? r.log.back().l_under : kInfinity;
    row.l_over = r.l_star;
    row.iterations = static_cast<int>(r.log.size());
    row.metrics = r.metrics;
    row.log = std::move(r.log);
  } else {
    SearchOptions opts;
    opts.deadline = deadline;
    SearchResult r = alg.kind == AlgorithmSpec::Kind::kEiUcs
                         ? EiUcs(cell.problem, cache, opts)
                         : Beauty(cell.problem, cache, opts);
    row.found = r.found;
    row.opt = r.opt;
    row.l_under = r.l_under;
    row.l_over = r.l_over;
    row.metrics = r.metrics;
  }
  return row;
}

CellOutcome RunCell(const Cell& cell, const SuiteConfig& config) {
  CellOutcome out;
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(config.timeout_seconds));
  const double l_star = OracleLStar(cell.problem);
  try {
    const RunRow baseline =
        RunOne(cell, AlgorithmSpec{AlgorithmSpec::Kind::kEiUcs, 1}, config,
               deadline);
    if (!baseline.found) out.unreachable = true;
    for (const AlgorithmSpec& alg : config.algorithms) {
      RunRow row = alg.kind == AlgorithmSpec::Kind::kEiUcs
                       ? baseline
                       : RunOne(cell, alg, config, deadline);
      row.oracle_l_star = l_star;
      row.r_l3 =
          Ratio(static_cast<double>(row.metrics.final_layer_invocations),
                static_cast<double>(baseline.metrics.final_layer_invocations));
      row.r_exp = Ratio(static_cast<double>(row.metrics.expansions),
                        static_cast<double>(baseline.metrics.expansions));
      out.rows.push_back(std::move(row));
    }
  } catch (const SearchTimeout&) {
    out.rows.clear();
    out.timed_out = true;
  }
  return out;
}

void Push(std::vector<std::vector<double>>& per_iter, std::size_t i, double x) {
  if (per_iter.size() <= i) per_iter.resize(i + 1);
  per_iter[i].push_back(x);
}

Json StatJson(const Stat& s) {
  Json j = Json::object();
  j["count"] = s.count;
  auto num = [](double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
  j["mean"] = num(s.mean);
  j["stddev"] = num(s.stddev);
  j["median"] = num(s.median);
  j["min"] = num(s.min);
  j["max"] = num(s.max);
  return j;
}

}  // namespace

std::string AlgorithmSpec::name() const {
  switch (kind) {
    case Kind::kEiUcs:
      return "ei_ucs";
    case Kind::kBeauty:
      return "beauty";
    case Kind::kAnytime:
      return "a_beauty-" + std::to_string(max_iterations);
  }
  return "unknown";
}

AlgorithmSpec ParseAlgorithm(std::string_view name) {
  if (name == "ei_ucs" || name == "eiucs") {
    return {AlgorithmSpec::Kind::kEiUcs, 1};
  }
  if (name == "beauty") return {AlgorithmSpec::Kind::kBeauty, 1};
  for (std::string_view prefix : {"a_beauty-", "abeauty-"}) {
    if (name.starts_with(prefix)) {
      std::string_view digits = name.substr(prefix.size());
      int n = 0;
      auto [end, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec == std::errc() && end == digits.data() + digits.size() && n >= 1) {
        return {AlgorithmSpec::Kind::kAnytime, n};
      }
    }
  }
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

SuiteConfig ParseSuiteConfig(std::string_view json,
                             const std::filesystem::path& base_dir) {
  Json root;
  try {
    root = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid suite JSON: ") + e.what());
  }
  if (!root.is_object()) throw FormatError("suite must be a JSON object");

  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };

  SuiteConfig config;
  const Json instances = Get<Json>(root, "instances", Json::array());
  if (!instances.is_array()) throw FormatError("\"instances\" must be an array");
  int ordinal = 0;
  for (const Json& j : instances) {
    if (!j.is_object()) throw FormatError("instance entry must be an object");
    InstanceSpec spec;
    spec.id = Get<std::string>(j, "id", "instance" + std::to_string(ordinal++));
    if (j.contains("generator")) {
      const std::string gen = Require<std::string>(j, "generator");
      if (gen == "random") {
        RandomGraphSpec r;
        r.n = Require<std::uint32_t>(j, "n");
        r.edge_prob = Require<double>(j, "p");
        r.cost_min = Get<std::int64_t>(j, "cost_min", 1);
        r.cost_max = Get<std::int64_t>(j, "cost_max", 20);
        r.rng_seed = Get<std::uint64_t>(j, "rng_seed", 0);
        spec.source = r;
      } else if (gen == "grid") {
        GridGraphSpec g;
        g.rows = Require<std::uint32_t>(j, "rows");
        g.cols = Require<std::uint32_t>(j, "cols");
        g.cost_min = Get<std::int64_t>(j, "cost_min", 1);
        g.cost_max = Get<std::int64_t>(j, "cost_max", 9);
        g.rng_seed = Get<std::uint64_t>(j, "rng_seed", 0);
        spec.source = g;
      } else {
        throw FormatError("unknown generator: " + gen);
      }
    } else if (j.contains("weighted_graph")) {
      spec.source =
          WeightedGraphFile{resolve(Require<std::string>(j, "weighted_graph"))};
    } else if (j.contains("graph")) {
      spec.source = EstimatedGraphFile{resolve(Require<std::string>(j, "graph"))};
    } else {
      throw FormatError("instance needs \"generator\", \"weighted_graph\" or \"graph\"");
    }
    config.instances.push_back(std::move(spec));
  }

  if (root.contains("seeds")) {
    config.seeds = Require<std::vector<std::int64_t>>(root, "seeds");
  }
  for (const std::string& name :
       Get<std::vector<std::string>>(root, "algorithms", {})) {
    try {
      config.algorithms.push_back(ParseAlgorithm(name));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  config.timeout_seconds = Get<double>(root, "timeout_seconds", 60.0);
  config.threads = Get<int>(root, "threads", 1);
  if (config.timeout_seconds <= 0.0) {
    throw FormatError("timeout_seconds must be positive");
  }
  return config;
}

Stat Summarize(std::vector<double> samples) {
  std::erase_if(samples, [](double x) { return std::isnan(x); });
  Stat s;
  s.count = samples.size();
  if (samples.empty()) {
    s.mean = s.stddev = s.median = s.min = s.max = kNaN;
    return s;
  }
  std::sort(samples.begin(), samples.end());
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / static_cast<double>(s.count);
  double sq = 0.0;
  for (double x : samples) sq += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(s.count));
  const std::size_t mid = s.count / 2;
  s.median = s.count % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  s.min = samples.front();
  s.max = samples.back();
  return s;
}

SuiteReport RunSuite(const SuiteConfig& config) {
  SuiteReport report;
  const std::vector<Cell> cells = Materialize(config);
  if (cells.empty() || config.algorithms.empty()) return report;

  std::vector<CellOutcome> outcomes(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      outcomes[i] = RunCell(cells[i], config);
    }
  };
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellOutcome& o = outcomes[i];
    if (o.timed_out) {
      report.timed_out.push_back(cells[i].id);
      continue;
    }
    if (o.unreachable) report.unreachable.push_back(cells[i].id);
    for (RunRow& row : o.rows) report.rows.push_back(std::move(row));
  }

  for (const AlgorithmSpec& alg : config.algorithms) {
    const std::string name = alg.name();
    AlgorithmAggregate agg;
    agg.algorithm = name;
    std::vector<double> r_l3, r_exp;
    std::vector<std::vector<double>> conv, prune;
    for (const RunRow& row : report.rows) {
      if (row.algorithm != name || !row.found) continue;
      r_l3.push_back(row.r_l3);
      r_exp.push_back(row.r_exp);
      if (row.l_over != row.oracle_l_star) ++agg.oracle_mismatches;
      if (alg.kind != AlgorithmSpec::Kind::kAnytime) continue;
      ++agg.final_iteration_histogram[row.iterations];
      for (const IterationEntry& e : row.log) {
        const std::size_t i = static_cast<std::size_t>(e.iteration - 1);
        if (row.oracle_l_star > 0.0) {
          Push(conv, i, e.l_under / row.oracle_l_star);
        }
        Push(prune, i,
             Ratio(static_cast<double>(e.metrics_delta.prunings),
                   static_cast<double>(e.metrics_delta.evaluations)));
      }
    }
    agg.r_l3 = Summarize(std::move(r_l3));
    agg.r_exp = Summarize(std::move(r_exp));
    for (auto& v : conv) agg.convergence.push_back(Summarize(std::move(v)));
    for (auto& v : prune) agg.pruning.push_back(Summarize(std::move(v)));
    report.aggregates.push_back(std::move(agg));
  }
  return report;
}

std::string SummaryJson(const SuiteReport& report) {
  Json root = Json::object();
  Json algs = Json::array();
  for (const AlgorithmAggregate& a : report.aggregates) {
    Json j = Json::object();
    j["algorithm"] = a.algorithm;
    j["r_L3"] = StatJson(a.r_l3);
    j["r_exp"] = StatJson(a.r_exp);
    Json conv = Json::array();
    for (const Stat& s : a.convergence) conv.push_back(StatJson(s));
    j["convergence"] = conv;
    Json prune = Json::array();
    for (const Stat& s : a.pruning) prune.push_back(StatJson(s));
    j["pruned_over_evaluated"] = prune;
    Json hist = Json::object();
    for (const auto& [it, count] : a.final_iteration_histogram) {
      hist[std::to_string(it)] = count;
    }
    j["final_iteration_histogram"] = hist;
    j["oracle_mismatches"] = a.oracle_mismatches;
    algs.push_back(std::move(j));
  }
  root["algorithms"] = algs;
  root["timed_out"] = report.timed_out;
  root["unreachable"] = report.unreachable;
  return root.dump(2) + "\n";
}

void WriteSuiteOutputs(const SuiteReport& report,
                       const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string runs = MetricsCsvHeader();
  std::string iterations = IterationCsvHeader();
  for (const RunRow& row : report.rows) {
    runs += MetricsCsvRow({row.instance_id, row.algorithm, row.metrics,
                           row.l_under, row.l_over, row.opt, row.iterations});
    for (const IterationEntry& e : row.log) {
      iterations += IterationCsvRow(row.instance_id, row.algorithm, e);
    }
  }
  WriteFile(dir / "runs.csv", runs);
  WriteFile(dir / "iterations.csv", iterations);
  WriteFile(dir / "summary.json", SummaryJson(report));
}

}  // namespace boundsearch
