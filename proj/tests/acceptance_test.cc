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


// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "boundsearch/anytime.h"
#include "boundsearch/generators.h"
#include "boundsearch/graph_io.h"
#include "boundsearch/oracle.h"
#include "boundsearch/search.h"
#include "boundsearch/suite.h"
#include "boundsearch/synth.h"
#include "property_checks.h"
#include "test_support.h"

namespace boundsearch {
namespace {

using Clock = std::chrono::steady_clock;
using testing::kE01;
using testing::kE02;
using testing::kE14;
using testing::kE21;
using testing::kE24;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double Seconds(Clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

// Collects the first few violation messages and a total count.
class Violations {
 public:
  void Add(const std::string& where, const std::string& what) {
    if (what.empty()) return;
    if (++count_ <= 3) samples_ += " [" + where + ": " + what + "]";
  }
  int count() const { return count_; }
  std::string Summary() const {
    return std::to_string(count_) + " violations" + samples_;
  }

 private:
  int count_ = 0;
  std::string samples_;
};

constexpr int kSmallInstances = 1000;
constexpr int kLargeInstances = 100;

// n <= 12, alternating synthesized and arbitrary nested estimators.
Problem SmallInstance(int i) {
  return i % 2 ? testing::RandomSynthProblem(static_cast<std::uint64_t>(i))
               : testing::RandomNestedProblem(static_cast<std::uint64_t>(i));
}

// 13 <= n <= 500, average out-degree between 1.5 and 6.
Problem LargeInstance(int i) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(i) + 1000003);
  RandomGraphSpec spec;
  spec.n = std::uniform_int_distribution<std::uint32_t>(13, 500)(rng);
  const double degree = std::uniform_real_distribution<double>(1.5, 6.0)(rng);
  spec.edge_prob = std::min(1.0, 2.0 * degree / spec.n);
  spec.cost_min = 1;
  spec.cost_max = 20;
  spec.rng_seed = rng();
  return SynthEstimators(GenerateRandomGraph(spec), i % 9);
}

Outcome Criterion1() {
  const Problem p = testing::ExampleProblem();
  const auto t0 = Clock::now();
  const double l_star = OracleLStar(p);
  const double c_star = OracleCStar(p);
  const double factor = AdmissibilityFactor(13, 7);
  const double elapsed = Seconds(Clock::now() - t0);
  Outcome o;
  o.pass = l_star == 7 && c_star == 9 &&
           std::fabs(factor - 13.0 / 7.0) <= 1e-12 && elapsed < 1e-3;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "L*=%g C*=%g factor(13,7)=%.15g runtime=%.1f us", l_star,
                c_star, factor, elapsed * 1e6);
  o.detail = buf;
  return o;
}

Outcome Criterion2() {
  const Problem p = testing::ExampleProblem();
  EstimationCache cache(p.graph);
  const SearchResult r = Beauty(p, cache);
  std::vector<std::pair<EdgeId, int>> used;
  for (const Invocation& inv : cache.invocations()) {
    used.emplace_back(inv.edge, inv.layer);
  }
  std::sort(used.begin(), used.end());
  std::vector<std::pair<EdgeId, int>> want = {
      {kE01, 1}, {kE02, 1}, {kE02, 2}, {kE14, 1}, {kE14, 2},
      {kE21, 1}, {testing::kE23, 1}, {testing::kE23, 2}, {kE24, 1}};
  std::sort(want.begin(), want.end());
  Outcome o;
  o.pass = r.found && r.path.edges == std::vector<EdgeId>{kE02, kE24} &&
           r.opt && r.l_under == 7 && r.l_over == 7 && used == want &&
           !cache.invoked(kE21, 2);
  o.detail = "path=<e02,e24> opt=" + std::to_string(r.opt) +
             " bounds=" + std::to_string(static_cast<int>(r.l_under)) + "/" +
             std::to_string(static_cast<int>(r.l_over)) +
             " invocations=" + std::to_string(used.size());
  return o;
}

Outcome Criterion3() {
  const Problem p = testing::ExampleProblem();
  EstimationCache cache(p.graph);
  const AnytimeResult r = AnytimeBeauty(p, cache, {.max_iterations = 10});
  bool e14_in_post_search = false;
  for (const Invocation& inv : cache.invocations()) {
    if (inv.edge == kE14 && inv.layer == 2) {
      e14_in_post_search = inv.phase == Phase::kPostSearch && inv.run == 1;
    }
  }
  Outcome o;
  o.pass = r.log.size() == 2 &&
           r.log[0].path.edges == std::vector<EdgeId>{kE01, kE14} &&
           r.log[0].l_under == 5 && r.log[0].l_over == 8 &&
           r.log[1].path.edges == std::vector<EdgeId>{kE02, kE24} &&
           r.log[1].l_under == 7 && r.log[1].l_over == 7 &&
           r.path.edges == std::vector<EdgeId>{kE02, kE24} && r.l_star == 7 &&
           e14_in_post_search;
  o.detail = "iterations=" + std::to_string(r.log.size()) +
             " l_star=" + std::to_string(static_cast<int>(r.l_star)) +
             " e14 layer 2 in post-search of run 1: " +
             (e14_in_post_search ? "yes" : "no");
  return o;
}

Outcome Criterion4() {
  const auto t0 = Clock::now();
  Violations v;
  int enumerated = 0;
  for (int i = 0; i < kSmallInstances; ++i) {
    const Problem p = SmallInstance(i);
    const bool enumerate = p.graph.edge_count() <= 200;
    enumerated += enumerate;
    v.Add("small " + std::to_string(i),
          testing::CheckOracleEquivalence(p, enumerate));
  }
  for (int i = 0; i < kLargeInstances; ++i) {
    v.Add("large " + std::to_string(i),
          testing::CheckOracleEquivalence(LargeInstance(i), false));
  }
  const double elapsed = Seconds(Clock::now() - t0);
  Outcome o;
  o.pass = v.count() == 0 && enumerated == kSmallInstances && elapsed < 60.0;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d small (%d enumerated) + %d large, %.2f s, ",
                kSmallInstances, enumerated, kLargeInstances, elapsed);
  o.detail = buf + v.Summary();
  return o;
}

Outcome Criterion5() {
  Violations v;
  for (int i = 0; i < kSmallInstances; ++i) {
    v.Add("small " + std::to_string(i),
          testing::CheckBaselineEquivalence(SmallInstance(i)));
  }
  for (int i = 0; i < kLargeInstances; ++i) {
    v.Add("large " + std::to_string(i),
          testing::CheckBaselineEquivalence(LargeInstance(i)));
  }
  for (std::uint32_t s = 0; s < 9; ++s) {
    const WeightedGraph g = GenerateGridGraph(
        {.rows = 20, .cols = 20, .cost_min = 1, .cost_max = 9, .rng_seed = s});
    v.Add("grid " + std::to_string(s),
          testing::CheckBaselineEquivalence(SynthEstimators(g, s)));
  }
  Outcome o;
  o.pass = v.count() == 0;
  o.detail = std::to_string(kSmallInstances + kLargeInstances + 9) +
             " instances, " + v.Summary();
  return o;
}

Outcome Criterion6() {
  constexpr int kInstances = 600;
  constexpr int kDraws = 5;
  std::mt19937_64 rng(6);
  Violations v;
  for (int i = 0; i < kInstances; ++i) {
    const Problem p = i % 3 == 2 ? LargeInstance(i) : SmallInstance(i);
    const double l_star = OracleLStar(p);
    for (int k = 0; k < kDraws; ++k) {
      v.Add("instance " + std::to_string(i),
            testing::CheckBoundInvariants(p, testing::DrawThresholds(l_star, rng)));
    }
  }
  Outcome o;
  o.pass = v.count() == 0;
  o.detail = std::to_string(kInstances) + " instances x " +
             std::to_string(kDraws) + " threshold draws, " + v.Summary();
  return o;
}

Outcome Criterion7() {
  constexpr int kInstances = 600;
  Violations strict;
  int final_repeat_only = 0;
  for (int i = 0; i < kInstances; ++i) {
    const Problem p = i % 3 == 2 ? LargeInstance(i) : SmallInstance(i);
    const std::string s = testing::CheckAnytime(p);
    strict.Add("instance " + std::to_string(i), s);
    if (!s.empty() && testing::CheckAnytime(p, true).empty()) {
      ++final_repeat_only;
    }
  }
  Outcome o;
  o.pass = strict.count() == 0;
  o.detail = std::to_string(kInstances) + " instances, " + strict.Summary() +
             "; " + std::to_string(final_repeat_only) +
             " of them only repeat l_under = L* on the final, optimal "
             "iteration";
  return o;
}

SuiteConfig SavingsSuite(std::vector<std::string> algorithms) {
  SuiteConfig config;
  config.instances.push_back(
      {"random200", RandomGraphSpec{.n = 200, .edge_prob = 0.05,
                                    .cost_min = 1, .cost_max = 20,
                                    .rng_seed = 0}});
  for (const std::string& a : algorithms) {
    config.algorithms.push_back(ParseAlgorithm(a));
  }
  return config;
}

Outcome Criterion8() {
  const SuiteReport report = RunSuite(SavingsSuite({"beauty", "a_beauty-2"}));
  const double beauty = report.aggregates[0].r_l3.mean;
  const double two = report.aggregates[1].r_l3.mean;
  Outcome o;
  o.pass = report.aggregates[0].r_l3.count == 9 &&
           report.aggregates[1].r_l3.count == 9 && beauty < 1.0 &&
           two <= beauty;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "mean r_L3: beauty %.2f%% (reference 60.82%%), a_beauty-2 "
                "%.2f%% (reference 46.03%%)",
                100 * beauty, 100 * two);
  o.detail = buf;
  return o;
}

Outcome Criterion9() {
  SuiteConfig config = SavingsSuite({"a_beauty-10"});
  config.instances.push_back(
      {"grid", GridGraphSpec{.rows = 15, .cols = 15, .cost_min = 1,
                             .cost_max = 9, .rng_seed = 1}});
  const SuiteReport report = RunSuite(config);
  bool first_zero = true;
  std::vector<double> later;
  int runs = 0;
  for (const RunRow& row : report.rows) {
    ++runs;
    for (const IterationEntry& e : row.log) {
      if (e.iteration == 1) {
        first_zero = first_zero && e.metrics_delta.prunings == 0;
      } else if (e.metrics_delta.evaluations > 0) {
        later.push_back(static_cast<double>(e.metrics_delta.prunings) /
                        static_cast<double>(e.metrics_delta.evaluations));
      }
    }
  }
  const Stat s = Summarize(later);
  const bool later_ok = s.count == 0 || s.mean >= 0.0;
  Outcome o;
  o.pass = runs > 0 && first_zero && later_ok;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d runs, iteration-1 ratio %s, mean ratio over iterations >= 2: "
                "%.4f (%zu samples)",
                runs, first_zero ? "0" : "non-zero", s.count ? s.mean : 0.0,
                s.count);
  o.detail = buf;
  return o;
}

Outcome Criterion10() {
  Violations v;
  int checked = 0;
  auto check = [&](const std::string& where, const Problem& p,
                   bool synthesized) {
    ++checked;
    const std::string text = SerializeProblem(p);
    if (SerializeProblem(ParseProblem(text)) != text) {
      v.Add(where, "round trip not byte-identical");
    }
    if (synthesized && !ValidateGraph(p.graph).empty()) {
      v.Add(where, "synthesized instance failed validation");
    }
  };
  for (int i = 0; i < kSmallInstances; ++i) {
    check("small " + std::to_string(i), SmallInstance(i), i % 2 == 1);
  }
  for (int i = 0; i < kLargeInstances; ++i) {
    check("large " + std::to_string(i), LargeInstance(i), true);
  }
  check("example", testing::ExampleProblem(), false);
  const WeightedGraph w = GenerateGridGraph(
      {.rows = 10, .cols = 10, .cost_min = 1, .cost_max = 50, .rng_seed = 3});
  const std::string wt = SerializeWeightedGraph(w);
  if (SerializeWeightedGraph(ParseWeightedGraph(wt)) != wt) {
    v.Add("weighted grid", "round trip not byte-identical");
  }
  Outcome o;
  o.pass = v.count() == 0;
  o.detail = std::to_string(checked) + " graphs, " + v.Summary();
  return o;
}

}  // namespace
}  // namespace boundsearch

int main() {
  using boundsearch::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>>
      criteria = {
          {"AC1 example golden values", boundsearch::Criterion1},
          {"AC2 base search golden trace", boundsearch::Criterion2},
          {"AC3 anytime golden trace", boundsearch::Criterion3},
          {"AC4 oracle equivalence", boundsearch::Criterion4},
          {"AC5 baseline equivalence", boundsearch::Criterion5},
          {"AC6 bound invariants", boundsearch::Criterion6},
          {"AC7 anytime monotonicity and caching", boundsearch::Criterion7},
          {"AC8 savings trend", boundsearch::Criterion8},
          {"AC9 pruning sanity", boundsearch::Criterion9},
          {"AC10 format round trip", boundsearch::Criterion10},
      };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
