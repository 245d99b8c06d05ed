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

// Lazy, cached and instrumented application of edge estimators. Every
// algorithm in this library touches edge costs only through this module, so
// the counters here are the ground truth for estimation effort.
//
// Two levels of access exist:
//
//  * EstimationCache: one record per edge, shared by every search run that
//    uses the cache. Each (edge, layer) estimator is invoked at most once for
//    the lifetime of the cache; re-reads are free.
//  * EstimationSession: one search run's view over a cache. A session walks
//    each edge's estimator sequence from the beginning, replaying saved
//    results before invoking anything new.

#ifndef BOUNDSEARCH_ESTIMATION_H_
#define BOUNDSEARCH_ESTIMATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "boundsearch/graph.h"

namespace boundsearch {

// Counters for the time decomposition T = T_w + T_v, where T_w sums the
// simulated cost of every invoked estimator and T_v = tau_v * expansions.
struct Metrics {
  // layer_invocations[i] is w_{i+1}, the number of invoked layer-(i+1)
  // estimators. Sized to the graph's largest k(e).
  std::vector<std::int64_t> layer_invocations;
  // Invocations of an edge's own last estimator (w_{k(e)} summed over edges).
  std::int64_t final_layer_invocations = 0;
  // Intermediate layers jumped over by ApplyFinal.
  std::int64_t skipped_layers = 0;
  std::int64_t expansions = 0;
  std::int64_t evaluations = 0;
  std::int64_t prunings = 0;
  double estimation_time = 0.0;
  double tau_v = 1.0;

  double search_time() const { return tau_v * static_cast<double>(expansions); }
  double total_time() const { return estimation_time + search_time(); }
  std::int64_t total_invocations() const;
  // w_i with 1-based layer; 0 for layers beyond the graph's largest k(e).
  std::int64_t layer(int one_based) const;

  // Counter-wise difference, used for per-iteration deltas.
  Metrics operator-(const Metrics& earlier) const;
};

enum class Phase { kSearch, kPostSearch };

struct Invocation {
  EdgeId edge;
  int layer;  // 1-based
  Phase phase;
  int run;  // value of EstimationCache::run() at invocation time

  friend bool operator==(const Invocation&, const Invocation&) = default;
};

struct EstimationOptions {
  double tau_v = 1.0;
  // When positive, each invocation sleeps time_cost * wall_clock_scale
  // seconds so end-to-end timings reflect the simulated costs.
  double wall_clock_scale = 0.0;
};

class EstimationCache {
 public:
  explicit EstimationCache(const EstimatedDigraph& graph,
                           EstimationOptions options = {});

  EstimationCache(const EstimationCache&) = delete;
  EstimationCache& operator=(const EstimationCache&) = delete;

  const EstimatedDigraph& graph() const { return *graph_; }

  bool HasRemaining(EdgeId e) const;

  struct Applied {
    double tightest_lower;
    int layer;  // 1-based
  };
  // Invokes the next estimator of `e`. Throws std::logic_error when the
  // sequence is exhausted.
  Applied ApplyNext(EdgeId e);

  // Invokes only the last estimator of `e`, jumping over any intermediate
  // layers, and marks the edge fully estimated. Throws std::logic_error when
  // the sequence is exhausted.
  double ApplyFinal(EdgeId e);

  const EdgeBoundState& state(EdgeId e) const { return states_[e.value()]; }
  std::span<const EdgeBoundState> states() const { return states_; }

  // 1-based layer.
  bool invoked(EdgeId e, int layer) const;

  Metrics SnapshotMetrics() const { return metrics_; }

  // Search-side instrumentation.
  void BeginRun() { ++run_; }
  int run() const { return run_; }
  void set_phase(Phase phase) { phase_ = phase; }
  void RecordExpansion() { ++metrics_.expansions; }
  void RecordEvaluation() { ++metrics_.evaluations; }
  void RecordPruning() { ++metrics_.prunings; }

  std::span<const Invocation> invocations() const { return invocations_; }

 private:
  friend class EstimationSession;

  // Reads layer `layer` (1-based), invoking it only if the cache has neither
  // its result nor a result from a later layer. Returns the layer whose
  // bounds were actually used, which is later than requested when the
  // requested layer was skipped by ApplyFinal.
  int Resolve(EdgeId e, int layer);
  double ResolveFinal(EdgeId e);
  void Invoke(EdgeId e, int layer);

  const EstimatedDigraph* graph_;
  EstimationOptions options_;
  std::vector<EdgeBoundState> states_;
  // invoked_[layer_offset_[e] + layer - 1]
  std::vector<std::uint32_t> layer_offset_;
  std::vector<std::uint8_t> invoked_;
  Metrics metrics_;
  std::vector<Invocation> invocations_;
  int run_ = 0;
  Phase phase_ = Phase::kSearch;
};

// Per-run cursor over each edge's estimator sequence. "Apply next" first
// looks for a saved value in the cache and only then invokes a new
// estimator, so restarting a search over a warm cache costs nothing for the
// estimates it already has.
class EstimationSession {
 public:
  explicit EstimationSession(EstimationCache& cache);

  // A session positioned at the cache's current state: every edge's cursor
  // is its next_index and its lower bound is the cached tightest lower.
  static EstimationSession FromCacheState(EstimationCache& cache);

  bool HasRemaining(EdgeId e) const;
  // Advances the cursor of `e` and returns the edge's tightest lower bound
  // as seen by this run.
  double ApplyNext(EdgeId e);
  // Moves the cursor of `e` to its last estimator and returns its lower
  // bound.
  double ApplyFinal(EdgeId e);

  double lower(EdgeId e) const { return lower_[e.value()]; }
  int cursor(EdgeId e) const { return cursor_[e.value()]; }

  EstimationCache& cache() { return *cache_; }

 private:
  EstimationCache* cache_;
  std::vector<int> cursor_;
  std::vector<double> lower_;
};

}  // namespace boundsearch

#endif  // BOUNDSEARCH_ESTIMATION_H_
