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

// Anytime search: repeated Beauty() runs over one shared estimation cache,
// each run using the previous bracket [l_under, l_over] as (l_est, l_prune),
// until a run proves its path optimal.

#ifndef BOUNDSEARCH_ANYTIME_H_
#define BOUNDSEARCH_ANYTIME_H_

#include <chrono>
#include <optional>
#include <vector>

#include "boundsearch/estimation.h"
#include "boundsearch/graph.h"
#include "boundsearch/search.h"

namespace boundsearch {

struct AnytimeOptions {
  // Number of Beauty() calls allowed, including a forced final one. When the
  // cap is reached without convergence, the last call runs with
  // l_est = l_prune = best l_over, which always yields an optimal path.
  int max_iterations = 10;
  // When set, the next call is forced (and final) as soon as
  // l_over / l_under <= 1 + epsilon.
  std::optional<double> epsilon;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct IterationEntry {
  int iteration = 0;  // 1-based
  bool found = false;
  Path path;
  double l_under = kInfinity;
  // Best l_over seen up to and including this iteration.
  double l_over = kInfinity;
  bool opt = false;
  bool forced = false;
  double l_est = 0.0;
  double l_prune = kInfinity;
  Metrics metrics_delta;
};

struct AnytimeResult {
  bool found = false;
  Path path;
  double l_star = kInfinity;
  std::vector<IterationEntry> log;
  // Cumulative counters over all iterations.
  Metrics metrics;
};

// Throws std::invalid_argument when max_iterations < 1.
AnytimeResult AnytimeBeauty(const Problem& problem, EstimationCache& cache,
                            const AnytimeOptions& options = {});

}  // namespace boundsearch

#endif  // BOUNDSEARCH_ANYTIME_H_
