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

#include "boundsearch/anytime.h"

#include <stdexcept>

namespace boundsearch {

AnytimeResult AnytimeBeauty(const Problem& problem, EstimationCache& cache,
                            const AnytimeOptions& options) {
  if (options.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }
  const Metrics start = cache.SnapshotMetrics();

  AnytimeResult result;
  double l_under = 0.0;
  double l_over = kInfinity;
  bool force_next = false;

  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    const bool forced = force_next || iteration == options.max_iterations;
    SearchOptions search;
    search.l_est = forced ? l_over : l_under;
    search.l_prune = l_over;
    search.deadline = options.deadline;

    SearchResult run = Beauty(problem, cache, search);

    IterationEntry entry;
    entry.iteration = iteration;
    entry.forced = forced;
    entry.l_est = search.l_est;
    entry.l_prune = search.l_prune;
    entry.metrics_delta = run.metrics;
    if (!run.found) {
      result.log.push_back(std::move(entry));
      result.metrics = cache.SnapshotMetrics() - start;
      return result;
    }

    l_under = run.l_under;
    if (run.l_over < l_over) l_over = run.l_over;
    entry.found = true;
    entry.path = run.path;
    entry.l_under = l_under;
    entry.l_over = l_over;
    entry.opt = run.opt;
    result.log.push_back(entry);

    result.found = true;
    result.path = std::move(run.path);
    result.l_star = l_over;
    if (run.opt || forced) break;

    if (options.epsilon && l_under > 0.0 &&
        l_over / l_under <= 1.0 + *options.epsilon) {
      force_next = true;
    }
  }

  result.metrics = cache.SnapshotMetrics() - start;
  return result;
}

}  // namespace boundsearch
