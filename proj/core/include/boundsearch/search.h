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

// Best-first search over estimated digraphs, ordered by accumulated lower
// bound g_l.
//
// Beauty() estimates each generated edge only as far as needed: estimators
// are applied in order while the successor's tentative lower bound still
// beats its best known value. Two thresholds refine this:
//
//   l_est    once a tentative bound exceeds it, stop after the current
//            estimator (at least one estimator is always applied).
//   l_prune  successors whose tentative bound exceeds it are not inserted.
//
// When a goal is popped, the solution path's edges are fully estimated
// (BeautyPostSearch). The run reports the popped key as l_under and the fully
// estimated path bound as l_over; the path is proven optimal when they agree.
//
// EiUcs() is the estimation-time-indifferent baseline: the same search, but
// every generated edge is fully estimated right away.

#ifndef BOUNDSEARCH_SEARCH_H_
#define BOUNDSEARCH_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "boundsearch/estimation.h"
#include "boundsearch/graph.h"

namespace boundsearch {

// Thrown when a run passes SearchOptions::deadline.
class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout() : std::runtime_error("search deadline exceeded") {}
};

struct PopEvent {
  VertexId vertex;
  double g_l;

  friend bool operator==(const PopEvent&, const PopEvent&) = default;
};

struct SearchOptions {
  double l_est = kInfinity;
  double l_prune = kInfinity;
  // Records every live OPEN pop (vertex, key) into SearchResult::pops.
  bool record_pops = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchResult {
  // `found` distinguishes "goal is the start vertex" (empty path, found)
  // from an exhausted OPEN list (empty path, not found).
  bool found = false;
  Path path;
  bool opt = false;
  double l_under = kInfinity;
  double l_over = kInfinity;
  // Counters accrued by this run only.
  Metrics metrics;
  std::vector<PopEvent> pops;
};

SearchResult Beauty(const Problem& problem, EstimationCache& cache,
                    const SearchOptions& options = {});

SearchResult EiUcs(const Problem& problem, EstimationCache& cache,
                   const SearchOptions& options = {});

struct PostSearchResult {
  bool opt = true;
  double l_under = 0.0;
  double l_over = 0.0;

  friend bool operator==(const PostSearchResult&,
                         const PostSearchResult&) = default;
};

// Fully estimates every path edge the session has not yet exhausted, jumping
// straight to each edge's last estimator, and folds the improvement into the
// path bound `l_pi`. `l_pi` must equal the sum of the session's lower bounds
// over the path.
PostSearchResult BeautyPostSearch(const Path& path, double l_pi,
                                  EstimationSession& session);

// Convenience form that views the cache's current per-edge state as the
// run's state.
PostSearchResult BeautyPostSearch(const Path& path, double l_pi,
                                  EstimationCache& cache);

// Search-node back-pointers: parents[v] is the edge through which v's best
// known path arrives, or nullopt for the start and unreached vertices.
using ParentTable = std::vector<std::optional<EdgeId>>;

// Follows back-pointers from `node` to the first vertex without a parent.
Path Trace(const EstimatedDigraph& graph, const ParentTable& parents,
           VertexId node);

}  // namespace boundsearch

#endif  // BOUNDSEARCH_SEARCH_H_
