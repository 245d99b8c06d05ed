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

// Ground truth for tests and the benchmark harness. These routines read the
// estimator tables directly and share no code with the search module.

#ifndef BOUNDSEARCH_ORACLE_H_
#define BOUNDSEARCH_ORACLE_H_

#include <vector>

#include "boundsearch/graph.h"

namespace boundsearch {

// Tightest bounds of every edge with all of its estimators applied.
std::vector<Bounds> FullEstimate(const EstimatedDigraph& graph);

// L*: shortest path from the start to any goal under fully estimated lower
// bounds (Dijkstra). +inf when no goal is reachable.
double OracleLStar(const Problem& problem);

// L* by exhaustive enumeration of simple paths. Throws std::invalid_argument
// if the graph has more than `max_edges` edges.
double OracleEnumerate(const Problem& problem, int max_edges = 64);

// C*: shortest path under true costs. Throws std::invalid_argument if an
// edge lacks true_cost.
double OracleCStar(const Problem& problem);

}  // namespace boundsearch

#endif  // BOUNDSEARCH_ORACLE_H_
