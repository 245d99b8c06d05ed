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

// Turns an ordinary integer-weighted digraph into an estimated one with three
// estimators per edge. Each edge picks one of nine factor columns (f1, f2, f3)
// from (cost + seed) mod 9, and its lower bounds become cost*f1, cost*f2 and
// cost*f3. Equal (cost, seed) pairs always get identical estimators.

#ifndef BOUNDSEARCH_SYNTH_H_
#define BOUNDSEARCH_SYNTH_H_

#include <array>
#include <cstdint>
#include <vector>

#include "boundsearch/graph.h"

namespace boundsearch {

struct WeightedEdge {
  VertexId from;
  VertexId to;
  std::int64_t cost = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Classical integer-weighted digraph with a start and goal set.
struct WeightedGraph {
  std::uint32_t vertex_count = 0;
  VertexId start;
  std::vector<VertexId> goals;
  std::vector<WeightedEdge> edges;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

struct FactorColumn {
  int f1 = 1;
  int f2 = 2;
  int f3 = 3;
};

// Columns are labelled 1..9.
inline constexpr std::array<FactorColumn, 9> kDefaultFactorTable = {{
    {1, 2, 3},
    {2, 3, 4},
    {3, 4, 5},
    {1, 3, 4},
    {2, 4, 5},
    {3, 5, 6},
    {1, 4, 5},
    {2, 5, 6},
    {3, 6, 7},
}};

struct SynthConfig {
  std::array<FactorColumn, 9> table = kDefaultFactorTable;
  // Simulated cost of the first, second and third estimator.
  std::array<double, 3> time_costs = {1.0, 10.0, 100.0};
};

// Throws std::invalid_argument unless every column has 1 <= f1 < f2 < f3 and
// the time costs are non-negative and strictly increasing.
void CheckSynthConfig(const SynthConfig& config);

// Column label (1..9) chosen for an edge. The residue h = (cost + seed) mod 9
// selects column h, with residue 0 selecting column 9.
int HashColumn(std::int64_t cost, std::int64_t seed);

// Throws std::invalid_argument on a non-positive edge cost or negative seed.
// Every synthesized edge gets uppers and true_cost equal to cost * f3.
Problem SynthEstimators(const WeightedGraph& graph, std::int64_t seed,
                        const SynthConfig& config = {});

// The single-estimator exact-cost embedding (lower == upper == cost).
Problem ExactCostProblem(const WeightedGraph& graph, double time_cost = 1.0);

}  // namespace boundsearch

#endif  // BOUNDSEARCH_SYNTH_H_
