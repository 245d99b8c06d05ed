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

#ifndef BOUNDSEARCH_GENERATORS_H_
#define BOUNDSEARCH_GENERATORS_H_

#include <cstdint>

#include "boundsearch/synth.h"

namespace boundsearch {

// Each pair u < v becomes an edge u->v with probability `edge_prob`, so the
// graph is acyclic. Start is vertex 0, the single goal is vertex n-1.
struct RandomGraphSpec {
  std::uint32_t n = 2;
  double edge_prob = 0.5;
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 1;
  std::uint64_t rng_seed = 0;
};

// Every cell has a directed edge to each of its 4-neighbours, drawn with an
// independent cost. Start is the top-left cell, goal the bottom-right one.
struct GridGraphSpec {
  std::uint32_t rows = 1;
  std::uint32_t cols = 1;
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 1;
  std::uint64_t rng_seed = 0;
};

// Both throw std::invalid_argument on out-of-range parameters. Output is a
// pure function of the spec.
WeightedGraph GenerateRandomGraph(const RandomGraphSpec& spec);
WeightedGraph GenerateGridGraph(const GridGraphSpec& spec);

}  // namespace boundsearch

#endif  // BOUNDSEARCH_GENERATORS_H_
