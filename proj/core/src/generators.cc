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

#include "boundsearch/generators.h"

#include <random>
#include <stdexcept>

namespace boundsearch {
namespace {

void CheckCostRange(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("cost range must satisfy 1 <= min <= max");
  }
}

}  // namespace

WeightedGraph GenerateRandomGraph(const RandomGraphSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("random graph needs n >= 2");
  if (!(spec.edge_prob > 0.0 && spec.edge_prob <= 1.0)) {
    throw std::invalid_argument("edge probability must be in (0, 1]");
  }
  CheckCostRange(spec.cost_min, spec.cost_max);

  std::mt19937_64 rng(spec.rng_seed);
  std::bernoulli_distribution keep(spec.edge_prob);
  std::uniform_int_distribution<std::int64_t> cost(spec.cost_min,
                                                   spec.cost_max);
  WeightedGraph g;
  g.vertex_count = spec.n;
  g.start = VertexId(0);
  g.goals = {VertexId(spec.n - 1)};
  for (std::uint32_t u = 0; u < spec.n; ++u) {
    for (std::uint32_t v = u + 1; v < spec.n; ++v) {
      if (keep(rng)) g.edges.push_back({VertexId(u), VertexId(v), cost(rng)});
    }
  }
  return g;
}

WeightedGraph GenerateGridGraph(const GridGraphSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) {
    throw std::invalid_argument("grid needs at least one row and column");
  }
  CheckCostRange(spec.cost_min, spec.cost_max);

  std::mt19937_64 rng(spec.rng_seed);
  std::uniform_int_distribution<std::int64_t> cost(spec.cost_min,
                                                   spec.cost_max);
  auto id = [&](std::uint32_t r, std::uint32_t c) {
    return VertexId(r * spec.cols + c);
  };
  WeightedGraph g;
  g.vertex_count = spec.rows * spec.cols;
  g.start = id(0, 0);
  g.goals = {id(spec.rows - 1, spec.cols - 1)};
  constexpr int kDr[] = {0, 1, 0, -1};
  constexpr int kDc[] = {1, 0, -1, 0};
  for (std::uint32_t r = 0; r < spec.rows; ++r) {
    for (std::uint32_t c = 0; c < spec.cols; ++c) {
      for (int d = 0; d < 4; ++d) {
        const std::int64_t nr = static_cast<std::int64_t>(r) + kDr[d];
        const std::int64_t nc = static_cast<std::int64_t>(c) + kDc[d];
        if (nr < 0 || nc < 0 || nr >= spec.rows || nc >= spec.cols) continue;
        g.edges.push_back({id(r, c),
                           id(static_cast<std::uint32_t>(nr),
                              static_cast<std::uint32_t>(nc)),
                           cost(rng)});
      }
    }
  }
  return g;
}

}  // namespace boundsearch
