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

#include "boundsearch/synth.h"

#include <stdexcept>

namespace boundsearch {

void CheckSynthConfig(const SynthConfig& config) {
  for (const FactorColumn& c : config.table) {
    if (!(1 <= c.f1 && c.f1 < c.f2 && c.f2 < c.f3)) {
      throw std::invalid_argument("factor column must satisfy 1 <= f1 < f2 < f3");
    }
  }
  const auto& t = config.time_costs;
  if (!(t[0] >= 0.0 && t[0] < t[1] && t[1] < t[2])) {
    throw std::invalid_argument("time costs must be strictly increasing");
  }
}

int HashColumn(std::int64_t cost, std::int64_t seed) {
  const int h = static_cast<int>((cost + seed) % 9);
  return h == 0 ? 9 : h;
}

Problem SynthEstimators(const WeightedGraph& graph, std::int64_t seed,
                        const SynthConfig& config) {
  CheckSynthConfig(config);
  if (seed < 0) throw std::invalid_argument("seed must be non-negative");

  std::vector<Edge> edges;
  edges.reserve(graph.edges.size());
  for (const WeightedEdge& w : graph.edges) {
    if (w.cost <= 0) {
      throw std::invalid_argument("synthesis requires positive edge costs");
    }
    const FactorColumn& f = config.table[HashColumn(w.cost, seed) - 1];
    const double c = static_cast<double>(w.cost);
    const double top = c * f.f3;
    Edge e;
    e.from = w.from;
    e.to = w.to;
    e.estimators = {
        {c * f.f1, top, config.time_costs[0]},
        {c * f.f2, top, config.time_costs[1]},
        {c * f.f3, top, config.time_costs[2]},
    };
    e.true_cost = top;
    edges.push_back(std::move(e));
  }
  return Problem{EstimatedDigraph(graph.vertex_count, std::move(edges)),
                 graph.start, graph.goals};
}

Problem ExactCostProblem(const WeightedGraph& graph, double time_cost) {
  std::vector<Edge> edges;
  edges.reserve(graph.edges.size());
  for (const WeightedEdge& w : graph.edges) {
    const double c = static_cast<double>(w.cost);
    edges.push_back(Edge{w.from, w.to, {{c, c, time_cost}}, c});
  }
  return Problem{EstimatedDigraph(graph.vertex_count, std::move(edges)),
                 graph.start, graph.goals};
}

}  // namespace boundsearch
