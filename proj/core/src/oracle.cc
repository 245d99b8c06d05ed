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

#include "boundsearch/oracle.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace boundsearch {
namespace {

// Plain Dijkstra on an explicit edge-weight vector.
double ShortestToGoals(const Problem& problem,
                       const std::vector<double>& weight) {
  const EstimatedDigraph& graph = problem.graph;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(
      graph.vertex_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edges()[i];
    adj[e.from.value()].emplace_back(e.to.value(), weight[i]);
  }
  std::vector<double> dist(graph.vertex_count(), kInfinity);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[problem.start.value()] = 0.0;
  pq.emplace(0.0, problem.start.value());
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        pq.emplace(dist[v], v);
      }
    }
  }
  double best = kInfinity;
  for (VertexId g : problem.goals) best = std::min(best, dist[g.value()]);
  return best;
}

}  // namespace

std::vector<Bounds> FullEstimate(const EstimatedDigraph& graph) {
  std::vector<Bounds> out;
  out.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    Bounds b{0.0, kInfinity};
    for (const EstimatorSpec& est : e.estimators) {
      b.lower = std::max(b.lower, est.lower);
      b.upper = std::min(b.upper, est.upper);
    }
    out.push_back(b);
  }
  return out;
}

double OracleLStar(const Problem& problem) {
  CheckProblem(problem);
  std::vector<double> weight;
  for (const Bounds& b : FullEstimate(problem.graph)) weight.push_back(b.lower);
  return ShortestToGoals(problem, weight);
}

double OracleEnumerate(const Problem& problem, int max_edges) {
  CheckProblem(problem);
  const EstimatedDigraph& graph = problem.graph;
  if (static_cast<int>(graph.edge_count()) > max_edges) {
    throw std::invalid_argument("graph too large for path enumeration");
  }
  const std::vector<Bounds> full = FullEstimate(graph);
  std::vector<bool> on_path(graph.vertex_count(), false);
  double best = kInfinity;

  // Depth-first over simple paths. Lower bounds are non-negative, so a
  // prefix already at least as long as the best complete path is abandoned.
  std::function<void(VertexId, double)> visit = [&](VertexId v, double cost) {
    if (cost >= best) return;
    if (problem.is_goal(v)) {
      best = cost;
      return;
    }
    on_path[v.value()] = true;
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
      const Edge& e = graph.edges()[i];
      if (e.from == v && !on_path[e.to.value()]) {
        visit(e.to, cost + full[i].lower);
      }
    }
    on_path[v.value()] = false;
  };
  visit(problem.start, 0.0);
  return best;
}

double OracleCStar(const Problem& problem) {
  CheckProblem(problem);
  std::vector<double> weight;
  for (const Edge& e : problem.graph.edges()) {
    if (!e.true_cost) {
      throw std::invalid_argument("edge without true_cost");
    }
    weight.push_back(*e.true_cost);
  }
  return ShortestToGoals(problem, weight);
}

}  // namespace boundsearch
