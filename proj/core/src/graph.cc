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

#include "boundsearch/graph.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace boundsearch {

EstimatedDigraph::EstimatedDigraph(std::uint32_t vertex_count,
                                   std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    if (e.from.value() >= vertex_count_ || e.to.value() >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++offsets_[e.from.value() + 1];
    max_layer_count_ = std::max(max_layer_count_, e.layer_count());
  }
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    offsets_[v + 1] += offsets_[v];
  }
  adjacency_.resize(edges_.size());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Stable fill keeps declaration order within each vertex.
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    adjacency_[cursor[edges_[i].from.value()]++] = EdgeId(i);
  }
}

std::span<const EdgeId> EstimatedDigraph::out_edges(VertexId v) const {
  const std::uint32_t begin = offsets_[v.value()];
  const std::uint32_t end = offsets_[v.value() + 1];
  return std::span<const EdgeId>(adjacency_).subspan(begin, end - begin);
}

bool Problem::is_goal(VertexId v) const {
  return std::find(goals.begin(), goals.end(), v) != goals.end();
}

void CheckProblem(const Problem& problem) {
  if (!problem.graph.contains(problem.start)) {
    throw std::invalid_argument("start vertex out of range");
  }
  if (problem.goals.empty()) {
    throw std::invalid_argument("goal set is empty");
  }
  for (VertexId g : problem.goals) {
    if (!problem.graph.contains(g)) {
      throw std::invalid_argument("goal vertex out of range");
    }
  }
}

void EdgeBoundState::Fold(const EstimatorSpec& estimator) {
  tightest_lower = std::max(tightest_lower, estimator.lower);
  tightest_upper = std::min(tightest_upper, estimator.upper);
}

Bounds TightestEdgeBounds(const EdgeBoundState& state) {
  if (!state.estimated()) {
    throw std::logic_error("tightest bounds queried on an unestimated edge");
  }
  return {state.tightest_lower, state.tightest_upper};
}

Bounds PathBounds(const Path& path, std::span<const EdgeBoundState> states) {
  Bounds sum{0.0, 0.0};
  for (EdgeId e : path.edges) {
    const Bounds b = TightestEdgeBounds(states[e.value()]);
    sum.lower += b.lower;
    sum.upper += b.upper;
  }
  return sum;
}

double AdmissibilityFactor(double path_upper, double l_star) {
  if (l_star > 0.0) return path_upper / l_star;
  return path_upper > 0.0 ? kInfinity : 1.0;
}

namespace {

std::string Describe(EdgeId id, int layer, const std::string& what) {
  std::ostringstream out;
  out << "edge " << id.value();
  if (layer >= 0) out << " estimator " << layer;
  out << ": " << what;
  return out.str();
}

}  // namespace

ValidationReport ValidateGraph(const EstimatedDigraph& graph) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, EdgeId id, int layer,
                 const std::string& what) {
    report.push_back({kind, id, layer, Describe(id, layer, what)});
  };

  for (std::uint32_t i = 0; i < graph.edge_count(); ++i) {
    const EdgeId id(i);
    const Edge& e = graph.edge(id);
    if (e.estimators.empty()) {
      add(Violation::Kind::kEmptySequence, id, -1, "no estimators");
      continue;
    }
    for (int j = 0; j < e.layer_count(); ++j) {
      const EstimatorSpec& est = e.estimators[j];
      if (!std::isfinite(est.lower) || !std::isfinite(est.upper)) {
        add(Violation::Kind::kNonFiniteBound, id, j, "non-finite bound");
        continue;
      }
      if (est.lower < 0.0) {
        add(Violation::Kind::kNegativeLower, id, j, "negative lower bound");
      }
      if (est.lower > est.upper) {
        add(Violation::Kind::kLowerAboveUpper, id, j, "lower exceeds upper");
      }
      if (!(est.time_cost >= 0.0)) {
        add(Violation::Kind::kNegativeTime, id, j, "negative time cost");
      }
      if (j > 0) {
        const EstimatorSpec& prev = e.estimators[j - 1];
        if (est.lower < prev.lower || est.upper > prev.upper) {
          add(Violation::Kind::kNotNested, id, j,
              "interval not nested in predecessor");
        }
        if (!(est.time_cost > prev.time_cost)) {
          add(Violation::Kind::kTimeNotIncreasing, id, j,
              "time cost not strictly increasing");
        }
      }
      if (e.true_cost &&
          (*e.true_cost < est.lower || *e.true_cost > est.upper)) {
        add(Violation::Kind::kTrueCostOutsideBounds, id, j,
            "true cost outside estimator bounds");
      }
    }
  }
  return report;
}

std::string_view ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kEmptySequence:
      return "empty_sequence";
    case Violation::Kind::kNegativeLower:
      return "negative_lower";
    case Violation::Kind::kLowerAboveUpper:
      return "lower_above_upper";
    case Violation::Kind::kNonFiniteBound:
      return "non_finite_bound";
    case Violation::Kind::kNotNested:
      return "not_nested";
    case Violation::Kind::kTimeNotIncreasing:
      return "time_not_increasing";
    case Violation::Kind::kNegativeTime:
      return "negative_time";
    case Violation::Kind::kTrueCostOutsideBounds:
      return "true_cost_outside_bounds";
  }
  return "unknown";
}

}  // namespace boundsearch
