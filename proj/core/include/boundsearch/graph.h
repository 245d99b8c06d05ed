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

// Estimated weighted digraphs: every edge carries an ordered sequence of
// bound estimators instead of a scalar weight. The true cost of an edge is
// unknown to the solvers; each estimator returns an interval [lower, upper]
// containing it, and later estimators are slower but at least as tight.

#ifndef BOUNDSEARCH_GRAPH_H_
#define BOUNDSEARCH_GRAPH_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boundsearch {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Thin index wrapper so vertex and edge ids cannot be mixed up.
template <typename Tag>
class StrongIndex {
 public:
  constexpr StrongIndex() = default;
  constexpr explicit StrongIndex(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr auto operator<=>(StrongIndex, StrongIndex) = default;

 private:
  std::uint32_t value_ = 0;
};

using VertexId = StrongIndex<struct VertexIdTag>;
using EdgeId = StrongIndex<struct EdgeIdTag>;

// One bound-estimation procedure for an edge. `time_cost` is the simulated
// run-time charged each time the procedure is invoked.
struct EstimatorSpec {
  double lower = 0.0;
  double upper = 0.0;
  double time_cost = 0.0;

  friend bool operator==(const EstimatorSpec&, const EstimatorSpec&) = default;
};

// Estimators of one edge, ordered by increasing running time.
using EstimatorSequence = std::vector<EstimatorSpec>;

struct Edge {
  VertexId from;
  VertexId to;
  EstimatorSequence estimators;
  // Test-only metadata; never read by the search algorithms.
  std::optional<double> true_cost;

  int layer_count() const { return static_cast<int>(estimators.size()); }
};

// Immutable after construction. Parallel edges and self-loops are allowed.
// Out-edges of a vertex are enumerated in declaration order.
class EstimatedDigraph {
 public:
  EstimatedDigraph() = default;
  EstimatedDigraph(std::uint32_t vertex_count, std::vector<Edge> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_[id.value()]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(VertexId v) const;

  bool contains(VertexId v) const { return v.value() < vertex_count_; }

  // Largest k(e) over all edges; 0 for an edgeless graph.
  int max_layer_count() const { return max_layer_count_; }

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency: out_edges(v) = adjacency_[offsets_[v] .. offsets_[v+1]).
  std::vector<std::uint32_t> offsets_;
  std::vector<EdgeId> adjacency_;
  int max_layer_count_ = 0;
};

// A start vertex and a non-empty set of goal vertices over a graph.
struct Problem {
  EstimatedDigraph graph;
  VertexId start;
  std::vector<VertexId> goals;

  bool is_goal(VertexId v) const;
};

// Throws std::invalid_argument when start or a goal is out of range, or when
// the goal set is empty.
void CheckProblem(const Problem& problem);

// Per-edge record of the tightest bounds known so far. `next_index` counts
// how far into the estimator sequence the record has advanced; 0 means the
// edge is unestimated and carries only the vacuous bounds (0, +inf).
struct EdgeBoundState {
  double tightest_lower = 0.0;
  double tightest_upper = kInfinity;
  int next_index = 0;

  bool estimated() const { return next_index > 0; }

  // Folds a newly applied estimator into the record (max lower, min upper).
  void Fold(const EstimatorSpec& estimator);
};

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Returns (max applied lower, min applied upper). Throws std::logic_error if
// no estimator has been applied to the edge yet.
Bounds TightestEdgeBounds(const EdgeBoundState& state);

struct Path {
  std::vector<EdgeId> edges;
  VertexId terminal;

  bool empty() const { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Component-wise sum of the tightest bounds of the path's edges. `states` is
// indexed by edge id. Throws std::logic_error on an unestimated edge.
Bounds PathBounds(const Path& path, std::span<const EdgeBoundState> states);

// Suboptimality factor B certified for a path whose upper bound is
// `path_upper`, given the optimal tightest lower bound `l_star`. Returns
// +inf when no finite factor can be certified (l_star == 0, path_upper > 0)
// and 1 when both are zero.
double AdmissibilityFactor(double path_upper, double l_star);

struct Violation {
  enum class Kind {
    kEmptySequence,
    kNegativeLower,
    kLowerAboveUpper,
    kNonFiniteBound,
    kNotNested,
    kTimeNotIncreasing,
    kNegativeTime,
    kTrueCostOutsideBounds,
  };
  Kind kind;
  EdgeId edge;
  // Estimator index (0-based) the violation was detected at, when relevant.
  int layer = -1;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

// Lists every edge violating the estimator nesting, ordering, or true-cost
// sandwich invariants. Never throws.
ValidationReport ValidateGraph(const EstimatedDigraph& graph);

std::string_view ViolationKindName(Violation::Kind kind);

}  // namespace boundsearch

template <typename Tag>
struct std::hash<boundsearch::StrongIndex<Tag>> {
  std::size_t operator()(boundsearch::StrongIndex<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};

#endif  // BOUNDSEARCH_GRAPH_H_
