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

#include "boundsearch/search.h"

#include <algorithm>
#include <cassert>
#include <queue>

namespace boundsearch {
namespace {

// Min-queue on (g_l, insertion sequence). A vertex whose key improves gets a
// fresh entry; the old one is skipped on pop because its sequence number no
// longer matches the vertex's live entry.
class OpenList {
 public:
  struct Entry {
    double g_l;
    std::uint64_t seq;
    VertexId vertex;
  };

  std::uint64_t Push(VertexId v, double g_l) {
    heap_.push({g_l, next_seq_, v});
    return next_seq_++;
  }

  bool empty() const { return heap_.empty(); }

  Entry Pop() {
    Entry top = heap_.top();
    heap_.pop();
    return top;
  }

 private:
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.g_l != b.g_l) return a.g_l > b.g_l;
      return a.seq > b.seq;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

enum class NodeStatus : std::uint8_t { kNew, kOpen, kClosed };

enum class EdgePolicy { kLazy, kFull };

SearchResult RunBestFirst(const Problem& problem, EstimationCache& cache,
                          const SearchOptions& options, EdgePolicy policy) {
  CheckProblem(problem);
  const EstimatedDigraph& graph = problem.graph;
  if (&cache.graph() != &graph) {
    throw std::logic_error("estimation cache built for a different graph");
  }

  const Metrics before = cache.SnapshotMetrics();
  cache.BeginRun();
  cache.set_phase(Phase::kSearch);
  EstimationSession session(cache);

  const std::uint32_t n = graph.vertex_count();
  std::vector<double> g_l(n, kInfinity);
  std::vector<NodeStatus> status(n, NodeStatus::kNew);
  std::vector<std::uint64_t> live_seq(n, 0);
  ParentTable parents(n);
  OpenList open;

  SearchResult result;
  const double l_est = policy == EdgePolicy::kLazy ? options.l_est : kInfinity;
  const double l_prune =
      policy == EdgePolicy::kLazy ? options.l_prune : kInfinity;

  g_l[problem.start.value()] = 0.0;
  status[problem.start.value()] = NodeStatus::kOpen;
  live_seq[problem.start.value()] = open.Push(problem.start, 0.0);

  std::uint64_t pops = 0;
  while (!open.empty()) {
    const OpenList::Entry entry = open.Pop();
    const std::uint32_t n_idx = entry.vertex.value();
    if (status[n_idx] != NodeStatus::kOpen || entry.seq != live_seq[n_idx]) {
      continue;
    }
    if (options.deadline && (++pops & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > *options.deadline) {
      throw SearchTimeout();
    }
    if (options.record_pops) result.pops.push_back({entry.vertex, entry.g_l});

    if (problem.is_goal(entry.vertex)) {
      result.found = true;
      result.path = Trace(graph, parents, entry.vertex);
      cache.set_phase(Phase::kPostSearch);
      const PostSearchResult ps =
          BeautyPostSearch(result.path, g_l[n_idx], session);
      cache.set_phase(Phase::kSearch);
      result.opt = ps.opt;
      result.l_under = ps.l_under;
      result.l_over = ps.l_over;
      result.metrics = cache.SnapshotMetrics() - before;
      return result;
    }

    status[n_idx] = NodeStatus::kClosed;
    cache.RecordExpansion();
    const double g_n = g_l[n_idx];

    for (EdgeId e : graph.out_edges(entry.vertex)) {
      cache.RecordEvaluation();
      const std::uint32_t s = graph.edge(e).to.value();
      double tentative = g_n;
      if (policy == EdgePolicy::kFull) {
        while (session.HasRemaining(e)) tentative = g_n + session.ApplyNext(e);
      } else {
        while (tentative < g_l[s] && session.HasRemaining(e)) {
          tentative = g_n + session.ApplyNext(e);
          if (tentative > l_est) break;
        }
      }
      if (tentative < g_l[s]) {
        if (tentative > l_prune) {
          cache.RecordPruning();
          continue;
        }
        // Keys popped so far never exceed g_n, so a closed vertex cannot be
        // improved with non-negative lower bounds.
        assert(status[s] != NodeStatus::kClosed);
        g_l[s] = tentative;
        parents[s] = e;
        status[s] = NodeStatus::kOpen;
        live_seq[s] = open.Push(VertexId(s), tentative);
      }
    }
  }

  result.metrics = cache.SnapshotMetrics() - before;
  return result;
}

}  // namespace

SearchResult Beauty(const Problem& problem, EstimationCache& cache,
                    const SearchOptions& options) {
  return RunBestFirst(problem, cache, options, EdgePolicy::kLazy);
}

SearchResult EiUcs(const Problem& problem, EstimationCache& cache,
                   const SearchOptions& options) {
  return RunBestFirst(problem, cache, options, EdgePolicy::kFull);
}

PostSearchResult BeautyPostSearch(const Path& path, double l_pi,
                                  EstimationSession& session) {
  PostSearchResult out;
  out.l_under = l_pi;
  double bound = l_pi;
  for (EdgeId e : path.edges) {
    if (!session.HasRemaining(e)) continue;
    const double previous = session.lower(e);
    bound += session.ApplyFinal(e) - previous;
  }
  if (bound > out.l_under) out.opt = false;
  out.l_over = bound;
  return out;
}

PostSearchResult BeautyPostSearch(const Path& path, double l_pi,
                                  EstimationCache& cache) {
  EstimationSession session = EstimationSession::FromCacheState(cache);
  return BeautyPostSearch(path, l_pi, session);
}

Path Trace(const EstimatedDigraph& graph, const ParentTable& parents,
           VertexId node) {
  Path path;
  path.terminal = node;
  VertexId v = node;
  while (parents[v.value()]) {
    const EdgeId e = *parents[v.value()];
    path.edges.push_back(e);
    v = graph.edge(e).from;
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

}  // namespace boundsearch
