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

#include "boundsearch/estimation.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace boundsearch {

std::int64_t Metrics::total_invocations() const {
  return std::accumulate(layer_invocations.begin(), layer_invocations.end(),
                         std::int64_t{0});
}

std::int64_t Metrics::layer(int one_based) const {
  if (one_based < 1 ||
      one_based > static_cast<int>(layer_invocations.size())) {
    return 0;
  }
  return layer_invocations[one_based - 1];
}

Metrics Metrics::operator-(const Metrics& earlier) const {
  Metrics d = *this;
  for (std::size_t i = 0;
       i < std::min(d.layer_invocations.size(),
                    earlier.layer_invocations.size());
       ++i) {
    d.layer_invocations[i] -= earlier.layer_invocations[i];
  }
  d.final_layer_invocations -= earlier.final_layer_invocations;
  d.skipped_layers -= earlier.skipped_layers;
  d.expansions -= earlier.expansions;
  d.evaluations -= earlier.evaluations;
  d.prunings -= earlier.prunings;
  d.estimation_time -= earlier.estimation_time;
  return d;
}

EstimationCache::EstimationCache(const EstimatedDigraph& graph,
                                 EstimationOptions options)
    : graph_(&graph), options_(options), states_(graph.edge_count()) {
  layer_offset_.reserve(graph.edge_count() + 1);
  std::uint32_t offset = 0;
  for (const Edge& e : graph.edges()) {
    layer_offset_.push_back(offset);
    offset += static_cast<std::uint32_t>(e.layer_count());
  }
  layer_offset_.push_back(offset);
  invoked_.assign(offset, 0);
  metrics_.layer_invocations.assign(graph.max_layer_count(), 0);
  metrics_.tau_v = options.tau_v;
}

bool EstimationCache::HasRemaining(EdgeId e) const {
  return states_[e.value()].next_index < graph_->edge(e).layer_count();
}

bool EstimationCache::invoked(EdgeId e, int layer) const {
  if (layer < 1 || layer > graph_->edge(e).layer_count()) return false;
  return invoked_[layer_offset_[e.value()] + layer - 1] != 0;
}

void EstimationCache::Invoke(EdgeId e, int layer) {
  const Edge& edge = graph_->edge(e);
  const EstimatorSpec& est = edge.estimators[layer - 1];
  if (options_.wall_clock_scale > 0.0) {
    std::this_thread::sleep_for(std::chrono::duration<double>(
        est.time_cost * options_.wall_clock_scale));
  }
  invoked_[layer_offset_[e.value()] + layer - 1] = 1;
  EdgeBoundState& st = states_[e.value()];
  st.Fold(est);
  st.next_index = std::max(st.next_index, layer);
  ++metrics_.layer_invocations[layer - 1];
  if (layer == edge.layer_count()) ++metrics_.final_layer_invocations;
  metrics_.estimation_time += est.time_cost;
  invocations_.push_back({e, layer, phase_, run_});
}

EstimationCache::Applied EstimationCache::ApplyNext(EdgeId e) {
  if (!HasRemaining(e)) {
    throw std::logic_error("ApplyNext on an exhausted estimator sequence");
  }
  const int layer = states_[e.value()].next_index + 1;
  Invoke(e, layer);
  return {states_[e.value()].tightest_lower, layer};
}

double EstimationCache::ApplyFinal(EdgeId e) {
  if (!HasRemaining(e)) {
    throw std::logic_error("ApplyFinal on an exhausted estimator sequence");
  }
  return ResolveFinal(e);
}

int EstimationCache::Resolve(EdgeId e, int layer) {
  if (invoked(e, layer)) return layer;
  const EdgeBoundState& st = states_[e.value()];
  if (layer <= st.next_index) {
    // Jumped over by ApplyFinal; the last layer is known and dominates it.
    return st.next_index;
  }
  if (layer != st.next_index + 1) {
    throw std::logic_error("estimator layers must be resolved in order");
  }
  Invoke(e, layer);
  return layer;
}

double EstimationCache::ResolveFinal(EdgeId e) {
  const int k = graph_->edge(e).layer_count();
  if (!invoked(e, k)) {
    metrics_.skipped_layers += k - 1 - states_[e.value()].next_index;
    Invoke(e, k);
  }
  return graph_->edge(e).estimators[k - 1].lower;
}

EstimationSession::EstimationSession(EstimationCache& cache)
    : cache_(&cache),
      cursor_(cache.graph().edge_count(), 0),
      lower_(cache.graph().edge_count(), 0.0) {}

EstimationSession EstimationSession::FromCacheState(EstimationCache& cache) {
  EstimationSession session(cache);
  for (std::size_t i = 0; i < session.cursor_.size(); ++i) {
    const EdgeBoundState& st = cache.states()[i];
    session.cursor_[i] = st.next_index;
    session.lower_[i] = st.tightest_lower;
  }
  return session;
}

bool EstimationSession::HasRemaining(EdgeId e) const {
  return cursor_[e.value()] < cache_->graph().edge(e).layer_count();
}

double EstimationSession::ApplyNext(EdgeId e) {
  if (!HasRemaining(e)) {
    throw std::logic_error("ApplyNext on an exhausted estimator sequence");
  }
  const int used = cache_->Resolve(e, cursor_[e.value()] + 1);
  cursor_[e.value()] = used;
  const double l = cache_->graph().edge(e).estimators[used - 1].lower;
  lower_[e.value()] = std::max(lower_[e.value()], l);
  return lower_[e.value()];
}

double EstimationSession::ApplyFinal(EdgeId e) {
  if (!HasRemaining(e)) {
    throw std::logic_error("ApplyFinal on an exhausted estimator sequence");
  }
  const double l = cache_->ResolveFinal(e);
  cursor_[e.value()] = cache_->graph().edge(e).layer_count();
  lower_[e.value()] = std::max(lower_[e.value()], l);
  return lower_[e.value()];
}

}  // namespace boundsearch
