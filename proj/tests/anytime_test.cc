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


#include "boundsearch/anytime.h"

#include <stdexcept>

#include "gtest/gtest.h"
#include "test_support.h"

namespace boundsearch {
namespace {

using testing::ExampleProblem;
using testing::kE01;
using testing::kE02;
using testing::kE14;
using testing::kE24;

struct Row {
  std::vector<EdgeId> path;
  double l_under;
  double l_over;
};

void ExpectLog(const AnytimeResult& r, const std::vector<Row>& want) {
  ASSERT_EQ(r.log.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    SCOPED_TRACE(i);
    EXPECT_EQ(r.log[i].iteration, static_cast<int>(i + 1));
    EXPECT_TRUE(r.log[i].found);
    EXPECT_EQ(r.log[i].path.edges, want[i].path);
    EXPECT_EQ(r.log[i].l_under, want[i].l_under);
    EXPECT_EQ(r.log[i].l_over, want[i].l_over);
  }
}

TEST(AnytimeBeauty, ExampleConvergesInTwoIterations) {
  const Problem p = ExampleProblem();
  EstimationCache cache(p.graph);
  const AnytimeResult r = AnytimeBeauty(p, cache, {.max_iterations = 10});
  ExpectLog(r, {{{kE01, kE14}, 5, 8}, {{kE02, kE24}, 7, 7}});
  EXPECT_TRUE(r.found);
  EXPECT_EQ(r.l_star, 7);
  EXPECT_EQ(r.path.edges, (std::vector<EdgeId>{kE02, kE24}));
  EXPECT_FALSE(r.log[0].opt);
  EXPECT_TRUE(r.log[1].opt);
  EXPECT_FALSE(r.log[1].forced);
  EXPECT_EQ(r.log[0].l_est, 0);
  EXPECT_EQ(r.log[0].l_prune, kInfinity);
  EXPECT_EQ(r.log[1].l_est, 5);
  EXPECT_EQ(r.log[1].l_prune, 8);

  // Iteration 2 reuses every cached estimate and pays only for e02's second
  // estimator.
  const Metrics& second = r.log[1].metrics_delta;
  EXPECT_EQ(second.layer(1), 0);
  EXPECT_EQ(second.layer(2), 1);
  EXPECT_TRUE(cache.invoked(kE02, 2));
  EXPECT_TRUE(cache.invoked(kE14, 2));
  EXPECT_EQ(r.metrics.total_invocations(),
            r.log[0].metrics_delta.total_invocations() + 1);
}

TEST(AnytimeBeauty, ForcedFinalIterationIsOptimal) {
  const Problem p = ExampleProblem();
  EstimationCache cache(p.graph);
  const AnytimeResult r = AnytimeBeauty(p, cache, {.max_iterations = 2});
  ExpectLog(r, {{{kE01, kE14}, 5, 8}, {{kE02, kE24}, 7, 7}});
  EXPECT_TRUE(r.log[1].forced);
  EXPECT_EQ(r.log[1].l_est, 8);
  EXPECT_EQ(r.log[1].l_prune, 8);
  EXPECT_EQ(r.l_star, 7);
}

TEST(AnytimeBeauty, SingleIterationIsPlainBeauty) {
  const Problem p = ExampleProblem();
  EstimationCache cache(p.graph);
  const AnytimeResult r = AnytimeBeauty(p, cache, {.max_iterations = 1});
  ExpectLog(r, {{{kE02, kE24}, 7, 7}});
  EXPECT_TRUE(r.log[0].forced);
  EXPECT_EQ(r.metrics.total_invocations(), 9);
}

TEST(AnytimeBeauty, EpsilonForcesTheNextIteration) {
  const Problem p = ExampleProblem();
  {
    EstimationCache cache(p.graph);
    // 8 / 5 = 1.6 is within 1 + 1.0.
    const AnytimeResult r =
        AnytimeBeauty(p, cache, {.max_iterations = 10, .epsilon = 1.0});
    ASSERT_EQ(r.log.size(), 2u);
    EXPECT_TRUE(r.log[1].forced);
    EXPECT_EQ(r.log[1].l_est, 8);
    EXPECT_EQ(r.l_star, 7);
  }
  {
    EstimationCache cache(p.graph);
    const AnytimeResult r =
        AnytimeBeauty(p, cache, {.max_iterations = 10, .epsilon = 0.5});
    ASSERT_EQ(r.log.size(), 2u);
    EXPECT_FALSE(r.log[1].forced);
  }
}

TEST(AnytimeBeauty, UnreachableGoalLogsOneIteration) {
  const Problem p{EstimatedDigraph(6, testing::ExampleEdges()), VertexId(0),
                  {VertexId(5)}};
  EstimationCache cache(p.graph);
  const AnytimeResult r = AnytimeBeauty(p, cache);
  ASSERT_EQ(r.log.size(), 1u);
  EXPECT_FALSE(r.log[0].found);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.l_star, kInfinity);
}

TEST(AnytimeBeauty, RejectsNonPositiveIterationCap) {
  const Problem p = ExampleProblem();
  EstimationCache cache(p.graph);
  EXPECT_THROW(AnytimeBeauty(p, cache, {.max_iterations = 0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace boundsearch
