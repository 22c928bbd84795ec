// Copyright 2026 The countkernel Authors
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


#include "countkernel/pipeline.hpp"

#include <gtest/gtest.h>

#include "countkernel/generators.hpp"
#include "countkernel/oracle.hpp"
#include "test_util.hpp"

namespace countkernel {
namespace {

TEST(PipelineTest, Threshold) {
  EXPECT_EQ(chain_threshold(0, 4096), 1u);
  EXPECT_EQ(chain_threshold(3, 4096), 8u);
  EXPECT_EQ(chain_threshold(20, 4096), 4096u);
  EXPECT_EQ(chain_threshold(70, UINT64_MAX), UINT64_MAX);
  EXPECT_THROW(chain_threshold(-1, 4), std::invalid_argument);
}

TEST(PipelineTest, PathNames) {
  EXPECT_EQ(to_string(CountPath::kTriviallyZero), "trivially-zero");
  EXPECT_EQ(to_string(CountPath::kDirectCount), "direct-count");
  EXPECT_EQ(to_string(CountPath::kReduced), "reduced");
}

TEST(PipelineTest, TriviallyZero) {
  const PipelineResult r = count_kernelize(testing::complete_graph(6), 1);
  EXPECT_EQ(r.path, CountPath::kTriviallyZero);
  ASSERT_TRUE(r.count.has_value());
  EXPECT_EQ(r.count->count, 0);
}

TEST(PipelineTest, ForestIsReducedToEmpty) {
  const PipelineResult r = count_kernelize(testing::path_graph(8), 0, {4096, true});
  EXPECT_EQ(r.path, CountPath::kReduced);
  EXPECT_TRUE(r.graph.empty());
  ASSERT_TRUE(r.count.has_value());
  EXPECT_EQ(*r.count, CountPair::of(0, 1));
}

TEST(PipelineTest, LongCycleCountsDirectly) {
  const PipelineResult r = count_kernelize(make_cycle(1025), 1);
  EXPECT_EQ(r.path, CountPath::kDirectCount);
  ASSERT_TRUE(r.count.has_value());
  EXPECT_EQ(*r.count, CountPair::of(1, 1025));
}

TEST(PipelineTest, ShortCycleIsReduced) {
  const PipelineResult r = count_kernelize(make_cycle(8), 3, {4096, true});
  EXPECT_EQ(r.path, CountPath::kReduced);
  EXPECT_EQ(r.k, 6);
  ASSERT_TRUE(r.count.has_value());
  EXPECT_EQ(*r.count, CountPair::of(1, 8));
  EXPECT_EQ(brute_min_fvs(r.graph, r.k).count, 8);
}

TEST(PipelineTest, ReducedWithoutSolveHasNoCount) {
  const PipelineResult r = count_kernelize(make_cycle(8), 3);
  EXPECT_EQ(r.path, CountPath::kReduced);
  EXPECT_FALSE(r.count.has_value());
}

TEST(PipelineTest, BothPathsAgree) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const MultiGraph g = make_random({12, 15, seed, 0.2, 2});
    for (int k = 1; k <= 3; ++k) {
      const PipelineResult direct = count_kernelize(g, k, {0, true});
      const PipelineResult reduced = count_kernelize(g, k, {UINT64_MAX, true});
      const CountPair truth = brute_min_fvs(g, k);
      ASSERT_TRUE(direct.count.has_value());
      ASSERT_TRUE(reduced.count.has_value());
      EXPECT_EQ(direct.count->count, truth.count) << seed << " " << k;
      EXPECT_EQ(reduced.count->count, truth.count) << seed << " " << k;
      if (truth.count > 0) {
        EXPECT_EQ(direct.count->size, truth.size);
        EXPECT_EQ(reduced.count->size, truth.size);
      }
    }
  }
}

TEST(PipelineTest, NegativeParameter) {
  EXPECT_THROW(count_kernelize(make_cycle(3), -1), std::invalid_argument);
}

}  // namespace
}  // namespace countkernel
