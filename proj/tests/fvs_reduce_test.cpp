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


#include "countkernel/fvs_reduce.hpp"

#include <gtest/gtest.h>

#include "countkernel/generators.hpp"
#include "countkernel/oracle.hpp"
#include "test_util.hpp"

namespace countkernel {
namespace {

using testing::graph_of;

std::int64_t min_fvs_avoiding(const MultiGraph& g, VertexId f) {
  VertexSet others;
  for (VertexId v : g.vertices()) {
    if (v != f) others.push_back(v);
  }
  std::int64_t best = static_cast<std::int64_t>(others.size());
  for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask >> i & 1u) s.push_back(others[i]);
    }
    if (static_cast<std::int64_t>(s.size()) < best && is_feedback_vertex_set(g, s)) {
      best = static_cast<std::int64_t>(s.size());
    }
  }
  return best;
}

TEST(ReduceTest, R1CapsMultiplicity) {
  MultiGraph g(3);
  g.add_edge(0, 1, 5);
  g.add_edge(1, 2, 3);
  const MultiGraph h = apply_r1(g);
  EXPECT_EQ(h.multiplicity(0, 1), 2u);
  EXPECT_EQ(h.multiplicity(1, 2), 2u);
  EXPECT_EQ(apply_r1(make_cycle(5)), make_cycle(5));
}

TEST(ReduceTest, R2) {
  EXPECT_TRUE(apply_r2(testing::path_graph(5)).empty());
  MultiGraph g = make_cycle(5);
  g.add_vertex();
  g.add_edge(0, 5);
  EXPECT_EQ(apply_r2(g), delete_vertices(g, {5}));
  EXPECT_EQ(apply_r2(g).num_vertices(), 5u);
}

TEST(ReduceTest, R2LeavesMinimumDegreeTwo) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const MultiGraph h = apply_r2(make_random({12, 14, seed, 0.2, 2}));
    for (VertexId v : h.vertices()) EXPECT_GE(h.degree(v), 2u);
  }
}

TEST(ReduceTest, ApproxOnSmallGraphs) {
  EXPECT_TRUE(approx_fvs(testing::path_graph(6)).empty());
  const VertexSet c5 = approx_fvs(make_cycle(5));
  EXPECT_GE(c5.size(), 1u);
  EXPECT_LE(c5.size(), 2u);
  EXPECT_EQ(approx_fvs(graph_of(2, {{0, 1}, {0, 1}}), VertexId{0}), (VertexSet{1}));
}

TEST(ReduceTest, ApproxRatioAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const MultiGraph g = make_random({11, 16, seed, 0.2, 3});
    const VertexSet x = approx_fvs(g);
    ASSERT_TRUE(is_feedback_vertex_set(g, x)) << "seed " << seed;
    const CountPair opt = brute_min_fvs(g, 11);
    EXPECT_LE(static_cast<std::int64_t>(x.size()), kApproxRatio * opt.size) << "seed " << seed;
  }
}

TEST(ReduceTest, ApproxForbiddenVertexRatio) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const MultiGraph g = make_random({10, 15, seed, 0.2, 2});
    for (VertexId f : g.vertices()) {
      const VertexSet y = approx_fvs(g, f);
      ASSERT_FALSE(contains(y, f));
      ASSERT_TRUE(is_feedback_vertex_set(g, y));
      const std::int64_t opt = min_fvs_avoiding(g, f);
      EXPECT_LE(static_cast<std::int64_t>(y.size()), kApproxRatio * opt);
    }
  }
}

TEST(ReduceTest, DegreeReduceValidation) {
  MultiGraph g = make_cycle(4);
  EXPECT_THROW(degree_reduce(g, 1, 9, {0}), GraphError);
  EXPECT_THROW(degree_reduce(g, 1, 0, {0}), GraphError);
  EXPECT_THROW(degree_reduce(g, 1, 0, {}), GraphError);
  MultiGraph triple(2);
  triple.add_edge(0, 1, 3);
  EXPECT_THROW(degree_reduce(triple, 1, 0, {1}), GraphError);
}

TEST(ReduceTest, DegreeReduceWithoutTreesIsIdentity) {
  const MultiGraph g = graph_of(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(degree_reduce(g, 1, 0, {1}), g);
}

TEST(ReduceTest, DegreeReduceKeepsQuota) {
  // v = 0, u = 1, six single-vertex trees each adjacent to both.
  MultiGraph g(8);
  for (VertexId t = 2; t < 8; ++t) {
    g.add_edge(0, t);
    g.add_edge(1, t);
  }
  const MultiGraph h = degree_reduce(g, 1, 0, {1});
  EXPECT_EQ(h.degree(0), 3u);
  EXPECT_EQ(h.neighbors(0), (VertexSet{2, 3, 4}));
  EXPECT_EQ(h.degree(1), 6u);
}

TEST(ReduceTest, DegreeReducePreservesCount) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const MultiGraph g = apply_r1(make_random({12, 18, seed, 0.2, 2}));
    const int k = static_cast<int>(seed % 4);
    for (VertexId v : g.vertices()) {
      const VertexSet y = approx_fvs(g, v);
      const MultiGraph h = degree_reduce(g, k, v, y);
      EXPECT_EQ(brute_min_fvs(h, k).count, brute_min_fvs(g, k).count) << "seed " << seed << " v " << v;
    }
  }
}

TEST(ReduceTest, KernelOnForestAndCycle) {
  const KernelResult forest = kernelize_fvs(testing::path_graph(7), 2);
  EXPECT_FALSE(forest.trivially_zero);
  EXPECT_TRUE(forest.graph.empty());
  EXPECT_EQ(forest.k, 2);

  const KernelResult cycle = kernelize_fvs(make_cycle(9), 1);
  EXPECT_FALSE(cycle.trivially_zero);
  EXPECT_EQ(cycle.graph, make_cycle(9));
  EXPECT_EQ(cycle.k, 1);
}

TEST(ReduceTest, KernelOnK5) {
  const KernelResult r = kernelize_fvs(testing::complete_graph(5), 1);
  if (!r.trivially_zero) EXPECT_EQ(brute_min_fvs(r.graph, r.k).count, 0);
}

TEST(ReduceTest, KernelNegativeParameter) {
  EXPECT_TRUE(kernelize_fvs(make_cycle(3), -1).trivially_zero);
}

TEST(ReduceTest, KernelPreservesCountAndBounds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MultiGraph g = make_random({13, 17, seed, 0.25, 3});
    for (int k = 0; k <= 4; ++k) {
      const CountPair before = brute_min_fvs(g, k);
      const KernelResult r = kernelize_fvs(g, k);
      if (r.trivially_zero) {
        EXPECT_EQ(before.count, 0) << "seed " << seed << " k " << k;
        continue;
      }
      EXPECT_LE(r.k, k);
      EXPECT_EQ(brute_min_fvs(r.graph, r.k).count, before.count) << "seed " << seed << " k " << k;
      const KernelBounds b{kApproxRatio, k};
      EXPECT_LE(static_cast<std::int64_t>(v_neq2(r.graph).size()), b.max_v_neq2());
      EXPECT_LE(static_cast<std::int64_t>(chains(r.graph).size()), b.max_chains());
    }
  }
}

TEST(ReduceTest, KernelIsIdempotentOnCounts) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const MultiGraph g = make_random({12, 16, seed, 0.25, 2});
    const KernelResult once = kernelize_fvs(g, 3);
    if (once.trivially_zero) continue;
    const KernelResult twice = kernelize_fvs(once.graph, once.k);
    const BigCount c = brute_min_fvs(once.graph, once.k).count;
    if (twice.trivially_zero) {
      EXPECT_EQ(c, 0);
    } else {
      EXPECT_EQ(brute_min_fvs(twice.graph, twice.k).count, c);
    }
  }
}

TEST(ReduceTest, BoundsFormula) {
  const KernelBounds b{2, 3};
  EXPECT_EQ(b.max_v_neq2(), 6 + 4 * 9 * 7);
  EXPECT_EQ(b.max_chains(), 6 + 2 * 4 * 9 * 7);
}

}  // namespace
}  // namespace countkernel
