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


#include "countkernel/ds_gadget.hpp"

#include <gtest/gtest.h>

#include "countkernel/generators.hpp"
#include "countkernel/oracle.hpp"
#include "test_util.hpp"

namespace countkernel {
namespace {

CountPair ds_truth(const MultiGraph& g, int k) {
  return g.num_vertices() <= kBruteForceMaxVertices ? brute_min_ds(g, k) : branching_min_ds(g, k);
}

WideDiamond largest_diamond(const MultiGraph& g) {
  WideDiamond best;
  for (const WideDiamond& d : find_wide_diamonds(g)) {
    if (d.members.size() > best.members.size()) best = d;
  }
  return best;
}

TEST(DiamondTest, FindOnC4) {
  const std::vector<WideDiamond> ds = find_wide_diamonds(make_cycle(4));
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0], (WideDiamond{{0, 2}, 1, 3}));
  EXPECT_EQ(ds[1], (WideDiamond{{1, 3}, 0, 2}));
}

TEST(DiamondTest, FindOnK4AndHost) {
  EXPECT_TRUE(find_wide_diamonds(testing::complete_graph(4)).empty());
  const std::vector<WideDiamond> ds = find_wide_diamonds(make_diamond_host(5));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0], (WideDiamond{{2, 3, 4, 5, 6}, 0, 1}));
}

TEST(DiamondTest, RejectsMultigraph) {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  EXPECT_THROW(find_wide_diamonds(g), GraphError);
}

TEST(DiamondTest, SmallDiamondUnchanged) {
  const MultiGraph g = make_diamond_host(4);
  const GadgetResult r = replace_wide_diamond(g, largest_diamond(g), 3);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.k, 3);
}

TEST(DiamondTest, SevenMembers) {
  const MultiGraph g = make_diamond_host(7);
  const GadgetResult r = replace_wide_diamond(g, largest_diamond(g), 2);
  EXPECT_EQ(r.k, 4);
  EXPECT_EQ(r.replacement.size(), 11u);
  EXPECT_EQ(r.graph.num_vertices(), 2u + 11);
  EXPECT_EQ(delete_vertices(r.graph, r.replacement), delete_vertices(g, largest_diamond(g).members));
}

TEST(DiamondTest, TenMembers) {
  const MultiGraph g = make_diamond_host(10);
  const GadgetResult r = replace_wide_diamond(g, largest_diamond(g), 2);
  EXPECT_EQ(r.k, 5);
  EXPECT_EQ(ds_truth(r.graph, r.k).count, ds_truth(g, 2).count);
}

TEST(DiamondTest, Validation) {
  const MultiGraph g = make_diamond_host(5);
  EXPECT_THROW(replace_wide_diamond(g, WideDiamond{{2, 3}, 0, 0}, 2), GraphError);
  EXPECT_THROW(replace_wide_diamond(g, WideDiamond{{}, 0, 1}, 2), GraphError);
  EXPECT_THROW(replace_wide_diamond(g, WideDiamond{{0, 2}, 0, 1}, 2), GraphError);
  EXPECT_THROW(replace_wide_diamond(g, WideDiamond{{2, 3}, 0, 4}, 2), GraphError);
}

TEST(DiamondTest, FiveMemberHost) {
  const MultiGraph g = make_diamond_host(5);
  EXPECT_EQ(brute_min_ds(g, 2), CountPair::of(2, 11));
  const GadgetResult r = replace_wide_diamond(g, largest_diamond(g), 2);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(brute_min_ds(r.graph, r.k), CountPair::of(3, 11));
}

TEST(DiamondTest, ObservationCheck) {
  const MultiGraph g = make_diamond_host(5);
  const WideDiamond d = largest_diamond(g);
  EXPECT_TRUE(diamond_observation_check(g, d, {0, 2}).empty());
  EXPECT_EQ(diamond_observation_check(g, d, {2, 3}),
            (std::vector<DiamondProperty>{DiamondProperty::kEndpointHit, DiamondProperty::kAtMostOneMember}));
  EXPECT_EQ(diamond_observation_check(g, d, {0, 1, 2}),
            (std::vector<DiamondProperty>{DiamondProperty::kBothEndpointsNoMember}));
  for (const VertexSet& x : enumerate_min_ds(g, 2)) {
    EXPECT_TRUE(diamond_observation_check(g, d, x).empty());
  }
  EXPECT_EQ(to_string(DiamondProperty::kAtMostOneMember), "at-most-one-member");
}

MultiGraph host_with_extras(std::size_t s, std::uint64_t seed, std::size_t extras) {
  MultiGraph g = make_diamond_host(s);
  Lcg rng(seed);
  VertexSet anchors{0, 1};
  for (std::size_t i = 0; i < extras; ++i) {
    const VertexId x = g.add_vertex();
    g.add_edge(x, anchors[rng.below(static_cast<std::uint32_t>(anchors.size()))]);
    if (rng.below(2) == 0) {
      const VertexId y = anchors[rng.below(static_cast<std::uint32_t>(anchors.size()))];
      if (!g.has_edge(x, y)) g.add_edge(x, y);
    }
    anchors.push_back(x);
  }
  return g;
}

TEST(DiamondTest, PreservesCountsWithExtras) {
  for (std::size_t s = 5; s <= 9; ++s) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const MultiGraph g = host_with_extras(s, seed, 4);
      const WideDiamond d = largest_diamond(g);
      ASSERT_EQ(d.members.size(), s);
      const CountPair before = ds_truth(g, 8);
      const GadgetResult r = replace_wide_diamond(g, d, 8);
      const CountPair after = ds_truth(r.graph, r.k);
      EXPECT_EQ(after.count, before.count) << "s " << s << " seed " << seed;
      EXPECT_EQ(after.size - before.size, r.k - 8);
    }
  }
}

}  // namespace
}  // namespace countkernel
