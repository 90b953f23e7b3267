// Copyright 2026 The metricdim Authors
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

#include "metricdim/twins.h"

#include "gtest/gtest.h"
#include "metricdim/enumerate.h"
#include "test_graphs.h"

namespace metricdim {
namespace {

TEST(TwinClassesTest, CompleteGraphIsOneClass) {
  const TwinClasses t = ComputeTwinClasses(testing::Complete(4));
  ASSERT_EQ(t.classes.size(), 1u);
  EXPECT_EQ(t.classes[0].size(), 4);
  EXPECT_EQ(t.ForcedCount(), 3);
}

TEST(TwinClassesTest, StarLeavesAreTwins) {
  const TwinClasses t = ComputeTwinClasses(testing::Star(4));
  ASSERT_EQ(t.classes.size(), 2u);
  EXPECT_EQ(t.classes[0], VertexSet::Single(0));
  EXPECT_EQ(t.classes[1], (VertexSet{1, 2, 3}));
  EXPECT_TRUE(t.HasTwins());
}

TEST(TwinClassesTest, LongPathHasNone) {
  const TwinClasses t = ComputeTwinClasses(testing::Path(5));
  EXPECT_EQ(t.classes.size(), 5u);
  EXPECT_FALSE(t.HasTwins());
  EXPECT_EQ(t.ForcedCount(), 0);
}

// The twin relation is only defined pairwise; check that classes are well
// defined (transitive) on every connected graph up to 7 vertices.
TEST(TwinClassesTest, PartitionIsPairwiseTwinExhaustively) {
  for (int n = 1; n <= 7; ++n) {
    ForEachConnected(n, false, [&](std::uint64_t code, const Graph& g) {
      TwinClasses t;
      EXPECT_NO_THROW(t = ComputeTwinClasses(g)) << n << ":" << code;
      VertexSet covered;
      for (VertexSet c : t.classes) {
        EXPECT_FALSE(c.Intersects(covered));
        covered |= c;
        for (Vertex u : c) {
          for (Vertex v : c) {
            const VertexSet nu = g.Neighbors(u) - VertexSet::Single(v);
            const VertexSet nv = g.Neighbors(v) - VertexSet::Single(u);
            EXPECT_TRUE(((nu - nv) | (nv - nu)).empty());
          }
        }
      }
      EXPECT_EQ(covered, g.Vertices());
      // Maximality: vertices in different classes are not twins.
      for (std::size_t a = 0; a < t.classes.size(); ++a) {
        for (std::size_t b = a + 1; b < t.classes.size(); ++b) {
          EXPECT_FALSE(
              AreTwins(g, t.classes[a].Min(), t.classes[b].Min()));
        }
      }
      return !::testing::Test::HasFailure();
    });
  }
}

}  // namespace
}  // namespace metricdim
