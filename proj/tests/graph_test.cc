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

#include "metricdim/graph.h"

#include <vector>

#include "gtest/gtest.h"
#include "metricdim/vertex_set.h"
#include "test_graphs.h"

namespace metricdim {
namespace {

TEST(VertexSetTest, IteratesAscending) {
  const VertexSet s{5, 0, 63, 17};
  EXPECT_EQ(s.ToVector(), (std::vector<Vertex>{0, 5, 17, 63}));
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.Min(), 0);
  EXPECT_EQ(s.Max(), 63);
  EXPECT_EQ(s.ToString(), "0 5 17 63");
}

TEST(VertexSetTest, LexLessMatchesSortedListOrder) {
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      const VertexSet x(a);
      const VertexSet y(b);
      EXPECT_EQ(LexLess(x, y), x.ToVector() < y.ToVector()) << a << " " << b;
    }
  }
}

TEST(GraphTest, BuildsK2) {
  const Graph g = Graph::FromEdges(2, {{0, 1}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_TRUE(g.Adjacent(0, 1));
  EXPECT_TRUE(g.Adjacent(1, 0));
  EXPECT_EQ(g.EdgeCount(), 1);
}

TEST(GraphTest, BuildsK3) {
  const Graph g = Graph::FromEdges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g, testing::Complete(3));
  EXPECT_EQ(g.EdgeCount(), 3);
}

TEST(GraphTest, BuildsOrder9FromExplicitEdges) {
  const Graph g = testing::Order9ByHand();
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.EdgeCount(), 15 + 9);
  EXPECT_EQ(g.Degree(8), 8);
  EXPECT_EQ(g.MaxDegree(), 8);
}

TEST(GraphTest, DuplicateEdgesCollapse) {
  const Graph g = Graph::FromEdges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.EdgeCount(), 1);
}

TEST(GraphTest, RejectsSelfLoop) {
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), GraphError);
}

TEST(GraphTest, RejectsIndexOutOfRange) {
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::FromEdges(3, {{-1, 0}}), GraphError);
}

TEST(GraphTest, RejectsOrderOutsideCap) {
  EXPECT_THROW(Graph::FromEdges(65, {}), GraphError);
  EXPECT_THROW(Graph::FromEdges(0, {}), GraphError);
  EXPECT_NO_THROW(Graph::FromEdges(64, {{0, 63}}));
}

TEST(GraphTest, ConnectivityNamesMissingPair) {
  const Graph g = Graph::FromEdges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(IsConnected(g));
  try {
    RequireConnected(g);
    FAIL() << "expected DisconnectedGraphError";
  } catch (const DisconnectedGraphError& e) {
    EXPECT_EQ(e.u(), 0);
    EXPECT_EQ(e.v(), 2);
  }
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = testing::Order9ByHand();
  EXPECT_EQ(ParseEdgeList(ToEdgeList(g)), g);
  EXPECT_EQ(ToEdgeList(testing::Path(3)), "3 2\n0 1\n1 2\n");
}

TEST(EdgeListTest, RejectsMalformedText) {
  EXPECT_THROW(ParseEdgeList(""), GraphError);
  EXPECT_THROW(ParseEdgeList("3 2\n0 1\n"), GraphError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 1\n1 2\n"), GraphError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 5\n"), GraphError);
  EXPECT_THROW(ParseEdgeList("70 0\n"), GraphError);
  EXPECT_THROW(ParseEdgeList("2 1\n0 x\n"), GraphError);
}

}  // namespace
}  // namespace metricdim
