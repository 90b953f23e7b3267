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

#include "metricdim/enumerate.h"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "oracle.h"
#include "test_graphs.h"

namespace metricdim {
namespace {

std::size_t CountConnected(int n, bool dedup) {
  std::size_t count = 0;
  ForEachConnected(n, dedup, [&](std::uint64_t, const Graph&) {
    ++count;
    return true;
  });
  return count;
}

bool ConnectedByOracle(const Graph& g) {
  for (const auto& row : oracle::AllPairs(g)) {
    for (int d : row) {
      if (d >= oracle::kUnreachable) return false;
    }
  }
  return true;
}

TEST(EdgeCodeTest, MostSignificantBitIsFirstPair) {
  EXPECT_EQ(CodeOf(Graph::FromEdges(3, {{0, 1}})), 0b100u);
  EXPECT_EQ(CodeOf(Graph::FromEdges(3, {{1, 2}})), 0b001u);
  EXPECT_EQ(GraphFromCode(3, 0b111), testing::Complete(3));
  for (std::uint64_t code = 0; code < LabeledGraphCount(5); ++code) {
    ASSERT_EQ(CodeOf(GraphFromCode(5, code)), code);
  }
}

TEST(EnumerateTest, SmallOrders) {
  EXPECT_EQ(CountConnected(1, false), 1u);
  EXPECT_EQ(CountConnected(2, false), 1u);
  const std::vector<Graph> k2 = EnumerateConnected(2, false);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], testing::Complete(2));
}

// Brute force over all 8 labeled graphs on 3 vertices.
TEST(EnumerateTest, OrderThreeAgainstBruteForce) {
  std::vector<std::uint64_t> expected;
  std::set<std::uint64_t> classes;
  for (std::uint64_t code = 0; code < 8; ++code) {
    GraphBuilder b(3);
    if (code & 4) b.AddEdge(0, 1);
    if (code & 2) b.AddEdge(0, 2);
    if (code & 1) b.AddEdge(1, 2);
    const Graph g = b.Build();
    if (ConnectedByOracle(g)) {
      expected.push_back(code);
      classes.insert(oracle::CanonicalCode(g));
    }
  }
  std::vector<std::uint64_t> labeled;
  ForEachConnected(3, false, [&](std::uint64_t code, const Graph&) {
    labeled.push_back(code);
    return true;
  });
  EXPECT_EQ(labeled, expected);
  EXPECT_EQ(labeled.size(), 4u);
  EXPECT_EQ(classes.size(), 2u);
  EXPECT_EQ(CountConnected(3, true), 2u);
}

// Groups the labeled stream by brute-force canonical form and compares with
// the orderly generator: same number of classes and same representatives.
TEST(EnumerateTest, DedupMatchesBruteForceGrouping) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> by_oracle;
    std::size_t labeled = 0;
    ForEachConnected(n, false, [&](std::uint64_t code, const Graph& g) {
      const std::uint64_t canon = oracle::CanonicalCode(g);
      EXPECT_EQ(CanonicalCode(g), canon) << n << ":" << code;
      EXPECT_EQ(IsCanonical(g), canon == code);
      EXPECT_TRUE(ConnectedByOracle(g));
      by_oracle.insert(canon);
      ++labeled;
      return true;
    });
    const std::vector<std::uint64_t> orderly = ConnectedClassCodes(n);
    EXPECT_EQ(std::vector<std::uint64_t>(by_oracle.begin(), by_oracle.end()),
              orderly)
        << n;
    EXPECT_EQ(CountConnected(n, false), labeled);
  }
  EXPECT_EQ(CountConnected(5, true), 21u);
}

TEST(EnumerateTest, SevenVertexCounts) {
  EXPECT_EQ(CountConnected(6, false), 26704u);
  EXPECT_EQ(CountConnected(7, true), 853u);
  EXPECT_EQ(CountConnected(8, true), 11117u);
}

TEST(EnumerateTest, RangesPartitionTheStream) {
  std::vector<std::uint64_t> whole;
  ForEachConnectedLabeled(5, 0, LabeledGraphCount(5),
                          [&](std::uint64_t c, const Graph&) {
                            whole.push_back(c);
                            return true;
                          });
  std::vector<std::uint64_t> pieces;
  for (std::uint64_t lo = 0; lo < LabeledGraphCount(5); lo += 97) {
    ForEachConnectedLabeled(5, lo, lo + 97, [&](std::uint64_t c, const Graph&) {
      pieces.push_back(c);
      return true;
    });
  }
  EXPECT_EQ(whole, pieces);
  EXPECT_TRUE(std::is_sorted(whole.begin(), whole.end()));
}

TEST(EnumerateTest, VisitorCanStop) {
  std::size_t seen = 0;
  ForEachConnected(5, false, [&](std::uint64_t, const Graph&) {
    return ++seen < 3;
  });
  EXPECT_EQ(seen, 3u);
}

TEST(EnumerateTest, RefusesLargeOrders) {
  const GraphVisitor all = [](std::uint64_t, const Graph&) { return true; };
  EXPECT_THROW(ForEachConnected(9, false, all), std::out_of_range);
  EXPECT_THROW(ConnectedClassCodes(0), std::out_of_range);
}

}  // namespace
}  // namespace metricdim
