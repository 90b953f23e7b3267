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

#include "metricdim/solver.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "metricdim/enumerate.h"
#include "oracle.h"
#include "test_graphs.h"

namespace metricdim {
namespace {

std::vector<std::vector<int>> AsLists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (VertexSet s : sets) out.push_back(s.ToVector());
  return out;
}

TEST(RepresentationTest, LandmarkSeesItselfAtZero) {
  const DistanceMatrix d(testing::Cycle(5));
  const std::vector<Vertex> w = {3};
  EXPECT_EQ(Representation(d, 3, w), (MetricVector{0}));
}

TEST(RepresentationTest, Order9HubIsAdjacentToEveryOuterVertex) {
  const DistanceMatrix d(testing::Order9ByHand());
  const std::vector<Vertex> u = {0, 1, 2};
  EXPECT_EQ(Representation(d, 8, u), (MetricVector{1, 1, 1}));
}

TEST(IsResolvingTest, Basics) {
  const Graph k4 = testing::Complete(4);
  const DistanceMatrix d(k4);
  EXPECT_TRUE(IsResolving(d, k4.Vertices()));
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) {
      EXPECT_FALSE(IsResolving(d, VertexSet{a, b}));
    }
  }
  EXPECT_TRUE(IsResolving(DistanceMatrix(testing::Path(6)), VertexSet{0}));
  EXPECT_FALSE(IsResolving(DistanceMatrix(testing::Path(6)), VertexSet{2}));
}

TEST(PairDistinguishersTest, ContainsBothEndpoints) {
  const DistanceMatrix d(testing::Order9ByHand());
  const PairDistinguishers p(d);
  EXPECT_EQ(p.All().size(), 36u);
  for (Vertex u = 0; u < 9; ++u) {
    for (Vertex v = u + 1; v < 9; ++v) {
      EXPECT_TRUE(p.Of(u, v).Contains(u));
      EXPECT_TRUE(p.Of(u, v).Contains(v));
      EXPECT_EQ(p.Of(u, v), p.Of(v, u));
    }
  }
  // w1 and w2 differ only in adjacency to u2.
  EXPECT_EQ(p.Of(3, 4), (VertexSet{1, 3, 4}));
}

TEST(MetricDimensionTest, PathsAreOneDimensional) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(MetricDimension(testing::Path(n)), 1);
}

TEST(MetricDimensionTest, SmallGraphsMatchOracle) {
  EXPECT_EQ(oracle::AllBases(testing::Cycle(4)).dimension, 2);
  EXPECT_EQ(MetricDimension(testing::Cycle(4)), 2);
  EXPECT_EQ(oracle::AllBases(testing::Complete(4)).dimension, 3);
  EXPECT_EQ(MetricDimension(testing::Complete(4)), 3);
}

TEST(MetricDimensionTest, RejectsDisconnected) {
  EXPECT_THROW(MetricDimension(Graph::FromEdges(3, {{0, 1}})),
               DisconnectedGraphError);
  EXPECT_THROW(AllBases(Graph::FromEdges(3, {{0, 1}})), DisconnectedGraphError);
}

TEST(AllBasesTest, TriangleIsRandomlyTwoDimensional) {
  const BasisReport r = AllBases(testing::Complete(3));
  EXPECT_EQ(r.dimension, 2);
  EXPECT_EQ(AsLists(r.bases),
            (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_FALSE(r.unique);
  EXPECT_EQ(r.randomly_k, true);
  EXPECT_TRUE(r.complete);
}

TEST(AllBasesTest, Order9HasUniqueBasis) {
  const BasisReport r = AllBases(testing::Order9ByHand());
  EXPECT_EQ(r.dimension, 3);
  EXPECT_EQ(r.bases, (std::vector<VertexSet>{VertexSet{0, 1, 2}}));
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.randomly_k, false);
}

TEST(AllBasesTest, SingleVertexConvention) {
  const BasisReport r = AllBases(testing::Complete(1));
  EXPECT_EQ(r.dimension, 0);
  EXPECT_EQ(r.bases, (std::vector<VertexSet>{VertexSet()}));
  EXPECT_TRUE(r.unique);
  EXPECT_TRUE(r.single_vertex);
}

TEST(AllBasesTest, LimitTruncates) {
  const Graph c6 = testing::Cycle(6);
  const BasisReport full = AllBases(c6);
  const BasisReport two = AllBases(c6, {.max_bases = 2});
  ASSERT_GT(full.bases.size(), 2u);
  EXPECT_FALSE(two.complete);
  EXPECT_FALSE(two.unique);
  EXPECT_EQ(two.randomly_k, std::nullopt);
  EXPECT_EQ(two.bases,
            std::vector<VertexSet>(full.bases.begin(), full.bases.begin() + 2));
}

TEST(AllBasesTest, RandomlyKOnlyEvaluatedForSmallOrders) {
  const Graph p = testing::Path(21);
  EXPECT_EQ(AllBases(p).randomly_k, std::nullopt);
  EXPECT_EQ(AllBases(p, {.evaluate_randomly = true}).randomly_k, false);
}

TEST(UniquenessTest, SmallExamples) {
  EXPECT_FALSE(IsUniquelyDimensional(testing::Complete(2)));
  EXPECT_FALSE(IsUniquelyDimensional(testing::Cycle(5)));
  EXPECT_GT(oracle::AllBases(testing::Cycle(5)).bases.size(), 1u);
  EXPECT_TRUE(IsUniquelyDimensional(testing::Order9ByHand()));
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(Binomial(15, 5), 3003u);
  EXPECT_EQ(Binomial(30, 3), 4060u);
  EXPECT_EQ(Binomial(64, 32), 1832624140942590534u);
  EXPECT_EQ(Binomial(3, 4), 0u);
}

void ExpectMatchesOracle(const Graph& g, const std::string& label) {
  const oracle::Bases expected = oracle::AllBases(g);
  const MetricBasisSolver solver(g);
  EXPECT_EQ(solver.Dimension(), expected.dimension) << label;
  const BasisReport r = solver.Bases();
  EXPECT_EQ(r.dimension, expected.dimension) << label;
  EXPECT_EQ(AsLists(r.bases), expected.bases) << label;
  EXPECT_EQ(r.unique, expected.bases.size() == 1) << label;
  EXPECT_LE(solver.LowerBound(), expected.dimension) << label;
  EXPECT_GE(solver.GreedyResolvingSet().size(), expected.dimension) << label;
  EXPECT_TRUE(IsResolving(solver.distances(), solver.GreedyResolvingSet()));
}

TEST(OracleEquivalenceTest, AllConnectedGraphsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    ForEachConnected(n, false, [&](std::uint64_t code, const Graph& g) {
      ExpectMatchesOracle(g, std::to_string(n) + ":" + std::to_string(code));
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(OracleEquivalenceTest, RandomSevenVertexGraphs) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::uint64_t> pick(0,
                                                    LabeledGraphCount(7) - 1);
  int checked = 0;
  while (checked < 3000) {
    const std::uint64_t code = pick(rng);
    const Graph g = GraphFromCode(7, code);
    if (!IsConnected(g)) continue;
    ExpectMatchesOracle(g, "7:" + std::to_string(code));
    ++checked;
  }
}

TEST(OracleEquivalenceTest, EveryClassOfOrdersSevenAndEight) {
  for (int n = 7; n <= 8; ++n) {
    ForEachConnected(n, /*dedup=*/true,
                     [&](std::uint64_t code, const Graph& g) {
                       ExpectMatchesOracle(g, std::to_string(n) + ":" +
                                                  std::to_string(code));
                       return !::testing::Test::HasFailure();
                     });
  }
}

// Resolving iff every D(u,v) is hit, for every subset of every graph n <= 6.
TEST(HittingSetTest, SoundAndCompleteExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    ForEachConnected(n, false, [&](std::uint64_t code, const Graph& g) {
      const DistanceMatrix d(g);
      const PairDistinguishers p(d);
      const auto ref = oracle::AllPairs(g);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet w(mask);
        const bool direct = IsResolving(d, w);
        EXPECT_EQ(p.HitByAll(w), direct) << code << " " << mask;
        if (n <= 5) {
          EXPECT_EQ(oracle::Resolves(ref, w.ToVector()), direct);
        }
      }
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(PropertiesTest, BoundsAndMonotonicity) {
  for (int n = 2; n <= 6; ++n) {
    ForEachConnected(n, false, [&](std::uint64_t code, const Graph& g) {
      const MetricBasisSolver solver(g);
      const BasisReport r = solver.Bases();
      EXPECT_GE(r.dimension, solver.twins().ForcedCount());
      EXPECT_LE(r.dimension, n - solver.distances().Diameter());
      if (r.unique) EXPECT_FALSE(solver.twins().HasTwins()) << code;
      for (VertexSet b : r.bases) {
        for (Vertex extra : g.Vertices() - b) {
          VertexSet bigger = b;
          bigger.Insert(extra);
          EXPECT_TRUE(IsResolving(solver.distances(), bigger));
        }
      }
      EXPECT_TRUE(std::is_sorted(r.bases.begin(), r.bases.end(), LexLess));
      return !::testing::Test::HasFailure();
    });
  }
}

}  // namespace
}  // namespace metricdim
