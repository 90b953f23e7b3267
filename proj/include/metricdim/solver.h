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

#ifndef METRICDIM_SOLVER_H_
#define METRICDIM_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "metricdim/distances.h"
#include "metricdim/graph.h"
#include "metricdim/twins.h"
#include "metricdim/vertex_set.h"

namespace metricdim {

// r(v|W): distances from v to each landmark, in landmark order.
using MetricVector = std::vector<int>;

MetricVector Representation(const DistanceMatrix& d, Vertex v,
                            std::span<const Vertex> landmarks);

// True iff all vertices have distinct representations with respect to `w`.
// Only vertices outside `w` are compared: a landmark is the sole vertex at
// distance 0 from itself.
bool IsResolving(const DistanceMatrix& d, VertexSet w);

// For every unordered pair {u, v}, the set D(u,v) of vertices whose distances
// to u and v differ. W resolves the graph iff W meets every D(u,v). Each
// D(u,v) contains u and v, so none is empty.
class PairDistinguishers {
 public:
  explicit PairDistinguishers(const DistanceMatrix& d);

  int order() const { return n_; }
  VertexSet Of(Vertex u, Vertex v) const;
  // All sets, pairs in graph6 order (0,1), (0,2), (1,2), (0,3), ...
  std::span<const VertexSet> All() const { return sets_; }
  // True iff `w` meets every D(u,v).
  bool HitByAll(VertexSet w) const;

 private:
  int n_;
  std::vector<VertexSet> sets_;
};

struct BasisReport {
  int order = 0;
  int dimension = 0;
  // Minimum resolving sets in lexicographic order of their sorted indices.
  std::vector<VertexSet> bases;
  // False when the listing stopped at SolveOptions::max_bases.
  bool complete = true;
  // Exactly one basis exists. Decided whenever max_bases is 0 or >= 2.
  bool unique = false;
  // Every k-subset is a basis; nullopt when not evaluated.
  std::optional<bool> randomly_k;
  // K1 is reported with dimension 0 and the empty basis by convention.
  bool single_vertex = false;
};

struct SolveOptions {
  // Stop listing after this many bases; 0 lists all.
  std::size_t max_bases = 0;
  // Decide randomly_k even when the order exceeds 20.
  bool evaluate_randomly = false;
};

// Exact metric dimension and basis enumeration by branch and bound over the
// hitting-set formulation. Bases are produced in lexicographic order.
class MetricBasisSolver {
 public:
  // Throws DisconnectedGraphError.
  explicit MetricBasisSolver(const Graph& g);

  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return distances_; }
  const TwinClasses& twins() const { return twins_; }
  const PairDistinguishers& distinguishers() const { return pairs_; }

  // max(Σ(|twin class| - 1), disjoint-packing bound, 1 when n >= 2).
  int LowerBound() const;
  // Size of a greedily built resolving set.
  VertexSet GreedyResolvingSet() const;

  bool HasResolvingSetOfSize(int k) const;
  int Dimension() const;
  // Lists resolving sets of exactly k vertices (all of them, or up to
  // `limit` when nonzero). Returns false if the limit cut the listing.
  bool ResolvingSetsOfSize(int k, std::size_t limit,
                           std::vector<VertexSet>& out) const;
  BasisReport Bases(const SolveOptions& options = {}) const;

 private:
  class Search;

  Graph graph_;
  DistanceMatrix distances_;
  TwinClasses twins_;
  PairDistinguishers pairs_;
  // Inclusion-minimal distinct D(u,v) sets, smallest first. Hitting these is
  // equivalent to hitting all of them.
  std::vector<VertexSet> reduced_;
};

int MetricDimension(const Graph& g);
BasisReport AllBases(const Graph& g, const SolveOptions& options = {});
bool IsUniquelyDimensional(const Graph& g);

// n choose k, exact for n <= 64.
std::uint64_t Binomial(int n, int k);

}  // namespace metricdim

#endif  // METRICDIM_SOLVER_H_
