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

#ifndef METRICDIM_CONSTRUCTIONS_H_
#define METRICDIM_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "metricdim/graph.h"
#include "metricdim/vertex_set.h"

namespace metricdim {

// Generators for uniquely k-dimensional graph families. Each returns the
// graph together with the basis it is built around and the parameters it is
// expected to have. Nothing here is verified; run the solver for that.

struct Predicted {
  int order = 0;
  int dimension = 0;
  std::optional<int> diameter;
  std::optional<int> max_degree;
};

struct ConstructedGraph {
  Graph graph;
  VertexSet designated_basis;
  Predicted predicted;
  // "3k", "kplus3k", "order9", "base6", "join", "fivehalves", "path".
  std::string family;
  int k = 0;
  // Path length for "path"; 0 otherwise.
  int m = 0;

  // "family=<tag> k=<k> m=<m> n=<order> basis=<i,j,...>".
  std::string Metadata() const;
};

// U = u1..uk (vertices 0..k-1) independent, W = w1..w2k (k..3k-1) a clique;
// u_k ~ w_2i for all i, and u_i ~ w_{2i-1}, w_{2i} for i < k. 2 <= k <= 21.
ConstructedGraph Construct3k(int k);

// U = u1..uk independent, then W = all k-tuples over {1,2,3} in
// lexicographic order. Tuples differing by one in a single coordinate are
// adjacent, (2,...,2) is adjacent to all of W, and w ~ u_i iff w_i = 1.
// k in {2, 3}.
ConstructedGraph ConstructKPlus3k(int k);

// Vertex index of the tuple `t` (entries 1..3) in ConstructKPlus3k(k).
Vertex KPlus3kTupleVertex(int k, const std::vector<int>& tuple);

// u1..u3 = 0..2 and a clique w1..w6 = 3..8 with u_i ~ w_i, w_{i+1}, w_6.
ConstructedGraph ConstructOrder9();

// Lexicographically first labeled connected graph on 6 vertices that is
// uniquely 2-dimensional, has diameter 2 and a vertex of degree 5. The
// result is computed once and cached. Throws std::logic_error if the scan
// finds nothing.
ConstructedGraph FindBase6();
// graph6 line of FindBase6(), frozen so composite graphs are stable.
inline constexpr const char* kBase6Graph6 = "EBnw";

// Joins a and b completely and merges their lowest-indexed universal
// vertices into v0. Vertices of a keep their indices (v0 takes the index of
// a's universal vertex); b's remaining vertices follow in order. Throws
// std::invalid_argument without a universal vertex or past 64 vertices.
ConstructedGraph JoinIdentify(const ConstructedGraph& a,
                              const ConstructedGraph& b);

// Order ceil(5k/2) + 1 by folding JoinIdentify over k/2 copies of the
// order-6 base (k even), or (k-3)/2 copies and the order-9 graph (k odd).
// 2 <= k <= 25.
ConstructedGraph ConstructFiveHalves(int k);

// The vertex outside the basis farthest from u, lowest index on ties.
Vertex FarthestNonBasisVertex(const ConstructedGraph& c, Vertex u);

// Attaches a path of m new vertices at FarthestNonBasisVertex(c, u). The
// designated basis is unchanged. Throws std::invalid_argument if u is not a
// designated basis vertex, m < 1, or the result exceeds 64 vertices.
ConstructedGraph ExtendByPath(const ConstructedGraph& c, Vertex u, int m);

}  // namespace metricdim

#endif  // METRICDIM_CONSTRUCTIONS_H_
