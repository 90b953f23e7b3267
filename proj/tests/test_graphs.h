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

#ifndef METRICDIM_TESTS_TEST_GRAPHS_H_
#define METRICDIM_TESTS_TEST_GRAPHS_H_

#include <vector>

#include "metricdim/graph.h"

namespace metricdim::testing {

inline Graph Complete(int n) {
  return GraphBuilder(n).AddClique(VertexSet::Range(n)).Build();
}

inline Graph Path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.AddEdge(i, i + 1);
  return b.Build();
}

inline Graph Cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.AddEdge(i, (i + 1) % n);
  return b.Build();
}

// Center 0, leaves 1..n-1.
inline Graph Star(int n) {
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) b.AddEdge(0, i);
  return b.Build();
}

// Written out by hand from the edge rule: w_i w_j for all i != j, and u_i w_j
// for j in {i, i+1, 6}. Vertices u1..u3 = 0..2, w1..w6 = 3..8.
inline Graph Order9ByHand() {
  std::vector<Edge> edges;
  for (int i = 3; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) edges.emplace_back(i, j);
  }
  const std::vector<Edge> spokes = {{0, 3}, {0, 4}, {0, 8}, {1, 4}, {1, 5},
                                    {1, 8}, {2, 5}, {2, 6}, {2, 8}};
  edges.insert(edges.end(), spokes.begin(), spokes.end());
  return Graph::FromEdges(9, edges);
}

}  // namespace metricdim::testing

#endif  // METRICDIM_TESTS_TEST_GRAPHS_H_
