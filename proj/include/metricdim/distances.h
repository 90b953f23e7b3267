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

#ifndef METRICDIM_DISTANCES_H_
#define METRICDIM_DISTANCES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "metricdim/graph.h"
#include "metricdim/vertex_set.h"

namespace metricdim {

// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  // BFS from every vertex. Throws DisconnectedGraphError.
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  int Diameter() const { return diameter_; }

  // Vertices at distance exactly i from v (empty when i exceeds the
  // eccentricity of v).
  VertexSet Ring(Vertex v, int i) const;

 private:
  int n_;
  int diameter_ = 0;
  std::vector<std::uint8_t> dist_;
};

int Diameter(const Graph& g);

// Length of a shortest cycle; nullopt for acyclic graphs. Throws
// DisconnectedGraphError.
std::optional<int> Girth(const Graph& g);

// Γ_i(v): the vertices at distance i from v. Γ_0(v) = {v}.
VertexSet Gamma(const DistanceMatrix& d, Vertex v, int i);

}  // namespace metricdim

#endif  // METRICDIM_DISTANCES_H_
