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

#include "metricdim/distances.h"

#include <algorithm>
#include <array>

namespace metricdim {

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_, 0) {
  const VertexSet all = g.Vertices();
  for (Vertex source = 0; source < n_; ++source) {
    std::uint8_t* row = &dist_[static_cast<std::size_t>(source) * n_];
    VertexSet seen = VertexSet::Single(source);
    VertexSet frontier = seen;
    int level = 0;
    while (true) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.Neighbors(v);
      frontier = next - seen;
      if (frontier.empty()) break;
      ++level;
      seen |= frontier;
      for (Vertex v : frontier) row[v] = static_cast<std::uint8_t>(level);
    }
    if (seen != all) throw DisconnectedGraphError(source, (all - seen).Min());
    diameter_ = std::max(diameter_, level);
  }
}

VertexSet DistanceMatrix::Ring(Vertex v, int i) const {
  VertexSet ring;
  const std::uint8_t* row = &dist_[static_cast<std::size_t>(v) * n_];
  for (Vertex u = 0; u < n_; ++u) {
    if (row[u] == i) ring.Insert(u);
  }
  return ring;
}

int Diameter(const Graph& g) { return DistanceMatrix(g).Diameter(); }

std::optional<int> Girth(const Graph& g) {
  RequireConnected(g);
  const int n = g.order();
  int best = n + 1;
  std::array<int, kMaxVertices> depth{};
  std::array<Vertex, kMaxVertices> parent{};
  std::array<Vertex, kMaxVertices> queue{};
  for (Vertex root = 0; root < n; ++root) {
    depth.fill(-1);
    depth[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex x = queue[head++];
      // Cycles closed from here or later are at least 2*depth long.
      if (2 * depth[x] >= best) break;
      for (Vertex y : g.Neighbors(x)) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          best = std::min(best, depth[x] + depth[y] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

VertexSet Gamma(const DistanceMatrix& d, Vertex v, int i) {
  return d.Ring(v, i);
}

}  // namespace metricdim
