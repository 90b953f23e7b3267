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

#include <algorithm>
#include <sstream>
#include <string>

namespace metricdim {

DisconnectedGraphError::DisconnectedGraphError(Vertex u, Vertex v)
    : GraphError("graph is disconnected: no path between vertices " +
                 std::to_string(u) + " and " + std::to_string(v)),
      u_(u),
      v_(v) {}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const auto& [u, v] : edges) builder.AddEdge(u, v);
  return builder.Build();
}

int Graph::MaxDegree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, Degree(v));
  return best;
}

int Graph::EdgeCount() const {
  int twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += Degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : rows_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ &&
         std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) +
                     " outside supported range 1.." +
                     std::to_string(kMaxVertices));
  }
}

GraphBuilder& GraphBuilder::AddEdge(Vertex u, Vertex v) {
  const int n = graph_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an index outside 0.." + std::to_string(n - 1));
  }
  if (u == v) {
    throw GraphError("self-loop at vertex " + std::to_string(u));
  }
  graph_.rows_[u].Insert(v);
  graph_.rows_[v].Insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::AddClique(VertexSet clique) {
  for (Vertex u : clique) {
    for (Vertex v : clique) {
      if (u < v) AddEdge(u, v);
    }
  }
  return *this;
}

VertexSet Component(const Graph& g, Vertex source) {
  VertexSet seen = VertexSet::Single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.Neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

bool IsConnected(const Graph& g) {
  return Component(g, 0) == g.Vertices();
}

void RequireConnected(const Graph& g) {
  const VertexSet reached = Component(g, 0);
  const VertexSet missing = g.Vertices() - reached;
  if (!missing.empty()) throw DisconnectedGraphError(0, missing.Min());
}

std::string ToEdgeList(const Graph& g) {
  const std::vector<Edge> edges = g.Edges();
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph ParseEdgeList(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) {
    throw GraphError("edge list: expected header \"n m\"");
  }
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("edge list: vertex count " + std::to_string(n) +
                     " outside supported range 1.." +
                     std::to_string(kMaxVertices));
  }
  if (m < 0) throw GraphError("edge list: negative edge count");
  GraphBuilder builder(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw GraphError("edge list: expected " + std::to_string(m) +
                       " edges, found " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge list: edge " + std::to_string(i) +
                       " has an index outside 0.." + std::to_string(n - 1));
    }
    builder.AddEdge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) {
    throw GraphError("edge list: unexpected trailing token \"" + extra + "\"");
  }
  return builder.Build();
}

}  // namespace metricdim
