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

#ifndef METRICDIM_GRAPH_H_
#define METRICDIM_GRAPH_H_

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/vertex_set.h"

namespace metricdim {

// Invalid graph input: self-loops, out-of-range indices, too many vertices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by every operation that requires a connected graph. Carries two
// vertices that have no path between them.
class DisconnectedGraphError : public GraphError {
 public:
  DisconnectedGraphError(Vertex u, Vertex v);
  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with one bit row per vertex.
// Immutable once built; rows are symmetric and loop-free.
class Graph {
 public:
  // Builds a graph from an edge list. Duplicate edges collapse. Throws
  // GraphError on a self-loop, an index >= n, or n outside [1, 64].
  static Graph FromEdges(int n, std::span<const Edge> edges);
  static Graph FromEdges(int n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  VertexSet Neighbors(Vertex v) const { return rows_[v]; }
  bool Adjacent(Vertex u, Vertex v) const { return rows_[u].Contains(v); }
  int Degree(Vertex v) const { return rows_[v].size(); }
  int MaxDegree() const;
  int EdgeCount() const;
  VertexSet Vertices() const { return VertexSet::Range(n_); }

  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> Edges() const;

  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;
  explicit Graph(int n) : n_(n) {}

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

// Incremental construction for hot loops and generators. Validates like
// Graph::FromEdges.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& AddEdge(Vertex u, Vertex v);
  // Adds every edge between distinct members of `clique`.
  GraphBuilder& AddClique(VertexSet clique);
  Graph Build() const { return graph_; }

 private:
  Graph graph_;
};

// Vertices reachable from `source`.
VertexSet Component(const Graph& g, Vertex source);
bool IsConnected(const Graph& g);
// Throws DisconnectedGraphError naming a vertex pair with no path.
void RequireConnected(const Graph& g);

// Plain edge-list text: "n m" followed by m lines "u v".
std::string ToEdgeList(const Graph& g);
// Parses the edge-list format. Throws GraphError on malformed text.
Graph ParseEdgeList(const std::string& text);

}  // namespace metricdim

#endif  // METRICDIM_GRAPH_H_
