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

#include "metricdim/constructions.h"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "metricdim/distances.h"
#include "metricdim/enumerate.h"
#include "metricdim/solver.h"

namespace metricdim {
namespace {

void RequireRange(const char* what, int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw std::out_of_range(std::string(what) + ": k must be in " +
                            std::to_string(lo) + ".." + std::to_string(hi) +
                            ", got " + std::to_string(k));
  }
}

int Power(int base, int exp) {
  int p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

// Entries of the tuple with lexicographic rank `rank`, each in 1..3.
std::vector<int> TupleAt(int k, int rank) {
  std::vector<int> t(k);
  for (int i = k - 1; i >= 0; --i) {
    t[i] = rank % 3 + 1;
    rank /= 3;
  }
  return t;
}

std::optional<Vertex> UniversalVertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.Degree(v) == g.order() - 1) return v;
  }
  return std::nullopt;
}

ConstructedGraph ScanBase6() {
  std::optional<ConstructedGraph> found;
  ForEachConnected(6, /*dedup=*/false, [&](std::uint64_t, const Graph& g) {
    if (g.MaxDegree() != 5) return true;
    const MetricBasisSolver solver(g);
    if (solver.distances().Diameter() != 2) return true;
    const BasisReport r = solver.Bases({.max_bases = 2});
    if (!r.unique || r.dimension != 2) return true;
    found = ConstructedGraph{
        .graph = g,
        .designated_basis = r.bases.front(),
        .predicted = {.order = 6, .dimension = 2, .diameter = 2,
                      .max_degree = 5},
        .family = "base6",
        .k = 2,
    };
    return false;
  });
  if (!found) {
    throw std::logic_error(
        "no uniquely 2-dimensional graph of order 6 with diameter 2 and a "
        "universal vertex");
  }
  return *found;
}

}  // namespace

std::string ConstructedGraph::Metadata() const {
  std::string basis;
  for (Vertex v : designated_basis) {
    if (!basis.empty()) basis += ',';
    basis += std::to_string(v);
  }
  return "family=" + family + " k=" + std::to_string(k) +
         " m=" + std::to_string(m) + " n=" + std::to_string(graph.order()) +
         " basis=" + basis;
}

ConstructedGraph Construct3k(int k) {
  RequireRange("3k family", k, 2, 21);
  const auto u = [](int i) { return i - 1; };
  const auto w = [k](int j) { return k + j - 1; };
  GraphBuilder b(3 * k);
  b.AddClique(VertexSet::Range(3 * k) - VertexSet::Range(k));
  for (int i = 1; i <= k; ++i) b.AddEdge(u(k), w(2 * i));
  for (int i = 1; i <= k - 1; ++i) {
    b.AddEdge(u(i), w(2 * i - 1));
    b.AddEdge(u(i), w(2 * i));
  }
  return {
      .graph = b.Build(),
      .designated_basis = VertexSet::Range(k),
      .predicted = {.order = 3 * k,
                    .dimension = k,
                    .diameter = std::nullopt,
                    .max_degree = std::nullopt},
      .family = "3k",
      .k = k,
  };
}

Vertex KPlus3kTupleVertex(int k, const std::vector<int>& tuple) {
  int rank = 0;
  for (int x : tuple) rank = rank * 3 + (x - 1);
  return k + rank;
}

ConstructedGraph ConstructKPlus3k(int k) {
  RequireRange("k+3^k family", k, 2, 3);
  const int tuples = Power(3, k);
  GraphBuilder b(k + tuples);
  const Vertex center = KPlus3kTupleVertex(k, std::vector<int>(k, 2));
  for (int x = 0; x < tuples; ++x) {
    const std::vector<int> tx = TupleAt(k, x);
    for (int i = 0; i < k; ++i) {
      if (tx[i] == 1) b.AddEdge(i, k + x);
    }
    for (int y = x + 1; y < tuples; ++y) {
      const std::vector<int> ty = TupleAt(k, y);
      int differing = 0;
      int gap = 0;
      for (int i = 0; i < k; ++i) {
        if (tx[i] != ty[i]) {
          ++differing;
          gap = std::abs(tx[i] - ty[i]);
        }
      }
      if (differing == 1 && gap == 1) b.AddEdge(k + x, k + y);
    }
    if (k + x != center) b.AddEdge(center, k + x);
  }
  return {
      .graph = b.Build(),
      .designated_basis = VertexSet::Range(k),
      .predicted = {.order = k + tuples,
                    .dimension = k,
                    .diameter = 3,
                    .max_degree = std::nullopt},
      .family = "kplus3k",
      .k = k,
  };
}

ConstructedGraph ConstructOrder9() {
  const auto u = [](int i) { return i - 1; };
  const auto w = [](int j) { return 2 + j; };
  GraphBuilder b(9);
  b.AddClique(VertexSet::Range(9) - VertexSet::Range(3));
  for (int i = 1; i <= 3; ++i) {
    for (int j : {i, i + 1, 6}) b.AddEdge(u(i), w(j));
  }
  return {
      .graph = b.Build(),
      .designated_basis = VertexSet::Range(3),
      .predicted = {.order = 9, .dimension = 3, .diameter = 2,
                    .max_degree = 8},
      .family = "order9",
      .k = 3,
  };
}

ConstructedGraph FindBase6() {
  static const ConstructedGraph base = ScanBase6();
  return base;
}

ConstructedGraph JoinIdentify(const ConstructedGraph& a,
                              const ConstructedGraph& b) {
  const std::optional<Vertex> va = UniversalVertex(a.graph);
  const std::optional<Vertex> vb = UniversalVertex(b.graph);
  if (!va || !vb) {
    throw std::invalid_argument(
        "join-identify needs a vertex adjacent to all others in each input");
  }
  const int na = a.graph.order();
  const int nb = b.graph.order();
  const int n = na + nb - 1;
  if (n > kMaxVertices) {
    throw std::invalid_argument("join-identify result has " +
                                std::to_string(n) + " vertices, cap is " +
                                std::to_string(kMaxVertices));
  }
  std::vector<Vertex> map_b(nb);
  Vertex next = na;
  for (Vertex v = 0; v < nb; ++v) map_b[v] = v == *vb ? *va : next++;

  GraphBuilder builder(n);
  for (const auto& [x, y] : a.graph.Edges()) builder.AddEdge(x, y);
  for (const auto& [x, y] : b.graph.Edges()) {
    builder.AddEdge(map_b[x], map_b[y]);
  }
  for (Vertex x = 0; x < na; ++x) {
    for (Vertex y = na; y < n; ++y) builder.AddEdge(x, y);
  }
  VertexSet basis = a.designated_basis;
  for (Vertex v : b.designated_basis) basis.Insert(map_b[v]);
  const int k = a.predicted.dimension + b.predicted.dimension;
  return {
      .graph = builder.Build(),
      .designated_basis = basis,
      .predicted = {.order = n,
                    .dimension = k,
                    .diameter = std::nullopt,
                    .max_degree = n - 1},
      .family = "join",
      .k = k,
  };
}

ConstructedGraph ConstructFiveHalves(int k) {
  RequireRange("5k/2 family", k, 2, 25);
  const ConstructedGraph base = FindBase6();
  const int copies = k % 2 == 0 ? k / 2 : (k - 3) / 2;
  ConstructedGraph result = k % 2 == 0 ? base : ConstructOrder9();
  for (int i = k % 2 == 0 ? 1 : 0; i < copies; ++i) {
    result = JoinIdentify(base, result);
  }
  result.family = "fivehalves";
  result.k = k;
  result.predicted.order = (5 * k + 1) / 2 + 1;
  result.predicted.dimension = k;
  result.predicted.max_degree = result.predicted.order - 1;
  return result;
}

Vertex FarthestNonBasisVertex(const ConstructedGraph& c, Vertex u) {
  const DistanceMatrix d(c.graph);
  Vertex best = -1;
  for (Vertex v : c.graph.Vertices() - c.designated_basis) {
    if (best < 0 || d(v, u) > d(best, u)) best = v;
  }
  if (best < 0) {
    throw std::invalid_argument("every vertex is in the designated basis");
  }
  return best;
}

ConstructedGraph ExtendByPath(const ConstructedGraph& c, Vertex u, int m) {
  if (!c.designated_basis.Contains(u)) {
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " is not in the designated basis");
  }
  if (m < 1) throw std::invalid_argument("path length must be at least 1");
  const int n = c.graph.order();
  if (n + m > kMaxVertices) {
    throw std::invalid_argument("extended graph exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  }
  const Vertex anchor = FarthestNonBasisVertex(c, u);
  GraphBuilder b(n + m);
  for (const auto& [x, y] : c.graph.Edges()) b.AddEdge(x, y);
  b.AddEdge(anchor, n);
  for (Vertex v = n; v + 1 < n + m; ++v) b.AddEdge(v, v + 1);
  return {
      .graph = b.Build(),
      .designated_basis = c.designated_basis,
      .predicted = {.order = n + m,
                    .dimension = c.predicted.dimension,
                    .diameter = std::nullopt,
                    .max_degree = std::nullopt},
      .family = "path",
      .k = c.k,
      .m = m,
  };
}

}  // namespace metricdim
