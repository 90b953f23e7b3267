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

#ifndef METRICDIM_ENUMERATE_H_
#define METRICDIM_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "metricdim/graph.h"

namespace metricdim {

// Exhaustive enumeration of small graphs.
//
// A labeled graph on n vertices is identified by its edge code: the
// upper-triangle adjacency bits in graph6 order (0,1), (0,2), (1,2), (0,3),
// ... read as a binary number whose most significant bit is the pair (0,1).
// Numeric order of codes is therefore the lexicographic order of the bit
// string, and the canonical representative of an isomorphism class is the
// member with the smallest code.

inline constexpr int kMaxEnumerationOrder = 8;
// Largest order whose edge code fits one word.
inline constexpr int kMaxCodeOrder = 11;

constexpr int PairCount(int n) { return n * (n - 1) / 2; }
// Number of labeled graphs on n vertices, 2^(n choose 2).
constexpr std::uint64_t LabeledGraphCount(int n) {
  return std::uint64_t{1} << PairCount(n);
}

Graph GraphFromCode(int n, std::uint64_t code);
// Requires order <= kMaxCodeOrder.
std::uint64_t CodeOf(const Graph& g);

// Smallest code over all relabelings of g. Requires order <= kMaxCodeOrder.
std::uint64_t CanonicalCode(const Graph& g);
bool IsCanonical(const Graph& g);

// Receives (code, graph); returning false stops the enumeration.
using GraphVisitor = std::function<bool(std::uint64_t, const Graph&)>;

// Visits every connected labeled graph on n vertices whose code lies in
// [begin, end), in ascending code order. Ranges let workers split the space.
void ForEachConnectedLabeled(int n, std::uint64_t begin, std::uint64_t end,
                             const GraphVisitor& visit);

// Codes of the canonical representatives of connected graphs on n vertices,
// ascending. Built by orderly generation, so cost scales with the number of
// isomorphism classes rather than 2^(n choose 2).
std::vector<std::uint64_t> ConnectedClassCodes(int n);

// Every connected graph on n vertices: all labeled graphs in code order, or
// with `dedup` one canonical representative per isomorphism class. Throws
// std::out_of_range when n is outside [1, kMaxEnumerationOrder].
void ForEachConnected(int n, bool dedup, const GraphVisitor& visit);

// Materialized form of ForEachConnected.
std::vector<Graph> EnumerateConnected(int n, bool dedup);

}  // namespace metricdim

#endif  // METRICDIM_ENUMERATE_H_
