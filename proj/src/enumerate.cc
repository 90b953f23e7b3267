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

#include "metricdim/enumerate.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace metricdim {
namespace {

void RequireCodeOrder(int n) {
  if (n < 1 || n > kMaxCodeOrder) {
    throw std::out_of_range("edge codes support orders 1.." +
                            std::to_string(kMaxCodeOrder) + ", got " +
                            std::to_string(n));
  }
}

// Depth-first search over vertex orderings. Position p contributes the bits
// of pairs (0,p) .. (p-1,p), which are exactly the next p bits of the code,
// so prefixes can be compared as soon as a position is filled.
class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, bool stop_at_smaller)
      : g_(g),
        n_(g.order()),
        pairs_(PairCount(g.order())),
        own_(CodeOf(g)),
        best_(own_),
        stop_at_smaller_(stop_at_smaller) {}

  std::uint64_t Run() {
    Extend(0, VertexSet(), 0);
    return best_;
  }
  bool found_smaller() const { return found_smaller_; }

 private:
  // Returns false when the search should stop.
  bool Extend(int position, VertexSet used, std::uint64_t prefix) {
    if (position == n_) {
      best_ = prefix;
      return true;
    }
    const int length = PairCount(position + 1);
    const int rest = pairs_ - length;
    for (Vertex v = 0; v < n_; ++v) {
      if (used.Contains(v)) continue;
      std::uint64_t next = prefix;
      const VertexSet row = g_.Neighbors(v);
      for (int i = 0; i < position; ++i) {
        next = (next << 1) | (row.Contains(order_[i]) ? 1 : 0);
      }
      const std::uint64_t best_prefix = rest >= 64 ? 0 : best_ >> rest;
      if (next > best_prefix) continue;
      if (next < best_prefix) {
        if (stop_at_smaller_) {
          found_smaller_ = true;
          return false;
        }
        // Any completion of `next` is at most `next` followed by ones.
        best_ = rest == 0 ? next
                          : (next << rest) | ((std::uint64_t{1} << rest) - 1);
      }
      order_[position] = v;
      VertexSet now = used;
      now.Insert(v);
      if (!Extend(position + 1, now, next)) return false;
    }
    return true;
  }

  const Graph& g_;
  const int n_;
  const int pairs_;
  const std::uint64_t own_;
  std::uint64_t best_;
  const bool stop_at_smaller_;
  bool found_smaller_ = false;
  std::array<Vertex, kMaxCodeOrder> order_{};
};

void RequireEnumerationOrder(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::out_of_range(
        "built-in enumeration supports orders 1.." +
        std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n) +
        "; feed larger orders as an external graph6 stream");
  }
}

void Orderly(int n, std::uint64_t code, std::vector<std::uint64_t>& out) {
  const Graph g = GraphFromCode(n, code);
  if (!IsCanonical(g)) return;
  if (IsConnected(g)) out.push_back(code);
  // Children clear one set bit below the lowest clear bit of `code`, which
  // makes `code` the unique parent of each child.
  const int pairs = PairCount(n);
  const int limit = std::min(pairs, std::countr_one(code));
  for (int b = 0; b < limit; ++b) {
    Orderly(n, code & ~(std::uint64_t{1} << b), out);
  }
}

}  // namespace

Graph GraphFromCode(int n, std::uint64_t code) {
  RequireCodeOrder(n);
  GraphBuilder builder(n);
  int bit = PairCount(n) - 1;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1) builder.AddEdge(i, j);
    }
  }
  return builder.Build();
}

std::uint64_t CodeOf(const Graph& g) {
  RequireCodeOrder(g.order());
  std::uint64_t code = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      code = (code << 1) | (g.Adjacent(i, j) ? 1 : 0);
    }
  }
  return code;
}

std::uint64_t CanonicalCode(const Graph& g) {
  return CanonicalSearch(g, /*stop_at_smaller=*/false).Run();
}

bool IsCanonical(const Graph& g) {
  CanonicalSearch search(g, /*stop_at_smaller=*/true);
  search.Run();
  return !search.found_smaller();
}

void ForEachConnectedLabeled(int n, std::uint64_t begin, std::uint64_t end,
                             const GraphVisitor& visit) {
  RequireEnumerationOrder(n);
  end = std::min(end, LabeledGraphCount(n));
  for (std::uint64_t code = begin; code < end; ++code) {
    const Graph g = GraphFromCode(n, code);
    if (!IsConnected(g)) continue;
    if (!visit(code, g)) return;
  }
}

std::vector<std::uint64_t> ConnectedClassCodes(int n) {
  RequireEnumerationOrder(n);
  std::vector<std::uint64_t> codes;
  Orderly(n, LabeledGraphCount(n) - 1, codes);
  std::sort(codes.begin(), codes.end());
  return codes;
}

void ForEachConnected(int n, bool dedup, const GraphVisitor& visit) {
  RequireEnumerationOrder(n);
  if (!dedup) {
    ForEachConnectedLabeled(n, 0, LabeledGraphCount(n), visit);
    return;
  }
  for (std::uint64_t code : ConnectedClassCodes(n)) {
    if (!visit(code, GraphFromCode(n, code))) return;
  }
}

std::vector<Graph> EnumerateConnected(int n, bool dedup) {
  std::vector<Graph> graphs;
  ForEachConnected(n, dedup, [&](std::uint64_t, const Graph& g) {
    graphs.push_back(g);
    return true;
  });
  return graphs;
}

}  // namespace metricdim
