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

#include "metricdim/graph6.h"

#include <string>

namespace metricdim {
namespace {

constexpr int kBias = 63;
constexpr char kLongOrder = '~';

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : GraphError("graph6: " + what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

Graph ParseGraph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw Graph6Error("empty line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) {
      throw Graph6Error("character outside 63..126", i);
    }
  }

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != kLongOrder) {
    n = line[0] - kBias;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == kLongOrder) {
      throw Graph6Error("order exceeds " + std::to_string(kMaxVertices), 0);
    }
    if (line.size() < 4) throw Graph6Error("truncated order", line.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | (line[i] - kBias);
    pos = 4;
  }
  if (n < 1) throw Graph6Error("order must be at least 1", 0);
  if (n > kMaxVertices) {
    throw Graph6Error("order exceeds " + std::to_string(kMaxVertices), 0);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (line.size() < expected) throw Graph6Error("truncated", line.size());
  if (line.size() > expected) throw Graph6Error("trailing bytes", expected);

  GraphBuilder builder(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - kBias;
      if ((chunk >> (5 - k % 6)) & 1) builder.AddEdge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int chunk = line[expected - 1] - kBias;
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((chunk & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits", expected - 1);
    }
  }
  return builder.Build();
}

std::string EmitGraph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += kLongOrder;
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + kBias);
    }
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.Adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + kBias);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + kBias);
  return out;
}

}  // namespace metricdim
