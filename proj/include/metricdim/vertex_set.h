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

#ifndef METRICDIM_VERTEX_SET_H_
#define METRICDIM_VERTEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace metricdim {

// Vertices are 0-based indices. Graphs hold at most kMaxVertices vertices so
// that any vertex subset fits a single machine word.
using Vertex = int;
inline constexpr int kMaxVertices = 64;

// A set of vertices stored as a 64-bit mask. Iteration is in ascending
// vertex order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) Insert(v);
  }

  // {0, 1, ..., n-1}.
  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet Single(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool Contains(Vertex v) const { return (bits_ >> v) & 1; }
  constexpr Vertex Min() const { return std::countr_zero(bits_); }
  constexpr Vertex Max() const { return 63 - std::countl_zero(bits_); }
  constexpr bool Intersects(VertexSet o) const {
    return (bits_ & o.bits_) != 0;
  }
  constexpr bool IsSubsetOf(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  constexpr void Insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void Erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Vertex> ToVector() const { return {begin(), end()}; }

  // Space-separated ascending indices, e.g. "0 3 5".
  std::string ToString() const;

 private:
  std::uint64_t bits_ = 0;
};

// Orders sets by their sorted index lists, lexicographically.
bool LexLess(VertexSet a, VertexSet b);

}  // namespace metricdim

#endif  // METRICDIM_VERTEX_SET_H_
