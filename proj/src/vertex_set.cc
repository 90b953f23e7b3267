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

#include "metricdim/vertex_set.h"

#include <bit>
#include <string>

namespace metricdim {

std::string VertexSet::ToString() const {
  std::string out;
  for (Vertex v : *this) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

bool LexLess(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  // Both lists agree below `first`; the set holding `first` is smaller unless
  // the other set has run out of elements.
  const std::uint64_t above =
      first == 63 ? 0 : ~std::uint64_t{0} << (first + 1);
  if (a.Contains(first)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

}  // namespace metricdim
