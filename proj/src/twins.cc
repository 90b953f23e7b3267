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

#include "metricdim/twins.h"

#include <stdexcept>
#include <string>

namespace metricdim {

bool AreTwins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  return (g.Neighbors(u) - VertexSet::Single(v)) ==
         (g.Neighbors(v) - VertexSet::Single(u));
}

bool TwinClasses::HasTwins() const {
  for (VertexSet c : classes) {
    if (c.size() >= 2) return true;
  }
  return false;
}

int TwinClasses::ForcedCount() const {
  int forced = 0;
  for (VertexSet c : classes) forced += c.size() - 1;
  return forced;
}

std::vector<int> TwinClasses::Sizes() const {
  std::vector<int> sizes;
  sizes.reserve(classes.size());
  for (VertexSet c : classes) sizes.push_back(c.size());
  return sizes;
}

TwinClasses ComputeTwinClasses(const Graph& g) {
  TwinClasses result;
  VertexSet assigned;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (assigned.Contains(v)) continue;
    VertexSet cls = VertexSet::Single(v);
    for (Vertex u = v + 1; u < g.order(); ++u) {
      if (!assigned.Contains(u) && AreTwins(g, u, v)) cls.Insert(u);
    }
    for (Vertex a : cls) {
      for (Vertex b : cls) {
        if (a < b && !AreTwins(g, a, b)) {
          throw std::logic_error("twin relation not transitive: " +
                                 std::to_string(a) + " and " +
                                 std::to_string(b) + " share twin " +
                                 std::to_string(v));
        }
      }
    }
    assigned |= cls;
    result.classes.push_back(cls);
  }
  return result;
}

}  // namespace metricdim
