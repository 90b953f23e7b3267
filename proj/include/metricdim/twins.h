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

#ifndef METRICDIM_TWINS_H_
#define METRICDIM_TWINS_H_

#include <vector>

#include "metricdim/graph.h"
#include "metricdim/vertex_set.h"

namespace metricdim {

// u and v are twins when N(u) \ {v} == N(v) \ {u}.
bool AreTwins(const Graph& g, Vertex u, Vertex v);

// Partition of the vertex set into maximal classes of mutual twins, ordered
// by smallest member.
struct TwinClasses {
  std::vector<VertexSet> classes;

  bool HasTwins() const;
  // Σ (|class| - 1): every resolving set holds all but one vertex of each
  // class.
  int ForcedCount() const;
  std::vector<int> Sizes() const;
};

// Throws std::logic_error if a class is not pairwise twin, which would mean
// the twin relation is not transitive on `g`.
TwinClasses ComputeTwinClasses(const Graph& g);

}  // namespace metricdim

#endif  // METRICDIM_TWINS_H_
