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

#ifndef METRICDIM_GRAPH6_H_
#define METRICDIM_GRAPH6_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "metricdim/graph.h"

namespace metricdim {

// graph6 parse failure; offset() is the index of the offending byte.
class Graph6Error : public GraphError {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Decodes one graph6 line (a trailing newline is tolerated; the optional
// ">>graph6<<" header is not). Padding bits must be zero.
Graph ParseGraph6(std::string_view line);

// Encodes without a trailing newline.
std::string EmitGraph6(const Graph& g);

}  // namespace metricdim

#endif  // METRICDIM_GRAPH6_H_
