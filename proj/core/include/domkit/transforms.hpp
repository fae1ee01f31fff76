// Copyright 2026 The domkit Authors
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

#ifndef DOMKIT_TRANSFORMS_HPP_
#define DOMKIT_TRANSFORMS_HPP_

#include <cstddef>
#include <vector>

#include "domkit/graph.hpp"

namespace domkit {

// L(G) with the edge-index -> vertex map. The map is the identity under
// canonical edge indexing but is kept explicit for callers.
struct LineGraphMap {
  Graph result;
  std::vector<std::size_t> edge_to_vertex;
};

// T(G) on vertices 0..n-1 (images of V) followed by n..n+m-1 (images of E).
struct TotalGraphMap {
  Graph result;
  std::vector<std::size_t> vertex_image;
  std::vector<std::size_t> edge_image;

  std::size_t image(const Element& e) const {
    return e.is_vertex() ? vertex_image[e.index] : edge_image[e.index];
  }
};

// Throws GraphError when g has no edges.
LineGraphMap line_graph(const Graph& g);

TotalGraphMap total_graph(const Graph& g);

// Subgraph of `host` induced by `vertices`, relabelled 0..k-1 in the given
// order. Used to compare G* and L* against G and L(G).
Graph induced_subgraph(const Graph& host, const std::vector<std::size_t>& vertices);

}  // namespace domkit

#endif  // DOMKIT_TRANSFORMS_HPP_
