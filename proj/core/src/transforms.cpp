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

#include "domkit/transforms.hpp"

#include <numeric>

#include "domkit/errors.hpp"

namespace domkit {

LineGraphMap line_graph(const Graph& g) {
  const std::size_t m = g.size();
  if (m == 0) throw GraphError("line graph undefined for empty graphs");

  std::vector<VertexPair> pairs;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto star = g.incident_edges(v).indices();
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (std::size_t j = i + 1; j < star.size(); ++j) pairs.emplace_back(star[i], star[j]);
    }
  }
  std::vector<std::size_t> map(m);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return LineGraphMap{Graph(m, pairs), std::move(map)};
}

TotalGraphMap total_graph(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  std::vector<VertexPair> pairs;
  pairs.reserve(3 * m);
  for (std::size_t j = 0; j < m; ++j) {
    const Edge& e = g.edge(j);
    pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(e.u, n + j);
    pairs.emplace_back(e.v, n + j);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto star = g.incident_edges(v).indices();
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (std::size_t j = i + 1; j < star.size(); ++j) {
        pairs.emplace_back(n + star[i], n + star[j]);
      }
    }
  }
  TotalGraphMap out{Graph(n + m, pairs), std::vector<std::size_t>(n),
                    std::vector<std::size_t>(m)};
  std::iota(out.vertex_image.begin(), out.vertex_image.end(), std::size_t{0});
  std::iota(out.edge_image.begin(), out.edge_image.end(), n);
  return out;
}

Graph induced_subgraph(const Graph& host, const std::vector<std::size_t>& vertices) {
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (host.adjacent(vertices[i], vertices[j])) pairs.emplace_back(i, j);
    }
  }
  return Graph(vertices.size(), pairs);
}

}  // namespace domkit
