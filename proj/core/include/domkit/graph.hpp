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

#ifndef DOMKIT_GRAPH_HPP_
#define DOMKIT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domkit/bitset.hpp"

namespace domkit {

struct Edge {
  std::size_t u;
  std::size_t v;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexPair = std::pair<std::size_t, std::size_t>;

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored with
// u < v, deduplicated and sorted lexicographically; the position in that
// order is the edge index. Each vertex carries an adjacency bitset over
// vertices and an incidence bitset over edge indices.
class Graph {
 public:
  // Throws GraphError for n == 0, an out-of-range endpoint, or a self-loop.
  // Pairs may be given in either orientation; repeats collapse.
  Graph(std::size_t n, std::span<const VertexPair> edges);
  Graph(std::size_t n, std::initializer_list<VertexPair> edges)
      : Graph(n, std::span<const VertexPair>(edges.begin(), edges.size())) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;

  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
  const Bitset& incident_edges(std::size_t v) const { return incidence_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }

  std::size_t degree(std::size_t v) const { return degrees_[v]; }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool has_isolated_vertex() const { return min_degree() == 0; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Bitset> adjacency_;
  std::vector<Bitset> incidence_;
  std::vector<std::size_t> degrees_;
};

// n == 1 counts as connected.
bool is_connected(const Graph& g);

// A vertex or an edge of a graph.
struct Element {
  enum class Kind : std::uint8_t { kVertex, kEdge };

  Kind kind = Kind::kVertex;
  std::size_t index = 0;

  static constexpr Element vertex(std::size_t i) { return {Kind::kVertex, i}; }
  static constexpr Element edge(std::size_t j) { return {Kind::kEdge, j}; }
  constexpr bool is_vertex() const { return kind == Kind::kVertex; }
  constexpr bool is_edge() const { return kind == Kind::kEdge; }

  friend auto operator<=>(const Element&, const Element&) = default;
};

// "v3" for vertices, "e(0,1)" for edges.
std::string to_string(const Graph& g, const Element& e);

// Which elements a dominating set is drawn from, or which must be dominated.
enum class ElementDomain : std::uint8_t { kV, kE, kVE };

std::string_view to_string(ElementDomain d);
std::optional<ElementDomain> parse_domain(std::string_view text);

inline constexpr ElementDomain kAllDomains[] = {ElementDomain::kV, ElementDomain::kE,
                                                ElementDomain::kVE};

bool contains(ElementDomain d, const Element& e);

// Elements of a domain in universe order. VE lists vertices 0..n-1 followed
// by edges, so edge j sits at position n + j.
std::size_t universe_size(const Graph& g, ElementDomain d);
std::size_t universe_index(const Graph& g, ElementDomain d, const Element& e);
Element element_at(const Graph& g, ElementDomain d, std::size_t position);
std::vector<Element> elements(const Graph& g, ElementDomain d);

// Distinct elements that are adjacent or incident. Never true for a == b.
bool associated(const Graph& g, const Element& a, const Element& b);

// {x in W : x == a or x associated with a}, indexed by universe position in W.
Bitset cover_set(const Graph& g, const Element& a, ElementDomain w);

}  // namespace domkit

#endif  // DOMKIT_GRAPH_HPP_
