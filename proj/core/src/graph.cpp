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

#include "domkit/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "domkit/errors.hpp"

namespace domkit {

Graph::Graph(std::size_t n, std::span<const VertexPair> edges) : n_(n) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      std::ostringstream msg;
      msg << "edge (" << a << "," << b << ") has an endpoint outside 0.." << n - 1;
      throw GraphError(msg.str());
    }
    if (a == b) {
      std::ostringstream msg;
      msg << "edge (" << a << "," << b << ") is a self-loop";
      throw GraphError(msg.str());
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(n, Bitset(n));
  incidence_.assign(n, Bitset(edges_.size()));
  degrees_.assign(n, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[u].set(v);
    adjacency_[v].set(u);
    incidence_[u].set(i);
    incidence_[v].set(i);
    ++degrees_[u];
    ++degrees_[v];
  }
}

std::optional<std::size_t> Graph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::min_degree() const {
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

bool is_connected(const Graph& g) {
  Bitset seen(g.order());
  Bitset frontier(g.order());
  seen.set(0);
  frontier.set(0);
  while (frontier.any()) {
    Bitset next(g.order());
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == g.order();
}

std::string to_string(const Graph& g, const Element& e) {
  std::ostringstream out;
  if (e.is_vertex()) {
    out << 'v' << e.index;
  } else {
    const Edge& ed = g.edge(e.index);
    out << "e(" << ed.u << ',' << ed.v << ')';
  }
  return out.str();
}

std::string_view to_string(ElementDomain d) {
  switch (d) {
    case ElementDomain::kV:
      return "V";
    case ElementDomain::kE:
      return "E";
    case ElementDomain::kVE:
      return "VE";
  }
  return "?";
}

std::optional<ElementDomain> parse_domain(std::string_view text) {
  if (text == "V" || text == "v") return ElementDomain::kV;
  if (text == "E" || text == "e") return ElementDomain::kE;
  if (text == "VE" || text == "ve") return ElementDomain::kVE;
  return std::nullopt;
}

bool contains(ElementDomain d, const Element& e) {
  switch (d) {
    case ElementDomain::kV:
      return e.is_vertex();
    case ElementDomain::kE:
      return e.is_edge();
    case ElementDomain::kVE:
      return true;
  }
  return false;
}

std::size_t universe_size(const Graph& g, ElementDomain d) {
  switch (d) {
    case ElementDomain::kV:
      return g.order();
    case ElementDomain::kE:
      return g.size();
    case ElementDomain::kVE:
      return g.order() + g.size();
  }
  return 0;
}

std::size_t universe_index(const Graph& g, ElementDomain d, const Element& e) {
  assert(contains(d, e));
  if (d == ElementDomain::kVE && e.is_edge()) return g.order() + e.index;
  return e.index;
}

Element element_at(const Graph& g, ElementDomain d, std::size_t position) {
  switch (d) {
    case ElementDomain::kV:
      return Element::vertex(position);
    case ElementDomain::kE:
      return Element::edge(position);
    case ElementDomain::kVE:
      return position < g.order() ? Element::vertex(position)
                                  : Element::edge(position - g.order());
  }
  return {};
}

std::vector<Element> elements(const Graph& g, ElementDomain d) {
  std::vector<Element> out;
  const std::size_t count = universe_size(g, d);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(element_at(g, d, i));
  return out;
}

bool associated(const Graph& g, const Element& a, const Element& b) {
  if (a == b) return false;
  if (a.is_vertex() && b.is_vertex()) return g.adjacent(a.index, b.index);
  if (a.is_edge() && b.is_edge()) {
    const Edge& x = g.edge(a.index);
    const Edge& y = g.edge(b.index);
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
  }
  const Element& vert = a.is_vertex() ? a : b;
  const Edge& ed = g.edge(a.is_vertex() ? b.index : a.index);
  return ed.u == vert.index || ed.v == vert.index;
}

Bitset cover_set(const Graph& g, const Element& a, ElementDomain w) {
  const std::size_t n = g.order();
  Bitset out(universe_size(g, w));
  const bool want_v = w != ElementDomain::kE;
  const bool want_e = w != ElementDomain::kV;
  const std::size_t edge_offset = w == ElementDomain::kVE ? n : 0;

  if (a.is_vertex()) {
    const std::size_t v = a.index;
    if (want_v) {
      g.neighbors(v).for_each([&](std::size_t u) { out.set(u); });
      out.set(v);
    }
    if (want_e) {
      g.incident_edges(v).for_each([&](std::size_t j) { out.set(edge_offset + j); });
    }
  } else {
    const Edge& ed = g.edge(a.index);
    if (want_v) {
      out.set(ed.u);
      out.set(ed.v);
    }
    if (want_e) {
      // Self plus every edge sharing an endpoint.
      g.incident_edges(ed.u).for_each([&](std::size_t j) { out.set(edge_offset + j); });
      g.incident_edges(ed.v).for_each([&](std::size_t j) { out.set(edge_offset + j); });
    }
  }
  return out;
}

}  // namespace domkit
