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

#ifndef DOMKIT_GENERATORS_HPP_
#define DOMKIT_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domkit/graph.hpp"

namespace domkit {

Graph complete(std::size_t n);

// K_{1,n}; vertex 0 is the center.
Graph star(std::size_t n);

// R_{3n}: spine u_1..u_n with two pendant leaves v_i, w_i on each u_i.
// Layout: u_i -> i-1, v_i -> n+i-1, w_i -> 2n+i-1.
Graph ridged(std::size_t n);

Graph path(std::size_t n);
// Throws GraphError for n < 3.
Graph cycle(std::size_t n);

// Erdos-Renyi G(n, p) resampled until connected; after a bounded number of
// attempts a random spanning tree is laid down first. Deterministic in
// (n, p, seed) on every platform.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

// Uniform-ish G(n, p) with no connectivity requirement (graph6 fuzzing).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

inline constexpr std::size_t kDefaultEnumerationLimit = 6;

// Every connected labeled graph on n vertices. Edge subsets are visited as
// bitmasks over the lexicographic pair list (0,1),(0,2),...,(n-2,n-1) in
// increasing mask order.
class ConnectedGraphEnumerator {
 public:
  // Throws GraphError when n == 0 or n > limit.
  explicit ConnectedGraphEnumerator(std::size_t n,
                                    std::size_t limit = kDefaultEnumerationLimit);

  std::optional<Graph> next();

 private:
  std::size_t n_;
  std::vector<VertexPair> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
};

std::vector<Graph> enumerate_connected(std::size_t n,
                                       std::size_t limit = kDefaultEnumerationLimit);

// All connected labeled graphs with lo <= n <= hi, ascending n.
std::vector<Graph> connected_corpus(std::size_t lo, std::size_t hi);

enum class Family { kComplete, kStar, kRidged, kPath, kCycle, kRandomConnected };

struct FamilySpec {
  Family family = Family::kComplete;
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

// Throws GraphError on invalid parameters (n == 0, p outside (0, 1]).
Graph make_family(const FamilySpec& spec);

}  // namespace domkit

#endif  // DOMKIT_GENERATORS_HPP_
