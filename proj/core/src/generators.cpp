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

#include "domkit/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "domkit/errors.hpp"

namespace domkit {
namespace {

void require_positive(std::size_t n, const char* family) {
  if (n == 0) throw GraphError(std::string(family) + ": n must be at least 1");
}

// 53 random mantissa bits; std::uniform_real_distribution is not portable.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit_interval(rng) * static_cast<double>(bound));
}

std::vector<VertexPair> sample_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<VertexPair> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (unit_interval(rng) < p) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

void check_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "edge probability must lie in (0, 1], got " << p;
    throw GraphError(msg.str());
  }
}

constexpr int kRejectionAttempts = 64;

}  // namespace

Graph complete(std::size_t n) {
  require_positive(n, "complete");
  std::vector<VertexPair> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return Graph(n, pairs);
}

Graph star(std::size_t n) {
  require_positive(n, "star");
  std::vector<VertexPair> pairs;
  for (std::size_t leaf = 1; leaf <= n; ++leaf) pairs.emplace_back(0, leaf);
  return Graph(n + 1, pairs);
}

Graph ridged(std::size_t n) {
  require_positive(n, "ridged");
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(i, n + i);
    pairs.emplace_back(i, 2 * n + i);
  }
  return Graph(3 * n, pairs);
}

Graph path(std::size_t n) {
  require_positive(n, "path");
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle: n must be at least 3");
  std::vector<VertexPair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(n, pairs);
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  require_positive(n, "random");
  check_probability(p);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
    Graph g(n, sample_gnp(n, p, rng));
    if (is_connected(g)) return g;
  }
  // Random spanning tree over a shuffled vertex order, then G(n, p) on top.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
  std::vector<VertexPair> pairs;
  for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(order[i], order[below(rng, i)]);
  const auto extra = sample_gnp(n, p, rng);
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  return Graph(n, pairs);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  require_positive(n, "random");
  std::mt19937_64 rng(seed);
  return Graph(n, sample_gnp(n, p, rng));
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(std::size_t n, std::size_t limit)
    : n_(n) {
  if (n == 0) throw GraphError("enumeration needs n >= 1");
  if (n > limit || n > 11) {
    std::ostringstream msg;
    msg << "exhaustive enumeration of n=" << n << " exceeds the limit of " << limit
        << " vertices (2^" << n * (n - 1) / 2
        << " edge subsets); raise the limit explicitly or use random sampling";
    throw GraphError(msg.str());
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  std::vector<VertexPair> chosen;
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    chosen.clear();
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if ((mask >> i) & 1u) chosen.push_back(pairs_[i]);
    }
    if (chosen.size() + 1 < n_) continue;  // too few edges to connect
    Graph g(n_, chosen);
    if (is_connected(g)) return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t limit) {
  ConnectedGraphEnumerator it(n, limit);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> connected_corpus(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto batch = enumerate_connected(n, std::max(hi, kDefaultEnumerationLimit));
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "complete") return Family::kComplete;
  if (name == "star") return Family::kStar;
  if (name == "ridged") return Family::kRidged;
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "random") return Family::kRandomConnected;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kComplete:
      return "complete";
    case Family::kStar:
      return "star";
    case Family::kRidged:
      return "ridged";
    case Family::kPath:
      return "path";
    case Family::kCycle:
      return "cycle";
    case Family::kRandomConnected:
      return "random";
  }
  return "?";
}

Graph make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kComplete:
      return complete(spec.n);
    case Family::kStar:
      return star(spec.n);
    case Family::kRidged:
      return ridged(spec.n);
    case Family::kPath:
      return path(spec.n);
    case Family::kCycle:
      return cycle(spec.n);
    case Family::kRandomConnected:
      return random_connected(spec.n, spec.p, spec.seed);
  }
  throw GraphError("unknown family");
}

}  // namespace domkit
