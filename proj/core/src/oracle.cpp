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

// Exhaustive reference for the branch and bound. Deliberately built only on
// `associated` and plain element lists; nothing here touches cover sets.

#include <algorithm>
#include <sstream>

#include "domkit/errors.hpp"
#include "domkit/solver.hpp"

namespace domkit {

bool is_dominating(const Graph& g, ElementDomain dominating, ElementDomain dominated,
                   std::span<const Element> chosen, std::size_t k) {
  std::vector<Element> set(chosen.begin(), chosen.end());
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) return false;
  for (const Element& a : set) {
    if (!contains(dominating, a)) return false;
    const std::size_t limit = a.is_vertex() ? g.order() : g.size();
    if (a.index >= limit) return false;
  }
  for (const Element& w : elements(g, dominated)) {
    if (std::binary_search(set.begin(), set.end(), w)) continue;
    std::size_t hits = 0;
    for (const Element& a : set) {
      if (associated(g, w, a) && ++hits >= k) break;
    }
    if (hits < k) return false;
  }
  return true;
}

std::size_t naive_oracle(const DominationInstance& inst, std::size_t max_universe) {
  const Graph& g = inst.graph;
  if (inst.k == 0) throw InvalidInstanceError("multiplicity k must be at least 1");
  if (inst.k > 1 &&
      (inst.dominating != ElementDomain::kV || inst.dominated != ElementDomain::kV)) {
    throw InvalidInstanceError("k-domination with k > 1 is defined only for U = W = V");
  }
  if ((inst.dominating == ElementDomain::kE || inst.dominated == ElementDomain::kE) &&
      g.size() == 0) {
    throw InvalidInstanceError("edge domain is empty: the graph has no edges");
  }
  const std::vector<Element> universe = elements(g, inst.dominating);
  if (universe.size() > max_universe) {
    std::ostringstream msg;
    msg << "oracle universe |U| = " << universe.size() << " exceeds the guard of "
        << max_universe;
    throw UniverseTooLargeError(msg.str());
  }

  const std::size_t total = universe.size();
  std::vector<Element> subset;
  for (std::size_t size = 0; size <= total; ++size) {
    // Lexicographic walk over size-element index combinations.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      subset.clear();
      for (std::size_t i : idx) subset.push_back(universe[i]);
      if (is_dominating(g, inst.dominating, inst.dominated, subset, inst.k)) return size;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == total - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw InfeasibleError("no subset of U dominates W");
}

}  // namespace domkit
