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

#ifndef DOMKIT_SOLVER_HPP_
#define DOMKIT_SOLVER_HPP_

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "domkit/bitset.hpp"
#include "domkit/graph.hpp"

namespace domkit {

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

// kDefaultNodeBudget unless DOMKIT_BUDGET holds a positive integer.
std::size_t default_budget();

// Find a smallest A subset of U such that every element of W outside A is
// associated with at least k members of A. k > 1 is only meaningful for
// U = W = V.
struct DominationInstance {
  Graph graph;
  ElementDomain dominating = ElementDomain::kV;
  ElementDomain dominated = ElementDomain::kV;
  std::size_t k = 1;
};

struct SolveStats {
  std::size_t nodes = 0;
  std::chrono::microseconds elapsed{0};
  bool proven_optimal = false;
};

struct SolveResult {
  std::size_t value = 0;
  std::vector<Element> witness;  // ascending element order
  SolveStats stats;
};

// Set multicover over abstract candidates and targets. Picking candidate c
// fully satisfies its own target (self_target[c]) and contributes one unit of
// coverage to every other target in covers[c]. Each target needs `demand`
// units unless it is itself picked.
struct CoverProblem {
  std::size_t num_targets = 0;
  std::vector<Bitset> covers;
  std::vector<std::optional<std::size_t>> self_target;
  std::size_t demand = 1;

  std::size_t num_candidates() const { return covers.size(); }
};

struct CoverSolution {
  std::size_t value = 0;
  std::vector<std::size_t> chosen;  // ascending candidate indices
  SolveStats stats;
};

// Validates the instance and lowers it to a CoverProblem whose candidates are
// the universe positions of U and whose targets are those of W.
// Throws InvalidInstanceError or InfeasibleError.
CoverProblem make_cover_problem(const DominationInstance& inst);

// Vertex domination inside `host`, restricted to the given candidate and
// target vertex lists (candidate i / target j refer to positions in those
// lists). Coverage is closed-neighborhood adjacency in `host`.
CoverProblem restricted_cover_problem(const Graph& host,
                                      std::span<const std::size_t> candidates,
                                      std::span<const std::size_t> targets);

// Exact branch and bound. Throws InfeasibleError when some target can never
// be satisfied and BudgetExhaustedError past `budget` search nodes.
CoverSolution solve_cover(const CoverProblem& problem, std::size_t budget);

// Repeatedly takes the candidate with the largest residual coverage (ties to
// the lowest index). Throws InfeasibleError.
CoverSolution greedy_cover(const CoverProblem& problem);

// Targets with pairwise-disjoint coverer sets, chosen greedily by fewest
// coverers first; each needs its own member of any solution.
std::size_t disjoint_lower_bound(const CoverProblem& problem);

SolveResult domination_number(const DominationInstance& inst,
                              std::size_t budget = default_budget());

// gamma_k: V-V domination where each vertex outside S needs k neighbors in S.
SolveResult k_domination_number(const Graph& g, std::size_t k,
                                std::size_t budget = default_budget());

std::size_t greedy_upper_bound(const DominationInstance& inst);
std::size_t disjoint_lb(const DominationInstance& inst);

// Exhaustive search over subsets of U in order of increasing size, checking
// feasibility straight from `associated`. Shares nothing with the branch and
// bound. Throws UniverseTooLargeError when |U| > max_universe.
inline constexpr std::size_t kOracleUniverseLimit = 20;
std::size_t naive_oracle(const DominationInstance& inst,
                         std::size_t max_universe = kOracleUniverseLimit);

// Direct check that `chosen` (elements of U) dominates W with multiplicity k.
bool is_dominating(const Graph& g, ElementDomain dominating, ElementDomain dominated,
                   std::span<const Element> chosen, std::size_t k = 1);

// All nine gamma_{U,W}, indexed [U][W] in V, E, VE order.
class FundamentalProfile {
 public:
  explicit FundamentalProfile(std::array<std::array<SolveResult, 3>, 3> results);

  const SolveResult& result(ElementDomain u, ElementDomain w) const {
    return results_[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
  }
  std::size_t value(ElementDomain u, ElementDomain w) const { return result(u, w).value; }

  std::size_t gamma() const { return value(ElementDomain::kV, ElementDomain::kV); }
  std::size_t gamma_ve() const { return value(ElementDomain::kV, ElementDomain::kE); }
  std::size_t gamma_ev() const { return value(ElementDomain::kE, ElementDomain::kV); }
  std::size_t gamma_prime() const { return value(ElementDomain::kE, ElementDomain::kE); }
  std::size_t gamma_dprime() const { return value(ElementDomain::kVE, ElementDomain::kVE); }

  // The four pairings of raw values onto the five canonical ones.
  bool grouping_consistent() const;

  std::size_t total_nodes() const;
  std::chrono::microseconds total_elapsed() const;

 private:
  std::array<std::array<SolveResult, 3>, 3> results_;
};

// Throws DefinednessError when g is trivial or has an isolated vertex, and
// std::logic_error if a connected graph's values break the grouping.
FundamentalProfile nine_numbers(const Graph& g, std::size_t budget = default_budget());

}  // namespace domkit

#endif  // DOMKIT_SOLVER_HPP_
