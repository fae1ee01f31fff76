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

#include "domkit/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "domkit/errors.hpp"

namespace domkit {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

// Per-target candidate lists, the transpose of CoverProblem::covers.
std::vector<Bitset> transpose_covers(const CoverProblem& p) {
  std::vector<Bitset> coverers(p.num_targets, Bitset(p.num_candidates()));
  for (std::size_t c = 0; c < p.num_candidates(); ++c) {
    p.covers[c].for_each([&](std::size_t t) { coverers[t].set(c); });
  }
  return coverers;
}

std::vector<std::optional<std::size_t>> self_candidates(const CoverProblem& p) {
  std::vector<std::optional<std::size_t>> out(p.num_targets);
  for (std::size_t c = 0; c < p.num_candidates(); ++c) {
    if (p.self_target[c]) out[*p.self_target[c]] = c;
  }
  return out;
}

// Residual coverage requirement shared by greedy, bounds and the search.
struct Residual {
  Bitset unsatisfied;               // over targets
  std::vector<std::size_t> demand;  // remaining units per target
  Bitset available;                 // candidates neither picked nor excluded
  std::vector<std::size_t> chosen;

  explicit Residual(const CoverProblem& p)
      : unsatisfied(p.num_targets),
        demand(p.num_targets, p.demand),
        available(p.num_candidates()) {
    unsatisfied.set_all();
    available.set_all();
  }

  std::size_t reduction(const CoverProblem& p, std::size_t c) const {
    if (p.demand == 1) return p.covers[c].intersection_count(unsatisfied);
    std::size_t total = 0;
    const auto self = p.self_target[c];
    p.covers[c].for_each([&](std::size_t t) {
      if (unsatisfied.test(t)) total += (self && *self == t) ? demand[t] : 1;
    });
    return total;
  }

  std::size_t total_demand(const CoverProblem& p) const {
    if (p.demand == 1) return unsatisfied.count();
    std::size_t total = 0;
    unsatisfied.for_each([&](std::size_t t) { total += demand[t]; });
    return total;
  }

  void pick(const CoverProblem& p, std::size_t c) {
    const auto self = p.self_target[c];
    p.covers[c].for_each([&](std::size_t t) {
      if (!unsatisfied.test(t)) return;
      if ((self && *self == t) || --demand[t] == 0) {
        demand[t] = 0;
        unsatisfied.reset(t);
      }
    });
    available.reset(c);
    chosen.push_back(c);
  }
};

CoverSolution run_greedy(const CoverProblem& p) {
  Residual r(p);
  while (r.unsatisfied.any()) {
    std::size_t best = p.num_candidates();
    std::size_t best_gain = 0;
    r.available.for_each([&](std::size_t c) {
      const std::size_t gain = r.reduction(p, c);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    });
    if (best_gain == 0) {
      std::ostringstream msg;
      msg << "target " << r.unsatisfied.find_first() << " cannot be dominated";
      throw InfeasibleError(msg.str());
    }
    r.pick(p, best);
  }
  CoverSolution out;
  out.value = r.chosen.size();
  out.chosen = std::move(r.chosen);
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

class BranchAndBound {
 public:
  BranchAndBound(const CoverProblem& p, std::size_t budget)
      : p_(p),
        coverers_(transpose_covers(p)),
        self_candidate_(self_candidates(p)),
        budget_(budget) {}

  CoverSolution run() {
    const auto start = Clock::now();
    for (std::size_t t = 0; t < p_.num_targets; ++t) {
      if (coverers_[t].none()) {
        std::ostringstream msg;
        msg << "target " << t << " has no candidate able to dominate it";
        throw InfeasibleError(msg.str());
      }
    }
    CoverSolution incumbent = run_greedy(p_);
    best_ = incumbent.value;
    best_set_ = incumbent.chosen;

    Residual root(p_);
    explore(root);

    CoverSolution out;
    out.value = best_;
    out.chosen = std::move(best_set_);
    std::sort(out.chosen.begin(), out.chosen.end());
    out.stats.nodes = nodes_;
    out.stats.elapsed = since(start);
    out.stats.proven_optimal = true;
    return out;
  }

 private:
  struct Bound {
    bool dead = false;
    std::size_t value = 0;
    std::size_t branch_target = 0;
  };

  // Max of the counting bound and the disjoint-coverer bound on the residual,
  // plus the fewest-coverers branching target.
  Bound bound(const Residual& r) const {
    Bound b;
    std::size_t max_gain = 0;
    r.available.for_each(
        [&](std::size_t c) { max_gain = std::max(max_gain, r.reduction(p_, c)); });
    if (max_gain == 0) {
      b.dead = true;
      return b;
    }
    const std::size_t total = r.total_demand(p_);
    const std::size_t counting = (total + max_gain - 1) / max_gain;

    struct Entry {
      std::size_t count;
      std::size_t target;
      Bitset options;
    };
    std::vector<Entry> entries;
    entries.reserve(r.unsatisfied.count());
    bool dead = false;
    r.unsatisfied.for_each([&](std::size_t t) {
      if (dead) return;
      Bitset options = coverers_[t] & r.available;
      const std::size_t count = options.count();
      const bool self_open = self_candidate_[t] && r.available.test(*self_candidate_[t]);
      if (count == 0 || (!self_open && count < r.demand[t])) {
        dead = true;
        return;
      }
      entries.push_back({count, t, std::move(options)});
    });
    if (dead) {
      b.dead = true;
      return b;
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& c) { return a.count < c.count; });
    b.branch_target = entries.front().target;

    Bitset used(p_.num_candidates());
    std::size_t disjoint = 0;
    for (const Entry& e : entries) {
      if (e.options.intersects(used)) continue;
      used |= e.options;
      const std::size_t t = e.target;
      const bool self_open = self_candidate_[t] && r.available.test(*self_candidate_[t]);
      disjoint += self_open ? 1 : r.demand[t];
    }
    b.value = std::max(counting, disjoint);
    return b;
  }

  void explore(Residual& r) {
    if (++nodes_ > budget_) {
      std::ostringstream msg;
      msg << "node budget of " << budget_ << " exhausted before proving optimality"
          << " (best so far " << best_ << ")";
      throw BudgetExhaustedError(msg.str(), nodes_ - 1);
    }
    if (r.unsatisfied.none()) {
      if (r.chosen.size() < best_) {
        best_ = r.chosen.size();
        best_set_ = r.chosen;
      }
      return;
    }
    if (r.chosen.size() + 1 >= best_) return;
    const Bound b = bound(r);
    if (b.dead || r.chosen.size() + b.value >= best_) return;

    std::vector<std::pair<std::size_t, std::size_t>> children;  // (gain, candidate)
    (coverers_[b.branch_target] & r.available).for_each([&](std::size_t c) {
      children.emplace_back(r.reduction(p_, c), c);
    });
    std::stable_sort(children.begin(), children.end(),
                     [](const auto& a, const auto& c) { return a.first > c.first; });

    // Child i takes candidate c_i and excludes c_1..c_{i-1}.
    for (const auto& [gain, c] : children) {
      if (r.chosen.size() + 1 >= best_) break;
      Residual child = r;
      child.pick(p_, c);
      explore(child);
      r.available.reset(c);
    }
  }

  const CoverProblem& p_;
  std::vector<Bitset> coverers_;
  std::vector<std::optional<std::size_t>> self_candidate_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t best_ = 0;
  std::vector<std::size_t> best_set_;
};

void validate(const DominationInstance& inst) {
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
  if (inst.dominating == ElementDomain::kE && inst.dominated != ElementDomain::kE) {
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        std::ostringstream msg;
        msg << "no edge can dominate isolated vertex v" << v << "; gamma_{E,"
            << to_string(inst.dominated) << "} is undefined";
        throw InfeasibleError(msg.str());
      }
    }
  }
}

SolveResult to_result(const DominationInstance& inst, CoverSolution sol) {
  SolveResult out;
  out.value = sol.value;
  out.stats = sol.stats;
  out.witness.reserve(sol.chosen.size());
  for (std::size_t c : sol.chosen) {
    out.witness.push_back(element_at(inst.graph, inst.dominating, c));
  }
  return out;
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("DOMKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultNodeBudget;
}

CoverProblem make_cover_problem(const DominationInstance& inst) {
  validate(inst);
  const Graph& g = inst.graph;
  CoverProblem p;
  p.num_targets = universe_size(g, inst.dominated);
  p.demand = inst.k;
  for (const Element& a : elements(g, inst.dominating)) {
    p.covers.push_back(cover_set(g, a, inst.dominated));
    p.self_target.push_back(contains(inst.dominated, a)
                                ? std::optional(universe_index(g, inst.dominated, a))
                                : std::nullopt);
  }
  return p;
}

CoverProblem restricted_cover_problem(const Graph& host,
                                      std::span<const std::size_t> candidates,
                                      std::span<const std::size_t> targets) {
  CoverProblem p;
  p.num_targets = targets.size();
  for (std::size_t cand : candidates) {
    Bitset cover(targets.size());
    std::optional<std::size_t> self;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (targets[j] == cand) {
        cover.set(j);
        self = j;
      } else if (host.adjacent(cand, targets[j])) {
        cover.set(j);
      }
    }
    p.covers.push_back(std::move(cover));
    p.self_target.push_back(self);
  }
  return p;
}

CoverSolution solve_cover(const CoverProblem& problem, std::size_t budget) {
  return BranchAndBound(problem, budget).run();
}

CoverSolution greedy_cover(const CoverProblem& problem) { return run_greedy(problem); }

std::size_t disjoint_lower_bound(const CoverProblem& problem) {
  const auto coverers = transpose_covers(problem);
  std::vector<std::size_t> order(problem.num_targets);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return coverers[a].count() < coverers[b].count();
  });
  Bitset used(problem.num_candidates());
  std::size_t total = 0;
  for (std::size_t t : order) {
    if (coverers[t].none()) throw InfeasibleError("target cannot be dominated");
    if (coverers[t].intersects(used)) continue;
    used |= coverers[t];
    ++total;
  }
  return total;
}

SolveResult domination_number(const DominationInstance& inst, std::size_t budget) {
  return to_result(inst, solve_cover(make_cover_problem(inst), budget));
}

SolveResult k_domination_number(const Graph& g, std::size_t k, std::size_t budget) {
  return domination_number({g, ElementDomain::kV, ElementDomain::kV, k}, budget);
}

std::size_t greedy_upper_bound(const DominationInstance& inst) {
  return greedy_cover(make_cover_problem(inst)).value;
}

std::size_t disjoint_lb(const DominationInstance& inst) {
  return disjoint_lower_bound(make_cover_problem(inst));
}

FundamentalProfile::FundamentalProfile(std::array<std::array<SolveResult, 3>, 3> results)
    : results_(std::move(results)) {}

bool FundamentalProfile::grouping_consistent() const {
  using D = ElementDomain;
  return value(D::kVE, D::kV) == value(D::kV, D::kV) &&
         value(D::kVE, D::kE) == value(D::kE, D::kE) &&
         value(D::kE, D::kV) == value(D::kE, D::kVE) &&
         value(D::kV, D::kE) == value(D::kV, D::kVE);
}

std::size_t FundamentalProfile::total_nodes() const {
  std::size_t total = 0;
  for (const auto& row : results_) {
    for (const auto& r : row) total += r.stats.nodes;
  }
  return total;
}

std::chrono::microseconds FundamentalProfile::total_elapsed() const {
  std::chrono::microseconds total{0};
  for (const auto& row : results_) {
    for (const auto& r : row) total += r.stats.elapsed;
  }
  return total;
}

FundamentalProfile nine_numbers(const Graph& g, std::size_t budget) {
  if (g.order() < 2) {
    throw DefinednessError("the fundamental numbers need a nontrivial graph (n >= 2)");
  }
  if (g.has_isolated_vertex()) {
    throw DefinednessError(
        "gamma_{E,V} and gamma_{E,VE} are undefined for graphs with isolated vertices");
  }
  std::array<std::array<SolveResult, 3>, 3> results;
  for (ElementDomain u : kAllDomains) {
    for (ElementDomain w : kAllDomains) {
      results[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] =
          domination_number({g, u, w, 1}, budget);
    }
  }
  FundamentalProfile profile(std::move(results));
  if (is_connected(g) && !profile.grouping_consistent()) {
    throw std::logic_error("fundamental profile violates the five-value grouping");
  }
  return profile;
}

}  // namespace domkit
