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

#include <cstdlib>

#include "brute_force.hpp"
#include "domkit/errors.hpp"
#include "domkit/generators.hpp"
#include "domkit/transforms.hpp"
#include "gtest/gtest.h"

namespace domkit {
namespace {

using D = ElementDomain;
using testing::brute_gamma;
using testing::raw_from;

std::size_t solve(const Graph& g, D u, D w, std::size_t k = 1) {
  return domination_number({g, u, w, k}).value;
}

int kind(D d) { return static_cast<int>(d); }

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (Graph& g : enumerate_connected(n)) out.push_back(std::move(g));
  }
  return out;
}

TEST(DominationNumberTest, CompleteGraphClosedForms) {
  EXPECT_EQ(solve(complete(5), D::kV, D::kV), 1u);
  EXPECT_EQ(solve(complete(6), D::kE, D::kE), 3u);
  EXPECT_EQ(solve(complete(5), D::kE, D::kV), 3u);
  EXPECT_EQ(solve(complete(4), D::kV, D::kE), 3u);
}

TEST(DominationNumberTest, StarAndRidged) {
  EXPECT_EQ(solve(star(7), D::kV, D::kE), 1u);
  EXPECT_EQ(solve(star(7), D::kE, D::kV), 7u);
  EXPECT_EQ(solve(ridged(6), D::kV, D::kV), 6u);
  EXPECT_EQ(solve(ridged(6), D::kE, D::kE), 3u);
}

TEST(DominationNumberTest, TrivialGraph) {
  const SolveResult r = domination_number({Graph(1, {}), D::kV, D::kV, 1});
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.witness, std::vector<Element>{Element::vertex(0)});
  EXPECT_TRUE(r.stats.proven_optimal);
}

TEST(DominationNumberTest, CycleFiveAgainstBruteForce) {
  const auto raw = testing::raw_cycle(5);
  ASSERT_EQ(brute_gamma(raw, 0, 0), 2);
  ASSERT_EQ(brute_gamma(raw, 0, 0, 2), 3);
  EXPECT_EQ(solve(cycle(5), D::kV, D::kV), 2u);
  EXPECT_EQ(k_domination_number(cycle(5), 2).value, 3u);
}

TEST(DominationNumberTest, KDominationAgainstBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected(5 + seed % 5, 0.45, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      const SolveResult r = k_domination_number(g, k);
      EXPECT_EQ(static_cast<int>(r.value), brute_gamma(raw_from(g), 0, 0, static_cast<int>(k)))
          << "seed " << seed << " k " << k;
      EXPECT_TRUE(is_dominating(g, D::kV, D::kV, r.witness, k));
    }
  }
}

TEST(DominationNumberTest, KOneMatchesStandardPath) {
  for (const Graph& g : small_corpus()) {
    EXPECT_EQ(k_domination_number(g, 1).value, solve(g, D::kV, D::kV));
  }
}

TEST(DominationNumberTest, Errors) {
  const Graph isolated(3, {{0, 1}});
  EXPECT_THROW(solve(isolated, D::kE, D::kV), InfeasibleError);
  EXPECT_THROW(solve(isolated, D::kE, D::kVE), InfeasibleError);
  EXPECT_EQ(solve(isolated, D::kE, D::kE), 1u);
  EXPECT_THROW(solve(complete(4), D::kE, D::kE, 2), InvalidInstanceError);
  EXPECT_THROW(solve(complete(4), D::kV, D::kV, 0), InvalidInstanceError);
  EXPECT_THROW(solve(Graph(2, {}), D::kV, D::kE), InvalidInstanceError);
  EXPECT_THROW(domination_number({complete(8), D::kE, D::kE, 1}, 2), BudgetExhaustedError);
}

TEST(DominationNumberTest, WitnessesFeasibleAndSized) {
  for (const Graph& g : small_corpus()) {
    for (D u : kAllDomains) {
      for (D w : kAllDomains) {
        const SolveResult r = domination_number({g, u, w, 1});
        EXPECT_EQ(r.witness.size(), r.value);
        EXPECT_TRUE(is_dominating(g, u, w, r.witness));
        EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
      }
    }
  }
}

TEST(DominationNumberTest, AgreesWithTestBruteForce) {
  for (const Graph& g : small_corpus()) {
    for (D u : kAllDomains) {
      for (D w : kAllDomains) {
        EXPECT_EQ(static_cast<int>(solve(g, u, w)), brute_gamma(raw_from(g), kind(u), kind(w)));
      }
    }
  }
}

TEST(DominationNumberTest, AgreesWithNaiveOracleOnRandomGraphs) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_connected(4 + seed % 6, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
    for (D u : kAllDomains) {
      if (universe_size(g, u) > 16) continue;
      for (D w : kAllDomains) {
        const DominationInstance inst{g, u, w, 1};
        EXPECT_EQ(domination_number(inst).value, naive_oracle(inst)) << "seed " << seed;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(DominationNumberTest, LineAndTotalGraphIdentities) {
  for (const Graph& g : small_corpus()) {
    EXPECT_EQ(solve(g, D::kE, D::kE), solve(line_graph(g).result, D::kV, D::kV));
    EXPECT_EQ(solve(g, D::kVE, D::kVE), solve(total_graph(g).result, D::kV, D::kV));
  }
}

TEST(DominationNumberTest, AddingAnEdgeNeverIncreasesGamma) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_connected(8, 0.25, seed);
    const std::size_t before = solve(g, D::kV, D::kV);
    for (std::size_t u = 0; u < g.order(); ++u) {
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v)) continue;
        std::vector<VertexPair> pairs;
        for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
        pairs.emplace_back(u, v);
        EXPECT_LE(solve(Graph(g.order(), pairs), D::kV, D::kV), before);
      }
    }
  }
}

TEST(NaiveOracleTest, Examples) {
  EXPECT_EQ(naive_oracle({complete(2), D::kV, D::kV, 1}), 1u);
  // Cross-checked against floor(4/2).
  EXPECT_EQ(naive_oracle({complete(4), D::kE, D::kE, 1}), 2u);
  const DominationInstance p4{path(4), D::kV, D::kVE, 1};
  EXPECT_EQ(naive_oracle(p4), domination_number(p4).value);
  EXPECT_EQ(naive_oracle({cycle(5), D::kV, D::kV, 2}), 3u);
}

TEST(NaiveOracleTest, Guards) {
  EXPECT_THROW(naive_oracle({complete(7), D::kE, D::kE, 1}), UniverseTooLargeError);
  EXPECT_THROW(naive_oracle({Graph(3, {{0, 1}}), D::kE, D::kV, 1}), InfeasibleError);
  EXPECT_THROW(naive_oracle({complete(3), D::kE, D::kV, 2}), InvalidInstanceError);
}

TEST(BoundsTest, Examples) {
  // The six leaves v_i have pairwise-disjoint coverer sets {v_i, u_i}.
  EXPECT_EQ(disjoint_lb({ridged(6), D::kV, D::kV, 1}), 6u);
  EXPECT_EQ(greedy_upper_bound({complete(5), D::kV, D::kV, 1}), 1u);
}

TEST(BoundsTest, SandwichExactValue) {
  for (const Graph& g : small_corpus()) {
    for (D u : kAllDomains) {
      for (D w : kAllDomains) {
        const DominationInstance inst{g, u, w, 1};
        const std::size_t exact = domination_number(inst).value;
        EXPECT_LE(disjoint_lb(inst), exact);
        EXPECT_GE(greedy_upper_bound(inst), exact);
      }
    }
  }
}

TEST(CoverProblemTest, RestrictedProblemInsideHost) {
  // Inside K_3, only vertex 0 may be chosen, and only vertices 1 and 2 count.
  const std::vector<std::size_t> candidates = {0};
  const std::vector<std::size_t> targets = {1, 2};
  const CoverProblem p = restricted_cover_problem(complete(3), candidates, targets);
  ASSERT_EQ(p.num_candidates(), 1u);
  EXPECT_EQ(p.covers[0].count(), 2u);
  EXPECT_FALSE(p.self_target[0].has_value());
  EXPECT_EQ(solve_cover(p, 100).value, 1u);

  const std::vector<std::size_t> far = {2};
  EXPECT_THROW(solve_cover(restricted_cover_problem(path(3), std::vector<std::size_t>{0}, far), 100),
               InfeasibleError);
}

TEST(FundamentalProfileTest, CompleteTwo) {
  // Brute force over the three elements of K_2 gives 1 for every pair.
  const auto raw = raw_from(complete(2));
  const FundamentalProfile p = nine_numbers(complete(2));
  for (D u : kAllDomains) {
    for (D w : kAllDomains) {
      ASSERT_EQ(brute_gamma(raw, kind(u), kind(w)), 1);
      EXPECT_EQ(p.value(u, w), 1u);
    }
  }
}

TEST(FundamentalProfileTest, CompleteSix) {
  const FundamentalProfile p = nine_numbers(complete(6));
  EXPECT_EQ(p.gamma(), 1u);
  EXPECT_EQ(p.gamma_ve(), 5u);
  EXPECT_EQ(p.gamma_ev(), 3u);
  EXPECT_EQ(p.gamma_prime(), 3u);
  EXPECT_EQ(p.gamma_dprime(), solve(total_graph(complete(6)).result, D::kV, D::kV));
  // gamma(T(K_6)) = 3 by an independent exhaustive search.
  EXPECT_EQ(p.gamma_dprime(), 3u);
  EXPECT_TRUE(p.grouping_consistent());
}

TEST(FundamentalProfileTest, RidgedTwo) {
  const FundamentalProfile p = nine_numbers(ridged(2));
  EXPECT_EQ(p.gamma(), 2u);
  EXPECT_EQ(p.gamma_prime(), 1u);
}

TEST(FundamentalProfileTest, Definedness) {
  EXPECT_THROW(nine_numbers(Graph(1, {})), DefinednessError);
  EXPECT_THROW(nine_numbers(Graph(3, {{0, 1}})), DefinednessError);
  // Disconnected without isolated vertices is still defined.
  const FundamentalProfile p = nine_numbers(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(p.gamma(), 2u);
}

TEST(BudgetTest, EnvironmentOverride) {
  ::setenv("DOMKIT_BUDGET", "1234", 1);
  EXPECT_EQ(default_budget(), 1234u);
  ::setenv("DOMKIT_BUDGET", "nonsense", 1);
  EXPECT_EQ(default_budget(), kDefaultNodeBudget);
  ::unsetenv("DOMKIT_BUDGET");
  EXPECT_EQ(default_budget(), kDefaultNodeBudget);
}

}  // namespace
}  // namespace domkit
