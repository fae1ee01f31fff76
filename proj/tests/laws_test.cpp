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

#include "domkit/laws.hpp"

#include <algorithm>

#include "domkit/errors.hpp"
#include "domkit/generators.hpp"
#include "gtest/gtest.h"

namespace domkit {
namespace {

using P = Param;

const Comparison& find(const LawReport& report, std::string_view name) {
  auto it = std::find_if(report.comparisons.begin(), report.comparisons.end(),
                         [&](const Comparison& c) { return c.name == name; });
  EXPECT_NE(it, report.comparisons.end()) << name;
  return *it;
}

TEST(RelationDigraphTest, ArcSetLiteral) {
  const std::vector<Arc> expected = {
      {P::kGammaVE, P::kGammaPrime},       {P::kGammaVE, P::kGammaDoublePrime},
      {P::kGammaVE, P::kGamma},            {P::kGammaVE, P::kGammaEV},
      {P::kGammaEV, P::kGammaVE},          {P::kGammaPrime, P::kGamma},
      {P::kGamma, P::kGammaPrime},         {P::kGammaEV, P::kGammaPrime},
      {P::kGammaDoublePrime, P::kGammaPrime}, {P::kGammaEV, P::kGammaDoublePrime},
      {P::kGammaDoublePrime, P::kGamma},   {P::kGammaEV, P::kGamma},
  };
  const RelationDigraph& d = RelationDigraph::standard();
  EXPECT_EQ(d.arcs(), expected);
  EXPECT_EQ(d.single_arcs().size(), 8u);
  EXPECT_EQ(d.double_arcs(),
            (std::vector<Arc>{{P::kGamma, P::kGammaPrime}, {P::kGammaVE, P::kGammaEV}}));
  EXPECT_TRUE(d.has_arc(P::kGammaEV, P::kGamma));
  EXPECT_FALSE(d.has_arc(P::kGamma, P::kGammaEV));
}

TEST(IdentityLawTest, CompleteFourAndRidgedThree) {
  for (const Graph& g : {complete(4), ridged(3)}) {
    const LawReport r = check_theorem1(g);
    EXPECT_EQ(r.comparisons.size(), 6u);
    EXPECT_TRUE(r.holds());
  }
}

TEST(IdentityLawTest, CompleteTwo) {
  const LawReport r = check_theorem1(complete(2));
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(find(r, "(2)").rhs, 1.0);
  EXPECT_EQ(r.graph6, "A_");
}

TEST(IdentityLawTest, RejectsGraphsOutsideHypotheses) {
  EXPECT_THROW(check_theorem1(Graph(1, {})), NotApplicableError);
  EXPECT_THROW(check_theorem1(Graph(4, {{0, 1}, {2, 3}})), NotApplicableError);
  EXPECT_THROW(check_theorem2(Graph(4, {{0, 1}, {2, 3}})), NotApplicableError);
  EXPECT_THROW(check_payan(Graph(1, {})), NotApplicableError);
  EXPECT_THROW(check_total_graph_embedding(Graph(3, {{0, 1}})), NotApplicableError);
}

TEST(OrderLawTest, CompleteSix) {
  const LawReport r = check_theorem2(complete(6));
  ASSERT_EQ(r.comparisons.size(), 8u);
  EXPECT_TRUE(r.holds());
  for (const Comparison& c : r.comparisons) {
    if (c.lhs_label == "gamma_VE" && c.rhs_label == "gamma'") {
      EXPECT_EQ(c.lhs, 5.0);
      EXPECT_EQ(c.rhs, 3.0);
    }
    if (c.lhs_label == "gamma_EV") EXPECT_EQ(c.lhs, 3.0);
  }
}

TEST(OrderLawTest, StarFive) {
  const LawReport r = check_theorem2(star(5));
  EXPECT_TRUE(r.holds());
  int ev_arcs = 0;
  for (const Comparison& c : r.comparisons) {
    if (c.lhs_label == "gamma_EV") {
      EXPECT_EQ(c.lhs, 5.0);
      ++ev_arcs;
    }
  }
  EXPECT_EQ(ev_arcs, 3);  // gamma', gamma'', gamma; the fourth out-arc is a double arc
}

TEST(OrderLawTest, SmallCorpusAndTransitiveConsistency) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      EXPECT_TRUE(check_theorem2(g).holds());
      EXPECT_TRUE(respects_relation_digraph(nine_numbers(g)));
    }
  }
}

TEST(Theorem3Test, RadiusOneExact) {
  const auto records = theorem3_witnesses(1, Theorem3Mode::kExact);
  ASSERT_EQ(records.size(), 4u);
  const std::vector<std::string> names = {"K_6", "R_12", "K_6", "K_{1,3}"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(records[i].description, names[i]);
    EXPECT_EQ(records[i].gap, 2);
    EXPECT_TRUE(records[i].holds);
    EXPECT_EQ(records[i].status, Theorem3Status::kExactlySolved);
    EXPECT_EQ(*records[i].exact_larger, records[i].closed_larger);
    EXPECT_EQ(*records[i].exact_smaller, records[i].closed_smaller);
  }
}

TEST(Theorem3Test, RadiusTwoRidged) {
  const auto records = theorem3_witnesses(2);
  EXPECT_EQ(records[1].description, "R_24");
  EXPECT_EQ(*records[1].exact_larger, 8u);
  EXPECT_EQ(*records[1].exact_smaller, 4u);
  EXPECT_EQ(records[1].gap, 4);
}

TEST(Theorem3Test, RejectsZero) { EXPECT_THROW(theorem3_witnesses(0), NotApplicableError); }

TEST(Theorem3Test, CertificateModeStatuses) {
  for (std::size_t r = 3; r <= 5; ++r) {
    const auto records = theorem3_witnesses(r);
    for (const GapRecord& rec : records) {
      EXPECT_TRUE(rec.witnesses_feasible) << rec.label;
      EXPECT_TRUE(rec.holds) << rec.label;
      EXPECT_FALSE(rec.exact_larger.has_value());
    }
    EXPECT_EQ(records[0].status, Theorem3Status::kUpperCertifiedOnly);
    EXPECT_EQ(records[1].status, Theorem3Status::kCertified);
    EXPECT_EQ(records[1].larger_lower_bound, 4 * r);
    EXPECT_GT(records[1].proven_gap, static_cast<long long>(r));
    EXPECT_EQ(records[2].status, Theorem3Status::kUpperCertifiedOnly);
    EXPECT_EQ(records[3].status, Theorem3Status::kCertified);
  }
}

TEST(Theorem3Test, CertificateNeverContradictsExact) {
  for (std::size_t r = 1; r <= 2; ++r) {
    const auto exact = theorem3_witnesses(r, Theorem3Mode::kExact);
    const auto cert = theorem3_witnesses(r, Theorem3Mode::kCertificate);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_LE(cert[i].larger_lower_bound, *exact[i].exact_larger);
      EXPECT_GE(cert[i].closed_larger, *exact[i].exact_larger);
      EXPECT_GE(cert[i].closed_smaller, *exact[i].exact_smaller);
      EXPECT_LE(cert[i].proven_gap, exact[i].gap);
      EXPECT_EQ(cert[i].holds, exact[i].holds);
    }
  }
}

TEST(Theorem3Test, DoubleArcsAreIncomparable) {
  const auto records = theorem3_witnesses(1);
  // gamma' > gamma on G1 and gamma > gamma' on G2, likewise for VE / EV.
  EXPECT_EQ(records[0].larger, P::kGammaPrime);
  EXPECT_EQ(records[1].larger, P::kGamma);
  EXPECT_EQ(records[2].larger, P::kGammaVE);
  EXPECT_EQ(records[3].larger, P::kGammaEV);
  for (const auto& rec : records) EXPECT_GT(rec.gap, 0);
}

TEST(EmbeddingTest, SmallGraphs) {
  for (const Graph& g : {complete(3), path(3), complete(2)}) {
    const LawReport r = check_total_graph_embedding(g);
    EXPECT_EQ(r.comparisons.size(), 9u);
    EXPECT_TRUE(r.holds());
  }
  const LawReport k2 = check_total_graph_embedding(complete(2));
  EXPECT_EQ(k2.comparisons.front().rhs, 1.0);
}

TEST(PayanTest, CompleteFive) {
  const LawReport r = check_payan(complete(5));
  EXPECT_TRUE(r.holds());
  const Comparison& bound = find(r, "gamma'' bound");
  EXPECT_EQ(bound.rhs, 4.5);
  EXPECT_EQ(bound.lhs, 3.0);  // gamma(T(K_5)) by exhaustive search
  EXPECT_EQ(find(r, "min degree of T(G)").lhs, 8.0);
}

TEST(PayanTest, CompleteTwo) {
  const LawReport r = check_payan(complete(2));
  EXPECT_TRUE(r.holds());
  const Comparison& c = find(r, "gamma bound");
  EXPECT_EQ(c.lhs, 1.0);
  EXPECT_EQ(c.rhs, 1.5);
}

}  // namespace
}  // namespace domkit
