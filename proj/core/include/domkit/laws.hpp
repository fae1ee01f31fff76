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

#ifndef DOMKIT_LAWS_HPP_
#define DOMKIT_LAWS_HPP_

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domkit/graph.hpp"
#include "domkit/solver.hpp"

namespace domkit {

// The five distinct fundamental numbers on a nontrivial connected graph.
enum class Param : std::uint8_t { kGamma, kGammaPrime, kGammaDoublePrime, kGammaVE, kGammaEV };

inline constexpr std::array<Param, 5> kAllParams = {
    Param::kGamma, Param::kGammaPrime, Param::kGammaDoublePrime, Param::kGammaVE,
    Param::kGammaEV};

std::string_view param_name(Param p);
// The (U, W) pair whose number is the canonical representative of p.
std::pair<ElementDomain, ElementDomain> param_domains(Param p);
std::size_t param_value(const FundamentalProfile& profile, Param p);

using Arc = std::pair<Param, Param>;

// Relation digraph over the five parameters. An arc (x, y) whose reverse is
// absent means x(G) >= y(G) on every nontrivial connected G; an arc present in
// both directions marks a pair with no fixed order.
class RelationDigraph {
 public:
  static const RelationDigraph& standard();

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(Param x, Param y) const;
  std::vector<Arc> single_arcs() const;
  // Each double arc once, as (x, y) with x listed before y in kAllParams.
  std::vector<Arc> double_arcs() const;

 private:
  explicit RelationDigraph(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}
  std::vector<Arc> arcs_;
};

// Every single arc of the digraph is respected by the profile's values.
bool respects_relation_digraph(const FundamentalProfile& profile);

enum class Relation { kEqual, kGreaterEqual, kLessEqual };
std::string_view relation_symbol(Relation r);

struct Comparison {
  std::string name;
  std::string lhs_label;
  Relation relation = Relation::kEqual;
  std::string rhs_label;
  double lhs = 0;  // integers or halves; exact in double
  double rhs = 0;
  bool holds = false;
  std::vector<std::string> lhs_witness;
  std::vector<std::string> rhs_witness;
};

struct LawReport {
  std::string law;
  std::string graph6;
  std::vector<Comparison> comparisons;
  std::size_t nodes = 0;
  std::chrono::microseconds elapsed{0};

  bool holds() const;
  std::size_t failures() const;
};

// All six equalities, each side solved on its own (L(G) and T(G) for the
// first two). Throws NotApplicableError unless g is nontrivial and connected.
LawReport check_theorem1(const Graph& g, std::size_t budget = default_budget());

// x >= y for each of the eight single arcs, on the five-value profile.
LawReport check_theorem2(const Graph& g, std::size_t budget = default_budget());

// Each of the nine numbers re-solved inside T(G): candidates are the images of
// U, targets the images of W, adjacency of T(G) as association.
LawReport check_total_graph_embedding(const Graph& g,
                                      std::size_t budget = default_budget());

// gamma' <= gamma'' <= 1 - delta + (n + m)/2 and gamma <= (n + 2 - delta)/2,
// plus the same bound applied to T(G) directly.
LawReport check_payan(const Graph& g, std::size_t budget = default_budget());

enum class Theorem3Mode { kAuto, kExact, kCertificate };

enum class Theorem3Status { kExactlySolved, kCertified, kUpperCertifiedOnly };
std::string_view status_name(Theorem3Status s);

// One gap witness: x(G) - y(G) > r.
struct GapRecord {
  std::string label;        // "G1".."G4"
  std::string description;  // e.g. "K_6"
  Graph graph;
  Param larger;
  Param smaller;
  std::size_t closed_larger = 0;
  std::size_t closed_smaller = 0;

  Theorem3Status status = Theorem3Status::kExactlySolved;
  // Exact mode.
  std::optional<std::size_t> exact_larger = std::nullopt;
  std::optional<std::size_t> exact_smaller = std::nullopt;
  // Certificate mode: closed-form witnesses checked directly, plus the best
  // mechanical lower bound on the larger side.
  bool witnesses_feasible = false;
  std::size_t larger_lower_bound = 0;

  // Exact gap, or the closed-form gap in certificate mode.
  long long gap = 0;
  // Proven lower bound on the true gap (== gap when exactly solved or
  // certified).
  long long proven_gap = 0;
  bool holds = false;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kTheorem3ExactLimit = 2;

// G1 = K_{2r+4}, G2 = R_{12r}, G3 = K_{2r+4}, G4 = K_{1,r+2}. kAuto solves
// exactly for r <= kTheorem3ExactLimit and certifies beyond.
// Throws NotApplicableError for r == 0.
std::vector<GapRecord> theorem3_witnesses(std::size_t r,
                                          Theorem3Mode mode = Theorem3Mode::kAuto,
                                          std::size_t budget = default_budget());

}  // namespace domkit

#endif  // DOMKIT_LAWS_HPP_
