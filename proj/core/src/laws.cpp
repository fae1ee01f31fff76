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
#include <sstream>

#include "domkit/errors.hpp"
#include "domkit/generators.hpp"
#include "domkit/graph6.hpp"
#include "domkit/transforms.hpp"

namespace domkit {
namespace {

using D = ElementDomain;
using Clock = std::chrono::steady_clock;

void require_nontrivial_connected(const Graph& g, std::string_view law) {
  if (g.order() < 2 || !is_connected(g)) {
    throw NotApplicableError(std::string(law) +
                             " need a nontrivial connected graph");
  }
}

std::string gamma_label(D u, D w, std::string_view graph = "G") {
  std::ostringstream out;
  out << "gamma_{" << to_string(u) << ',' << to_string(w) << "}(" << graph << ')';
  return out.str();
}

std::vector<std::string> render(const Graph& g, const std::vector<Element>& witness) {
  std::vector<std::string> out;
  out.reserve(witness.size());
  for (const Element& e : witness) out.push_back(to_string(g, e));
  return out;
}

// Accumulates comparisons and solver effort for one report.
class ReportBuilder {
 public:
  ReportBuilder(std::string law, const Graph& g) : start_(Clock::now()) {
    report_.law = std::move(law);
    report_.graph6 = encode_graph6(g);
  }

  SolveResult solve(const Graph& g, D u, D w, std::size_t budget) {
    SolveResult r = domination_number({g, u, w, 1}, budget);
    report_.nodes += r.stats.nodes;
    return r;
  }

  void add_nodes(std::size_t nodes) { report_.nodes += nodes; }

  Comparison& compare(std::string name, std::string lhs_label, Relation rel,
                      std::string rhs_label, double lhs, double rhs) {
    Comparison c;
    c.name = std::move(name);
    c.lhs_label = std::move(lhs_label);
    c.relation = rel;
    c.rhs_label = std::move(rhs_label);
    c.lhs = lhs;
    c.rhs = rhs;
    switch (rel) {
      case Relation::kEqual:
        c.holds = lhs == rhs;
        break;
      case Relation::kGreaterEqual:
        c.holds = lhs >= rhs;
        break;
      case Relation::kLessEqual:
        c.holds = lhs <= rhs;
        break;
    }
    report_.comparisons.push_back(std::move(c));
    return report_.comparisons.back();
  }

  LawReport finish() {
    report_.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_);
    return std::move(report_);
  }

 private:
  LawReport report_;
  Clock::time_point start_;
};

}  // namespace

std::string_view param_name(Param p) {
  switch (p) {
    case Param::kGamma:
      return "gamma";
    case Param::kGammaPrime:
      return "gamma'";
    case Param::kGammaDoublePrime:
      return "gamma''";
    case Param::kGammaVE:
      return "gamma_VE";
    case Param::kGammaEV:
      return "gamma_EV";
  }
  return "?";
}

std::pair<ElementDomain, ElementDomain> param_domains(Param p) {
  switch (p) {
    case Param::kGamma:
      return {D::kV, D::kV};
    case Param::kGammaPrime:
      return {D::kE, D::kE};
    case Param::kGammaDoublePrime:
      return {D::kVE, D::kVE};
    case Param::kGammaVE:
      return {D::kV, D::kE};
    case Param::kGammaEV:
      return {D::kE, D::kV};
  }
  return {D::kV, D::kV};
}

std::size_t param_value(const FundamentalProfile& profile, Param p) {
  const auto [u, w] = param_domains(p);
  return profile.value(u, w);
}

const RelationDigraph& RelationDigraph::standard() {
  using P = Param;
  static const RelationDigraph digraph({
      {P::kGammaVE, P::kGammaPrime},
      {P::kGammaVE, P::kGammaDoublePrime},
      {P::kGammaVE, P::kGamma},
      {P::kGammaVE, P::kGammaEV},
      {P::kGammaEV, P::kGammaVE},
      {P::kGammaPrime, P::kGamma},
      {P::kGamma, P::kGammaPrime},
      {P::kGammaEV, P::kGammaPrime},
      {P::kGammaDoublePrime, P::kGammaPrime},
      {P::kGammaEV, P::kGammaDoublePrime},
      {P::kGammaDoublePrime, P::kGamma},
      {P::kGammaEV, P::kGamma},
  });
  return digraph;
}

bool RelationDigraph::has_arc(Param x, Param y) const {
  return std::find(arcs_.begin(), arcs_.end(), Arc{x, y}) != arcs_.end();
}

std::vector<Arc> RelationDigraph::single_arcs() const {
  std::vector<Arc> out;
  for (const auto& [x, y] : arcs_) {
    if (!has_arc(y, x)) out.emplace_back(x, y);
  }
  return out;
}

std::vector<Arc> RelationDigraph::double_arcs() const {
  std::vector<Arc> out;
  for (const auto& [x, y] : arcs_) {
    if (x < y && has_arc(y, x)) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool respects_relation_digraph(const FundamentalProfile& profile) {
  for (const auto& [x, y] : RelationDigraph::standard().single_arcs()) {
    if (param_value(profile, x) < param_value(profile, y)) return false;
  }
  return true;
}

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kLessEqual:
      return "<=";
  }
  return "?";
}

bool LawReport::holds() const { return failures() == 0; }

std::size_t LawReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.holds; }));
}

LawReport check_theorem1(const Graph& g, std::size_t budget) {
  require_nontrivial_connected(g, "the identity laws");
  ReportBuilder report("thm1", g);

  const Graph line = line_graph(g).result;
  const Graph total = total_graph(g).result;

  {
    const auto lhs = report.solve(g, D::kE, D::kE, budget);
    const auto rhs = report.solve(line, D::kV, D::kV, budget);
    auto& c = report.compare("(1)", "gamma'(G)", Relation::kEqual, "gamma(L(G))",
                             static_cast<double>(lhs.value), static_cast<double>(rhs.value));
    c.lhs_witness = render(g, lhs.witness);
    c.rhs_witness = render(line, rhs.witness);
  }
  {
    const auto lhs = report.solve(g, D::kVE, D::kVE, budget);
    const auto rhs = report.solve(total, D::kV, D::kV, budget);
    auto& c = report.compare("(2)", "gamma''(G)", Relation::kEqual, "gamma(T(G))",
                             static_cast<double>(lhs.value), static_cast<double>(rhs.value));
    c.lhs_witness = render(g, lhs.witness);
    c.rhs_witness = render(total, rhs.witness);
  }

  struct Pair {
    const char* name;
    D lu, lw, ru, rw;
  };
  constexpr Pair kPairs[] = {
      {"(3)", D::kVE, D::kV, D::kV, D::kV},
      {"(4)", D::kVE, D::kE, D::kE, D::kE},
      {"(5)", D::kE, D::kV, D::kE, D::kVE},
      {"(6)", D::kV, D::kE, D::kV, D::kVE},
  };
  for (const Pair& p : kPairs) {
    const auto lhs = report.solve(g, p.lu, p.lw, budget);
    const auto rhs = report.solve(g, p.ru, p.rw, budget);
    auto& c = report.compare(p.name, gamma_label(p.lu, p.lw), Relation::kEqual,
                             gamma_label(p.ru, p.rw), static_cast<double>(lhs.value),
                             static_cast<double>(rhs.value));
    c.lhs_witness = render(g, lhs.witness);
    c.rhs_witness = render(g, rhs.witness);
  }
  return report.finish();
}

LawReport check_theorem2(const Graph& g, std::size_t budget) {
  require_nontrivial_connected(g, "the order relations");
  ReportBuilder report("thm2", g);
  const FundamentalProfile profile = nine_numbers(g, budget);
  report.add_nodes(profile.total_nodes());
  int index = 0;
  for (const auto& [x, y] : RelationDigraph::standard().single_arcs()) {
    std::ostringstream name;
    name << '(' << ++index << ')';
    const auto [xu, xw] = param_domains(x);
    const auto [yu, yw] = param_domains(y);
    auto& c = report.compare(name.str(), std::string(param_name(x)), Relation::kGreaterEqual,
                             std::string(param_name(y)),
                             static_cast<double>(param_value(profile, x)),
                             static_cast<double>(param_value(profile, y)));
    c.lhs_witness = render(g, profile.result(xu, xw).witness);
    c.rhs_witness = render(g, profile.result(yu, yw).witness);
  }
  return report.finish();
}

LawReport check_total_graph_embedding(const Graph& g, std::size_t budget) {
  require_nontrivial_connected(g, "the total-graph embedding");
  ReportBuilder report("embedding", g);
  const TotalGraphMap total = total_graph(g);

  for (D u : kAllDomains) {
    for (D w : kAllDomains) {
      const auto direct = report.solve(g, u, w, budget);

      const std::vector<Element> cand_elems = elements(g, u);
      std::vector<std::size_t> candidates;
      std::vector<std::size_t> targets;
      for (const Element& e : cand_elems) candidates.push_back(total.image(e));
      for (const Element& e : elements(g, w)) targets.push_back(total.image(e));
      const CoverSolution embedded =
          solve_cover(restricted_cover_problem(total.result, candidates, targets), budget);
      report.add_nodes(embedded.stats.nodes);

      auto& c = report.compare(gamma_label(u, w), gamma_label(u, w), Relation::kEqual,
                               "embedded in T(G)", static_cast<double>(direct.value),
                               static_cast<double>(embedded.value));
      c.lhs_witness = render(g, direct.witness);
      for (std::size_t i : embedded.chosen) {
        c.rhs_witness.push_back("t" + std::to_string(candidates[i]));
      }
    }
  }
  return report.finish();
}

LawReport check_payan(const Graph& g, std::size_t budget) {
  require_nontrivial_connected(g, "the Payan chain");
  ReportBuilder report("payan", g);
  const auto n = static_cast<double>(g.order());
  const auto m = static_cast<double>(g.size());
  const auto delta = static_cast<double>(g.min_degree());

  const auto gamma = report.solve(g, D::kV, D::kV, budget);
  const auto prime = report.solve(g, D::kE, D::kE, budget);
  const auto dprime = report.solve(g, D::kVE, D::kVE, budget);
  const Graph total = total_graph(g).result;
  const auto total_gamma = report.solve(total, D::kV, D::kV, budget);

  auto& c1 = report.compare("gamma' <= gamma''", "gamma'(G)", Relation::kLessEqual,
                            "gamma''(G)", static_cast<double>(prime.value),
                            static_cast<double>(dprime.value));
  c1.lhs_witness = render(g, prime.witness);
  c1.rhs_witness = render(g, dprime.witness);

  auto& c2 = report.compare("gamma'' bound", "gamma''(G)", Relation::kLessEqual,
                            "1 - delta + (n + m)/2", static_cast<double>(dprime.value),
                            1.0 - delta + (n + m) / 2.0);
  c2.lhs_witness = render(g, dprime.witness);

  auto& c3 = report.compare("gamma bound", "gamma(G)", Relation::kLessEqual,
                            "(n + 2 - delta)/2", static_cast<double>(gamma.value),
                            (n + 2.0 - delta) / 2.0);
  c3.lhs_witness = render(g, gamma.witness);

  report.compare("min degree of T(G)", "delta(T(G))", Relation::kEqual, "2 delta",
                 static_cast<double>(total.min_degree()), 2.0 * delta);

  auto& c5 = report.compare("gamma(T(G)) bound", "gamma(T(G))", Relation::kLessEqual,
                            "(n + m + 2 - delta(T(G)))/2",
                            static_cast<double>(total_gamma.value),
                            (n + m + 2.0 - static_cast<double>(total.min_degree())) / 2.0);
  c5.lhs_witness = render(total, total_gamma.witness);
  return report.finish();
}

std::string_view status_name(Theorem3Status s) {
  switch (s) {
    case Theorem3Status::kExactlySolved:
      return "exactly solved";
    case Theorem3Status::kCertified:
      return "certified";
    case Theorem3Status::kUpperCertifiedOnly:
      return "upper-certified only";
  }
  return "?";
}

namespace {

std::vector<Element> matching_edges(const Graph& g, std::size_t n, bool cover_odd_vertex) {
  std::vector<Element> out;
  for (std::size_t v = 0; v + 1 < n; v += 2) out.push_back(Element::edge(*g.edge_index(v, v + 1)));
  if (cover_odd_vertex && n % 2 == 1) out.push_back(Element::edge(*g.edge_index(0, n - 1)));
  return out;
}

std::vector<Element> first_vertices(std::size_t count) {
  std::vector<Element> out;
  for (std::size_t v = 0; v < count; ++v) out.push_back(Element::vertex(v));
  return out;
}

// Chain edges u_1u_2, u_3u_4, ... and u_n v_n when n is odd.
std::vector<Element> ridged_edge_witness(const Graph& g, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i + 1 < n; i += 2) out.push_back(Element::edge(*g.edge_index(i, i + 1)));
  if (n % 2 == 1) out.push_back(Element::edge(*g.edge_index(n - 1, 2 * n - 1)));
  return out;
}

struct GapPlan {
  GapRecord record;
  std::vector<Element> larger_witness;
  std::vector<Element> smaller_witness;
};

std::vector<GapPlan> plan_witnesses(std::size_t r) {
  std::vector<GapPlan> plans;
  const std::size_t kn = 2 * r + 4;
  const Graph kg = complete(kn);
  const std::size_t rn = 4 * r;
  const Graph rg = ridged(rn);
  const std::size_t sn = r + 2;
  const Graph sg = star(sn);

  auto make = [](std::string label, std::string desc, const Graph& g, Param x, Param y,
                 std::size_t cx, std::size_t cy) {
    return GapRecord{.label = std::move(label),
                     .description = std::move(desc),
                     .graph = g,
                     .larger = x,
                     .smaller = y,
                     .closed_larger = cx,
                     .closed_smaller = cy};
  };

  plans.push_back({make("G1", "K_" + std::to_string(kn), kg, Param::kGammaPrime,
                        Param::kGamma, kn / 2, 1),
                   matching_edges(kg, kn, false), first_vertices(1)});
  plans.push_back({make("G2", "R_" + std::to_string(3 * rn), rg, Param::kGamma,
                        Param::kGammaPrime, rn, (rn + 1) / 2),
                   first_vertices(rn), ridged_edge_witness(rg, rn)});
  plans.push_back({make("G3", "K_" + std::to_string(kn), kg, Param::kGammaVE,
                        Param::kGammaEV, kn - 1, (kn + 1) / 2),
                   first_vertices(kn - 1), matching_edges(kg, kn, true)});
  std::vector<Element> all_edges;
  for (std::size_t j = 0; j < sg.size(); ++j) all_edges.push_back(Element::edge(j));
  plans.push_back({make("G4", "K_{1," + std::to_string(sn) + "}", sg, Param::kGammaEV,
                        Param::kGammaVE, sn, 1),
                   std::move(all_edges), first_vertices(1)});
  return plans;
}

}  // namespace

std::vector<GapRecord> theorem3_witnesses(std::size_t r, Theorem3Mode mode,
                                          std::size_t budget) {
  if (r == 0) throw NotApplicableError("gap witnesses need a positive integer r");
  const bool exact = mode == Theorem3Mode::kExact ||
                     (mode == Theorem3Mode::kAuto && r <= kTheorem3ExactLimit);
  const auto rr = static_cast<long long>(r);

  std::vector<GapRecord> out;
  for (GapPlan& plan : plan_witnesses(r)) {
    GapRecord rec = std::move(plan.record);
    const auto [xu, xw] = param_domains(rec.larger);
    const auto [yu, yw] = param_domains(rec.smaller);
    rec.witnesses_feasible =
        plan.larger_witness.size() == rec.closed_larger &&
        plan.smaller_witness.size() == rec.closed_smaller &&
        is_dominating(rec.graph, xu, xw, plan.larger_witness) &&
        is_dominating(rec.graph, yu, yw, plan.smaller_witness);

    if (exact) {
      const auto x = domination_number({rec.graph, xu, xw, 1}, budget);
      const auto y = domination_number({rec.graph, yu, yw, 1}, budget);
      rec.status = Theorem3Status::kExactlySolved;
      rec.exact_larger = x.value;
      rec.exact_smaller = y.value;
      rec.larger_lower_bound = x.value;
      rec.nodes = x.stats.nodes + y.stats.nodes;
      rec.gap = static_cast<long long>(x.value) - static_cast<long long>(y.value);
      rec.proven_gap = rec.gap;
      rec.holds = rec.gap > rr;
    } else {
      const DominationInstance larger{rec.graph, xu, xw, 1};
      rec.larger_lower_bound = std::max<std::size_t>(1, disjoint_lb(larger));
      rec.status = rec.larger_lower_bound == rec.closed_larger
                       ? Theorem3Status::kCertified
                       : Theorem3Status::kUpperCertifiedOnly;
      rec.gap = static_cast<long long>(rec.closed_larger) -
                static_cast<long long>(rec.closed_smaller);
      rec.proven_gap = rec.witnesses_feasible
                           ? static_cast<long long>(rec.larger_lower_bound) -
                                 static_cast<long long>(rec.closed_smaller)
                           : 0;
      rec.holds = rec.witnesses_feasible && rec.gap > rr;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace domkit
