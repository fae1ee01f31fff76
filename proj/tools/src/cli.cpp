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


#include "domkit_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "domkit/edge_list.hpp"
#include "domkit/errors.hpp"
#include "domkit/generators.hpp"
#include "domkit/graph.hpp"
#include "domkit/graph6.hpp"
#include "domkit/laws.hpp"
#include "domkit/report.hpp"
#include "domkit/solver.hpp"

#ifdef DOMKIT_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif

namespace domkit::cli {
namespace {

// Thrown for bad flag combinations found after CLI11 has parsed.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string g6;
  std::string file;
  std::string family;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;

  bool given() const { return !g6.empty() || !file.empty() || !family.empty(); }
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* g6 = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* file = cmd->add_option("--file", in.file, "edge-list or graph6 file");
  auto* family = cmd->add_option("--family", in.family,
                                 "complete|star|ridged|path|cycle|random");
  g6->excludes(file, family);
  file->excludes(family);
  cmd->add_option("--n", in.n, "family size parameter");
  cmd->add_option("--p", in.p, "edge probability for random graphs");
  cmd->add_option("--seed", in.seed, "seed for random graphs");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// An edge-list file starts (after comments) with a line of two integers; any
// other content is read as graph6, one graph per line.
bool looks_like_edge_list(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string rest;
    return static_cast<bool>(fields >> a >> b) && !(fields >> rest);
  }
  return false;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (looks_like_edge_list(text)) return {parse_edge_list(text)};
  std::vector<Graph> graphs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (!line.empty()) graphs.push_back(parse_graph6(line));
  }
  if (graphs.empty()) throw UsageError(path + " holds no graphs");
  return graphs;
}

Graph family_graph(const GraphInput& in) {
  const auto family = parse_family(in.family);
  if (!family) throw UsageError("unknown family '" + in.family + "'");
  if (in.n == 0) throw UsageError("--family needs --n >= 1");
  return make_family({*family, in.n, in.p, in.seed});
}

std::vector<Graph> load_graphs(const GraphInput& in) {
  if (!in.g6.empty()) return {parse_graph6(in.g6)};
  if (!in.file.empty()) return read_graph_file(in.file);
  if (!in.family.empty()) return {family_graph(in)};
  throw UsageError("a graph is required: use --g6, --file or --family");
}

Graph load_single(const GraphInput& in) {
  std::vector<Graph> graphs = load_graphs(in);
  if (graphs.size() != 1) throw UsageError("expected one graph, got " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string describe(const Graph& g) {
  std::ostringstream s;
  s << "graph " << encode_graph6(g) << " (n=" << g.order() << ", m=" << g.size() << ")";
  return s.str();
}

std::string witness_text(const Graph& g, const std::vector<Element>& witness) {
  std::string s = "{";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) s += ", ";
    s += to_string(g, witness[i]);
  }
  return s + "}";
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  GraphInput input;
  std::string params = "all";
  std::size_t k = 1;
};

const std::map<std::string, Param>& param_flags() {
  static const std::map<std::string, Param> flags = {
      {"gamma", Param::kGamma},
      {"ve", Param::kGammaVE},
      {"ev", Param::kGammaEV},
      {"gamma-prime", Param::kGammaPrime},
      {"gamma-dprime", Param::kGammaDoublePrime},
  };
  return flags;
}

void print_value(std::ostream& out, const Graph& g, std::string_view name,
                 const std::function<SolveResult()>& solve) {
  try {
    const SolveResult r = solve();
    out << "  " << name << " = " << r.value << "  witness " << witness_text(g, r.witness) << "  (" << r.stats.nodes
        << " nodes)\n";
  } catch (const InfeasibleError& e) {
    out << "  " << name << " undefined: " << e.what() << '\n';
  } catch (const InvalidInstanceError& e) {
    out << "  " << name << " undefined: " << e.what() << '\n';
  }
}

int run_compute(const ComputeArgs& a, std::size_t budget, std::ostream& out) {
  const Graph g = load_single(a.input);
  out << describe(g) << '\n';
  if (a.params == "k-dom") {
    if (a.k == 0) throw UsageError("--k must be positive");
    print_value(out, g, "gamma_" + std::to_string(a.k),
                [&] { return k_domination_number(g, a.k, budget); });
    return kOk;
  }
  std::vector<Param> wanted;
  if (a.params == "all") {
    wanted = {Param::kGamma, Param::kGammaVE, Param::kGammaEV, Param::kGammaPrime,
              Param::kGammaDoublePrime};
  } else {
    wanted = {param_flags().at(a.params)};
  }
  for (Param p : wanted) {
    const auto [u, w] = param_domains(p);
    print_value(out, g, param_name(p),
                [&] { return domination_number({g, u, w, 1}, budget); });
  }
  return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  GraphInput input;
  std::string law;
  std::size_t r = 1;
  std::string mode = "auto";
  bool quiet = false;
};

std::string number(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

void print_law(std::ostream& out, const LawReport& report, bool quiet) {
  for (const Comparison& c : report.comparisons) {
    if (quiet && c.holds) continue;
    out << "  " << c.name << "  " << c.lhs_label << ' ' << relation_symbol(c.relation) << ' '
        << c.rhs_label << ":  " << number(c.lhs) << ' ' << relation_symbol(c.relation) << ' '
        << number(c.rhs) << "  " << (c.holds ? "ok" : "FAILED") << '\n';
  }
}

int run_gap_witnesses(const VerifyArgs& a, std::size_t budget, std::ostream& out) {
  const std::map<std::string, Theorem3Mode> modes = {{"auto", Theorem3Mode::kAuto},
                                                     {"exact", Theorem3Mode::kExact},
                                                     {"certificate", Theorem3Mode::kCertificate}};
  const auto records = theorem3_witnesses(a.r, modes.at(a.mode), budget);
  bool all = true;
  out << "gap witnesses for r=" << a.r << '\n';
  for (const GapRecord& rec : records) {
    all = all && rec.holds;
    out << "  " << rec.label << "  " << rec.description << "  " << param_name(rec.larger) << " - "
        << param_name(rec.smaller) << " = ";
    if (rec.exact_larger && rec.exact_smaller) {
      out << *rec.exact_larger << " - " << *rec.exact_smaller;
    } else {
      out << rec.closed_larger << " - " << rec.closed_smaller << " (lower bound "
          << rec.larger_lower_bound << ")";
    }
    out << " = " << rec.gap << "  [" << status_name(rec.status) << "]  "
        << (rec.holds ? "ok" : "FAILED") << '\n';
  }
  out << "thm3: " << (all ? "holds" : "FAILED") << '\n';
  return all ? kOk : kLawFailed;
}

int run_verify(const VerifyArgs& a, std::size_t budget, std::ostream& out) {
  if (a.law == "thm3") {
    if (a.input.given()) throw UsageError("thm3 builds its own graphs; drop the graph input");
    return run_gap_witnesses(a, budget, out);
  }
  using Check = LawReport (*)(const Graph&, std::size_t);
  const std::map<std::string, Check> checks = {{"thm1", check_theorem1},
                                               {"thm2", check_theorem2},
                                               {"embedding", check_total_graph_embedding},
                                               {"payan", check_payan}};
  const Check check = checks.at(a.law);
  std::size_t failed = 0;
  const std::vector<Graph> graphs = load_graphs(a.input);
  for (const Graph& g : graphs) {
    const LawReport report = check(g, budget);
    if (!report.holds()) ++failed;
    if (!a.quiet || !report.holds()) {
      out << describe(g) << '\n';
      print_law(out, report, a.quiet);
    }
  }
  out << a.law << ": " << (failed == 0 ? "holds" : "FAILED") << " on " << graphs.size() - failed
      << '/' << graphs.size() << " graphs\n";
  return failed == 0 ? kOk : kLawFailed;
}

// gen ----------------------------------------------------------------------

struct GenArgs {
  GraphInput input;
  std::string format = "g6";
};

int run_gen(const GenArgs& a, std::ostream& out) {
  if (a.input.family.empty()) throw UsageError("gen needs --family");
  const Graph g = family_graph(a.input);
  out << (a.format == "g6" ? encode_graph6(g) + "\n" : format_edge_list(g));
  return kOk;
}

// scan ---------------------------------------------------------------------

struct ScanArgs {
  std::size_t exhaustive_n = 0;
  std::size_t random = 0;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out_path;
  std::size_t jobs = 1;
};

int run_scan(const ScanArgs& a, std::size_t budget, std::ostream& out) {
  std::vector<Graph> graphs;
  if (a.exhaustive_n > 0) {
    graphs = enumerate_connected(a.exhaustive_n);
  } else if (a.random > 0) {
    if (a.n == 0) throw UsageError("--random needs --n >= 1");
    for (std::size_t i = 0; i < a.random; ++i) graphs.push_back(random_connected(a.n, a.p, a.seed + i));
  } else {
    throw UsageError("scan needs --exhaustive-n or --random");
  }
  const auto rows = scan_graphs(graphs, budget, std::max<std::size_t>(a.jobs, 1));
  const std::string csv = emit_report(rows);
  if (a.out_path.empty()) {
    out << csv;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + a.out_path);
    file << csv;
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return r.thm1_ok && r.thm2_ok && r.payan_ok;
  });
  return all ? kOk : kLawFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domination numbers over vertices, edges and both", "domkit"};
  app.require_subcommand(1);
  std::size_t budget = default_budget();
  app.add_option("--budget", budget, "search node budget (default: $DOMKIT_BUDGET or 10^7)")
      ->check(CLI::PositiveNumber);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "solve domination numbers of one graph");
  compute_cmd->fallthrough();
  add_graph_options(compute_cmd, compute.input);
  std::vector<std::string> param_choices = {"all", "k-dom"};
  for (const auto& [flag, p] : param_flags()) param_choices.push_back(flag);
  compute_cmd->add_option("--params", compute.params, "which numbers to solve")
      ->check(CLI::IsMember(param_choices));
  compute_cmd->add_option("--k", compute.k, "multiplicity for k-dom");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a law on one or more graphs");
  verify_cmd->fallthrough();
  add_graph_options(verify_cmd, verify.input);
  verify_cmd->add_option("--law", verify.law)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "embedding", "payan"}));
  verify_cmd->add_option("--r", verify.r, "gap size for thm3")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", verify.mode, "thm3 mode")
      ->check(CLI::IsMember({"auto", "exact", "certificate"}));
  verify_cmd->add_flag("--quiet", verify.quiet, "print failures and the summary only");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a family member to stdout");
  gen_cmd->fallthrough();
  add_graph_options(gen_cmd, gen.input);
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"g6", "edges"}));

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "CSV report over many graphs");
  scan_cmd->fallthrough();
  auto* exhaustive = scan_cmd->add_option("--exhaustive-n", scan.exhaustive_n,
                                          "every connected labeled graph on k vertices");
  auto* random = scan_cmd->add_option("--random", scan.random, "number of random graphs");
  exhaustive->excludes(random);
  scan_cmd->add_option("--n", scan.n);
  scan_cmd->add_option("--p", scan.p);
  scan_cmd->add_option("--seed", scan.seed);
  scan_cmd->add_option("--out", scan.out_path, "write CSV here instead of stdout");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute_cmd) return run_compute(compute, budget, out);
    if (*verify_cmd) return run_verify(verify, budget, out);
    if (*gen_cmd) return run_gen(gen, out);
    return run_scan(scan, budget, out);
  } catch (const BudgetExhaustedError& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace domkit::cli
