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

#ifndef DOMKIT_REPORT_HPP_
#define DOMKIT_REPORT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domkit/graph.hpp"
#include "domkit/solver.hpp"

namespace domkit {

// One scanned graph: the five canonical values, all nine raw values ([U][W]
// in V, E, VE order) and the law outcomes.
struct ReportRow {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  std::size_t gamma = 0;
  std::size_t gamma_ve = 0;
  std::size_t gamma_ev = 0;
  std::size_t gamma_prime = 0;
  std::size_t gamma_dprime = 0;
  std::array<std::array<std::size_t, 3>, 3> nine{};
  bool thm1_ok = false;
  bool thm2_ok = false;
  bool payan_ok = false;
  std::uint64_t nodes = 0;
  std::uint64_t millis = 0;
};

inline constexpr std::string_view kReportHeader =
    "graph6,n,m,delta,gamma,gamma_ve,gamma_ev,gamma_prime,gamma_dprime,"
    "thm1_ok,thm2_ok,payan_ok,nodes,millis";

// Solves the nine numbers and checks the identity laws, the order relations and the Payan chain.
// The graph must be nontrivial and connected.
ReportRow make_report_row(const Graph& g, std::size_t budget = default_budget());

// Rows in input order; up to `threads` graphs are solved concurrently.
std::vector<ReportRow> scan_graphs(std::span<const Graph> graphs,
                                   std::size_t budget = default_budget(),
                                   std::size_t threads = 1);

// Header line plus one line per row; booleans as 0/1, times as integer ms.
std::string emit_report(std::span<const ReportRow> rows);

// Reads back the CSV columns of emit_report (the raw nine values are not part
// of the CSV and stay zero). Throws ParseError with a line number.
std::vector<ReportRow> parse_report(std::string_view csv);

}  // namespace domkit

#endif  // DOMKIT_REPORT_HPP_
