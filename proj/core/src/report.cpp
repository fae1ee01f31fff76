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

#include "domkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "domkit/errors.hpp"
#include "domkit/graph6.hpp"
#include "domkit/laws.hpp"

namespace domkit {

ReportRow make_report_row(const Graph& g, std::size_t budget) {
  using D = ElementDomain;
  const auto start = std::chrono::steady_clock::now();
  ReportRow row;
  row.graph6 = encode_graph6(g);
  row.n = g.order();
  row.m = g.size();
  row.delta = g.min_degree();

  const FundamentalProfile profile = nine_numbers(g, budget);
  for (D u : kAllDomains) {
    for (D w : kAllDomains) {
      row.nine[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = profile.value(u, w);
    }
  }
  row.gamma = profile.gamma();
  row.gamma_ve = profile.gamma_ve();
  row.gamma_ev = profile.gamma_ev();
  row.gamma_prime = profile.gamma_prime();
  row.gamma_dprime = profile.gamma_dprime();

  const LawReport thm1 = check_theorem1(g, budget);
  const LawReport thm2 = check_theorem2(g, budget);
  const LawReport payan = check_payan(g, budget);
  row.thm1_ok = thm1.holds();
  row.thm2_ok = thm2.holds();
  row.payan_ok = payan.holds();
  row.nodes = profile.total_nodes() + thm1.nodes + thm2.nodes + payan.nodes;
  row.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return row;
}

std::vector<ReportRow> scan_graphs(std::span<const Graph> graphs, std::size_t budget,
                                   std::size_t threads) {
  std::vector<ReportRow> rows(graphs.size());
  if (threads <= 1 || graphs.size() <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) rows[i] = make_report_row(graphs[i], budget);
    return rows;
  }
  // Work-stealing by index; each slot is written by exactly one worker.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(graphs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        rows[i] = make_report_row(graphs[i], budget);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t count = std::min(threads, graphs.size());
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string emit_report(std::span<const ReportRow> rows) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  for (const ReportRow& r : rows) {
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.gamma << ','
        << r.gamma_ve << ',' << r.gamma_ev << ',' << r.gamma_prime << ',' << r.gamma_dprime
        << ',' << (r.thm1_ok ? 1 : 0) << ',' << (r.thm2_ok ? 1 : 0) << ','
        << (r.payan_ok ? 1 : 0) << ',' << r.nodes << ',' << r.millis << '\n';
  }
  return out.str();
}

std::vector<ReportRow> parse_report(std::string_view csv) {
  std::vector<ReportRow> rows;
  std::size_t line_no = 0;
  std::size_t cursor = 0;
  bool header_seen = false;
  while (cursor < csv.size()) {
    std::size_t eol = csv.find('\n', cursor);
    if (eol == std::string_view::npos) eol = csv.size();
    std::string_view line = csv.substr(cursor, eol - cursor);
    cursor = eol + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kReportHeader) {
        throw ParseError(ParseError::Kind::kBadHeader, line_no, "report: unexpected header");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 14) {
      throw ParseError(ParseError::Kind::kArity, line_no, "report: expected 14 columns");
    }
    auto number = [&](std::string_view f) {
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw ParseError(ParseError::Kind::kArity, line_no,
                         "report: '" + std::string(f) + "' is not an integer");
      }
      return v;
    };
    ReportRow r;
    r.graph6 = std::string(fields[0]);
    r.n = number(fields[1]);
    r.m = number(fields[2]);
    r.delta = number(fields[3]);
    r.gamma = number(fields[4]);
    r.gamma_ve = number(fields[5]);
    r.gamma_ev = number(fields[6]);
    r.gamma_prime = number(fields[7]);
    r.gamma_dprime = number(fields[8]);
    r.thm1_ok = number(fields[9]) != 0;
    r.thm2_ok = number(fields[10]) != 0;
    r.payan_ok = number(fields[11]) != 0;
    r.nodes = number(fields[12]);
    r.millis = number(fields[13]);
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError(ParseError::Kind::kEmptyInput, 0, "report: empty input");
  return rows;
}

}  // namespace domkit
