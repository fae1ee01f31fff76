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

#include "domkit/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "domkit/errors.hpp"

namespace domkit {
namespace {

[[noreturn]] void fail(ParseError::Kind kind, std::size_t line, const std::string& detail) {
  std::ostringstream msg;
  msg << "edge list line " << line << ": " << detail;
  throw ParseError(kind, line, msg.str());
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ParseError::Kind::kArity, line, "'" + std::string(tok) + "' is not an integer");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<VertexPair> edges;
  std::set<VertexPair> seen;

  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    std::size_t eol = text.find('\n', cursor);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(cursor, eol - cursor);
    cursor = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      fail(ParseError::Kind::kArity, line_no,
           "expected 2 integers, found " + std::to_string(toks.size()) + " fields");
    }
    const long long a = to_int(toks[0], line_no);
    const long long b = to_int(toks[1], line_no);
    if (!have_header) {
      if (a < 1) fail(ParseError::Kind::kRange, line_no, "vertex count must be positive");
      if (b < 0) fail(ParseError::Kind::kRange, line_no, "edge count must be nonnegative");
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n) {
      fail(ParseError::Kind::kRange, line_no,
           "endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) fail(ParseError::Kind::kSelfLoop, line_no, "self-loop on vertex " + std::to_string(a));
    const VertexPair key{static_cast<std::size_t>(std::min(a, b)),
                         static_cast<std::size_t>(std::max(a, b))};
    if (!seen.insert(key).second) {
      fail(ParseError::Kind::kDuplicateEdge, line_no,
           "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    }
    if (edges.size() == m) {
      fail(ParseError::Kind::kEdgeCountMismatch, line_no,
           "more edge lines than the declared " + std::to_string(m));
    }
    edges.push_back(key);
  }
  if (!have_header) fail(ParseError::Kind::kArity, line_no, "missing 'n m' header");
  if (edges.size() != m) {
    fail(ParseError::Kind::kEdgeCountMismatch, line_no,
         "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace domkit
