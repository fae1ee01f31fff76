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

#include "domkit/graph6.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

#include "domkit/errors.hpp"

namespace domkit {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxEncodable = (std::uint64_t{1} << 36) - 1;

[[noreturn]] void fail(ParseError::Kind kind, std::size_t offset, const std::string& detail) {
  std::ostringstream msg;
  msg << "graph6: " << detail << " at byte " << offset;
  throw ParseError(kind, offset, msg.str());
}

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text, std::size_t max_order) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    base = kHeader.size();
  } else if (text.starts_with(">>")) {
    fail(ParseError::Kind::kBadHeader, 0, "unrecognized header");
  }
  std::string_view body = text.substr(base);
  if (body.ends_with("\r\n")) {
    body.remove_suffix(2);
  } else if (body.ends_with('\n')) {
    body.remove_suffix(1);
  }
  if (body.empty()) fail(ParseError::Kind::kEmptyInput, base, "empty input");

  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!printable(body[i])) {
      std::ostringstream detail;
      detail << "byte 0x" << std::hex << (static_cast<unsigned>(body[i]) & 0xffu)
             << " outside the printable range 63..126";
      fail(ParseError::Kind::kBadCharacter, base + i, detail.str());
    }
  }

  auto sextet = [&](std::size_t i) {
    return static_cast<std::uint64_t>(body[i] - kBias);
  };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (body[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else if (body.size() >= 2 && body[1] == '~') {
    if (body.size() < 8) fail(ParseError::Kind::kBadLengthPrefix, base, "truncated 8-byte length");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    pos = 8;
  } else {
    if (body.size() < 4) fail(ParseError::Kind::kBadLengthPrefix, base, "truncated 4-byte length");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(i);
    pos = 4;
  }
  if (n == 0) fail(ParseError::Kind::kBadLengthPrefix, base, "order 0 is not a graph");
  if (n > max_order) {
    std::ostringstream detail;
    detail << "order " << n << " exceeds the limit " << max_order;
    fail(ParseError::Kind::kOrderTooLarge, base, detail.str());
  }

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t have = body.size() - pos;
  if (have < need) {
    std::ostringstream detail;
    detail << "expected " << need << " adjacency bytes, found " << have;
    fail(ParseError::Kind::kMissingBytes, base + body.size(), detail.str());
  }
  if (have > need) {
    std::ostringstream detail;
    detail << (have - need) << " unexpected trailing byte(s)";
    fail(ParseError::Kind::kTrailingBytes, base + pos + need, detail.str());
  }

  std::vector<VertexPair> edges;
  std::uint64_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const std::uint64_t byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(u, v);
    }
  }
  if (need > 0 && bits % 6 != 0) {
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if ((sextet(pos + need - 1) & pad_mask) != 0) {
      fail(ParseError::Kind::kNonzeroPadding, base + pos + need - 1, "nonzero padding bits");
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxEncodable) throw GraphError("graph6 cannot encode orders above 2^36 - 1");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
    }
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace domkit
