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

#include "domkit/errors.hpp"
#include "domkit/generators.hpp"
#include "gtest/gtest.h"

namespace domkit {
namespace {

using Kind = ParseError::Kind;

void expect_error(std::string_view text, Kind kind, std::size_t line) {
  try {
    parse_edge_list(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
    EXPECT_EQ(e.position(), line) << e.what();
  }
}

TEST(EdgeListTest, Examples) {
  EXPECT_EQ(parse_edge_list("2 1\n0 1"), complete(2));
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2"), path(3));
  expect_error("2 1\n0 0", Kind::kSelfLoop, 2);
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  const char* text =
      "# a triangle\n"
      "\n"
      "3 3   # header\n"
      "0 1\n"
      "  1 2\t\n"
      "\n"
      "2 0 # closing edge\n";
  EXPECT_EQ(parse_edge_list(text), complete(3));
}

TEST(EdgeListTest, Errors) {
  expect_error("3 1\n0 5", Kind::kRange, 2);
  expect_error("3 1\n0 -1", Kind::kRange, 2);
  expect_error("3 1\n0 1 2", Kind::kArity, 2);
  expect_error("3 1\n0 x", Kind::kArity, 2);
  expect_error("3 2\n0 1\n1 0", Kind::kDuplicateEdge, 3);
  expect_error("3 2\n0 1\n", Kind::kEdgeCountMismatch, 3);
  expect_error("3 1\n0 1\n1 2", Kind::kEdgeCountMismatch, 3);
  expect_error("0 0", Kind::kRange, 1);
  expect_error("# nothing\n", Kind::kArity, 2);
}

TEST(EdgeListTest, FormatRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_connected(10, 0.3, seed);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  }
}

}  // namespace
}  // namespace domkit
