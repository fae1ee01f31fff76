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

#include <random>

#include "domkit/errors.hpp"
#include "domkit/generators.hpp"
#include "gtest/gtest.h"

namespace domkit {
namespace {

using Kind = ParseError::Kind;

Kind kind_of(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return Kind::kEmptyInput;
}

std::size_t offset_of(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return SIZE_MAX;
}

// Strings below come from an independent reference encoder.
TEST(Graph6Test, ParseReferenceStrings) {
  EXPECT_EQ(parse_graph6("A_"), complete(2));
  EXPECT_EQ(parse_graph6("A?"), Graph(2, {}));
  EXPECT_EQ(parse_graph6("C~"), complete(4));
  EXPECT_EQ(parse_graph6("DhC"), path(5));
  EXPECT_EQ(parse_graph6("Dhc"), cycle(5));
  EXPECT_EQ(parse_graph6("GsaCC?"), star(7));
}

TEST(Graph6Test, EncodeReferenceStrings) {
  EXPECT_EQ(encode_graph6(complete(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph(2, {})), "A?");
  EXPECT_EQ(encode_graph6(complete(4)), "C~");
  EXPECT_EQ(encode_graph6(path(5)), "DhC");
  EXPECT_EQ(encode_graph6(star(7)), "GsaCC?");
  EXPECT_EQ(encode_graph6(Graph(1, {})), "@");
}

TEST(Graph6Test, LongLengthForm) {
  const std::string text = encode_graph6(path(63));
  EXPECT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(text.size(), 330u);
  EXPECT_EQ(parse_graph6(text), path(63));
  const Graph big = random_graph(300, 0.02, 4);
  EXPECT_EQ(parse_graph6(encode_graph6(big), 1000), big);
}

TEST(Graph6Test, HeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), complete(2));
  EXPECT_EQ(parse_graph6("A_\n"), complete(2));
  EXPECT_EQ(parse_graph6("A_\r\n"), complete(2));
  EXPECT_EQ(kind_of(">>sparse6<<A_"), Kind::kBadHeader);
}

TEST(Graph6Test, DistinctErrorsWithOffsets) {
  EXPECT_EQ(kind_of(""), Kind::kEmptyInput);
  EXPECT_EQ(kind_of("C"), Kind::kMissingBytes);
  EXPECT_EQ(offset_of("C"), 1u);
  EXPECT_EQ(kind_of("A_?"), Kind::kTrailingBytes);
  EXPECT_EQ(offset_of("A_?"), 2u);
  EXPECT_EQ(kind_of("A _"), Kind::kBadCharacter);
  EXPECT_EQ(offset_of("A _"), 1u);
  EXPECT_EQ(offset_of(">>graph6<<A\x01"), 11u);
  EXPECT_EQ(kind_of("~?"), Kind::kBadLengthPrefix);
  EXPECT_EQ(kind_of("?"), Kind::kBadLengthPrefix);
  EXPECT_EQ(kind_of("A`"), Kind::kNonzeroPadding);
  EXPECT_EQ(kind_of("~@?@"), Kind::kOrderTooLarge);  // n = 4097
}

TEST(Graph6Test, OrderLimit) {
  const std::string text = encode_graph6(path(100));
  EXPECT_THROW(parse_graph6(text, 99), ParseError);
  EXPECT_EQ(parse_graph6(text, 100), path(100));
}

TEST(Graph6Test, RoundTripCorpus) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(1 + seed % 40, 0.3, seed);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6Test, FuzzNeverCrashes) {
  std::mt19937_64 rng(2024);
  int accepted = 0;
  for (int i = 0; i < 2000; ++i) {
    std::string s(rng() % 12, '\0');
    for (char& c : s) c = static_cast<char>(rng() % 256);
    try {
      const Graph g = parse_graph6(s);
      ++accepted;
      EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
    } catch (const ParseError&) {
    }
  }
  EXPECT_LT(accepted, 2000);
}

}  // namespace
}  // namespace domkit
