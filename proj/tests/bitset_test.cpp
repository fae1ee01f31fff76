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

#include "domkit/bitset.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

namespace domkit {
namespace {

TEST(BitsetTest, SetResetAcrossWordBoundary) {
  Bitset b(130);
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 4u);
  EXPECT_TRUE(b.test(64));
  b.reset(64);
  EXPECT_FALSE(b.test(64));
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{0, 63, 129}));
  EXPECT_EQ(b.find_next(1), 63u);
  EXPECT_EQ(b.find_next(130), 130u);
}

TEST(BitsetTest, SetAllRespectsSize) {
  Bitset b(70);
  b.set_all();
  EXPECT_EQ(b.count(), 70u);
  b.reset_all();
  EXPECT_TRUE(b.none());
}

TEST(BitsetTest, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 1 + rng() % 200;
    Bitset a(size), b(size);
    std::set<std::size_t> sa, sb;
    for (std::size_t i = 0; i < size; ++i) {
      if (rng() % 3 == 0) {
        a.set(i);
        sa.insert(i);
      }
      if (rng() % 3 == 0) {
        b.set(i);
        sb.insert(i);
      }
    }
    std::size_t common = 0;
    for (auto x : sa) common += sb.count(x);
    EXPECT_EQ(a.intersection_count(b), common);
    EXPECT_EQ(a.intersects(b), common > 0);
    EXPECT_EQ((a | b).count(), sa.size() + sb.size() - common);
    Bitset diff = a;
    diff.subtract(b);
    EXPECT_EQ(diff.count(), sa.size() - common);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_EQ(a.is_subset_of(b), common == sa.size());
  }
}

}  // namespace
}  // namespace domkit
