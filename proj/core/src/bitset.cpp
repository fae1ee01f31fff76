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

#include <cassert>

namespace domkit {

void Bitset::set_all() {
  for (auto& w : words_) w = ~Word{0};
  if (const std::size_t tail = size_ % kWordBits; tail != 0) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

void Bitset::reset_all() {
  for (auto& w : words_) w = 0;
}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::any() const {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool Bitset::intersects(const Bitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  assert(size_ == other.size_);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t Bitset::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  Word bits = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Bitset::to_string() const {
  std::string s(size_, '0');
  for_each([&](std::size_t i) { s[i] = '1'; });
  return s;
}

}  // namespace domkit
