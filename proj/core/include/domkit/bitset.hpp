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

#ifndef DOMKIT_BITSET_HPP_
#define DOMKIT_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace domkit {

// Fixed-size bit vector with word-level set algebra. The size is chosen at
// construction; binary operations require equal sizes.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all();
  void reset_all();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool intersects(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  // this := this \ other
  Bitset& subtract(const Bitset& other);

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;

  // Bits rendered low index first, e.g. "0110".
  std::string to_string() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

}  // namespace domkit

#endif  // DOMKIT_BITSET_HPP_
