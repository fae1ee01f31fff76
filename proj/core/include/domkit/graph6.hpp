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

#ifndef DOMKIT_GRAPH6_HPP_
#define DOMKIT_GRAPH6_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "domkit/graph.hpp"

namespace domkit {

inline constexpr std::size_t kDefaultGraph6MaxOrder = 4096;

// One graph6 record. An optional ">>graph6<<" header and a single trailing
// newline are accepted. Padding bits must be zero. Throws ParseError whose
// position() is the byte offset into `text`.
Graph parse_graph6(std::string_view text, std::size_t max_order = kDefaultGraph6MaxOrder);

// Canonical graph6 without header or newline. Orders up to 62 use the
// one-byte length form; larger orders use the 4- or 8-byte forms.
std::string encode_graph6(const Graph& g);

}  // namespace domkit

#endif  // DOMKIT_GRAPH6_HPP_
