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

#ifndef DOMKIT_EDGE_LIST_HPP_
#define DOMKIT_EDGE_LIST_HPP_

#include <string>
#include <string_view>

#include "domkit/graph.hpp"

namespace domkit {

// Text format: a header line "n m", then m lines "u v" with 0-based
// endpoints. '#' starts a comment; blank lines are skipped. Duplicate edges
// are rejected. ParseError::position() is the 1-based line number.
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

}  // namespace domkit

#endif  // DOMKIT_EDGE_LIST_HPP_
