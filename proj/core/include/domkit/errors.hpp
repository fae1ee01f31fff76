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

#ifndef DOMKIT_ERRORS_HPP_
#define DOMKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domkit {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid vertex pair or parameter at graph construction time.
class GraphError : public Error {
 public:
  using Error::Error;
};

// The requested domination number does not exist for this graph, e.g. edges
// asked to dominate an isolated vertex.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The branch-and-bound search hit its node limit before proving optimality.
class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(std::string what, std::size_t nodes)
      : Error(std::move(what)), nodes_(nodes) {}
  std::size_t nodes() const { return nodes_; }

 private:
  std::size_t nodes_;
};

class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// Exhaustive oracle refused a universe larger than its guard.
class UniverseTooLargeError : public Error {
 public:
  using Error::Error;
};

// Raised when a number is requested for a graph on which it is undefined
// (isolated vertices, trivial graph).
class DefinednessError : public Error {
 public:
  using Error::Error;
};

// A law checker was handed a graph outside its hypotheses.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 or edge-list text. `position()` is a byte offset for
// graph6 and a 1-based line number for edge lists.
class ParseError : public Error {
 public:
  enum class Kind {
    kEmptyInput,
    kBadLengthPrefix,
    kBadCharacter,
    kMissingBytes,
    kTrailingBytes,
    kNonzeroPadding,
    kOrderTooLarge,
    kBadHeader,
    kArity,
    kRange,
    kSelfLoop,
    kDuplicateEdge,
    kEdgeCountMismatch,
  };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace domkit

#endif  // DOMKIT_ERRORS_HPP_
