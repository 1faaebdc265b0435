// Copyright 2026 The Fulkerson Lab Authors.
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

#ifndef FULKERSON_ERROR_HPP_
#define FULKERSON_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fulkerson {

// Raised when an argument violates an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a property that must hold by construction does not. Seeing one
// of these means a bug (or a counterexample), never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fulkerson

#endif  // FULKERSON_ERROR_HPP_
