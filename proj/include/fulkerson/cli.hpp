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

#ifndef FULKERSON_CLI_HPP_
#define FULKERSON_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "fulkerson/ffamily.hpp"

namespace fulkerson {

// Exit codes of the command-line tool.
inline constexpr int kExitFound = 0;
inline constexpr int kExitAbsent = 1;  // also: certificate invalid, step failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct Recipe {
  CubicGraph base;
  std::vector<DotStep> steps;
};

// "base petersen|flower <k>" then "step type1|type2 petersen|flower <k>
// [e1=.. e2=.. e3=.. flip=0|1 swap_y=0|1 swap_z=0|1]" lines. Flower snarks
// need odd k >= 5. Throws ParseError.
Recipe parse_recipe(const std::string& text);

}  // namespace fulkerson

#endif  // FULKERSON_CLI_HPP_
