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

#ifndef FULKERSON_FFAMILY_HPP_
#define FULKERSON_FFAMILY_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fulkerson/covering.hpp"
#include "fulkerson/generators.hpp"
#include "fulkerson/matchcolor.hpp"
#include "fulkerson/search.hpp"

namespace fulkerson {

// Four disjoint sub-matchings A, B, C, D of a perfect matching m, plus the
// edge set N they determine on the cycles of G \ m.
struct FFamily {
  PerfectMatching m;
  std::array<Matching, 4> members;
  Matching n_edges;

  friend bool operator==(const FFamily&, const FFamily&) = default;
};

struct FamilyProblem {
  int cycle = -1;  // index into the report's cycles; -1 for global problems
  std::string condition;  // "i", "ii", "iii", "balanced", "nonempty", "N"
  std::string detail;
};

struct FFamilyReport {
  bool ok = false;
  CycleSet cycles;  // of G \ m
  std::vector<FamilyProblem> problems;  // at most one per cycle
};

// Throws PreconditionError unless m is a perfect matching of g and the
// members are pairwise disjoint subsets of m. Members must be nonempty.
FFamilyReport verify_ffamily(const CubicGraph& g, const FFamily& fam);

// For every cycle of G \ m met by the members, in cycle order: the 2-edge
// matchings of cycle edges on its four member-incident vertices, sorted.
// Empty when conditions i-ii fail or some cycle admits no such matching.
struct NOption {
  int cycle;
  std::vector<std::array<EdgeId, 2>> matchings;
};
std::optional<std::vector<NOption>> n_options(
    const CubicGraph& g, const PerfectMatching& m,
    const std::array<Matching, 4>& members);

// The first option on every cycle.
std::optional<Matching> derive_n(const CubicGraph& g, const PerfectMatching& m,
                                 const std::array<Matching, 4>& members);

// No choice of alternating restrictions double-covers a cycle. Never
// expected for a family that verifies.
class CoveringConstructionError : public InvariantError {
 public:
  CoveringConstructionError(int cycle, const std::string& what)
      : InvariantError(what), cycle_(cycle) {}
  int cycle() const { return cycle_; }

 private:
  int cycle_;
};

// Returns {M, M_A, M_B, M_C, M_D, M'} with M' = (M \ members) + N. Throws
// PreconditionError if the family does not verify.
FulkersonCovering covering_from_ffamily(const CubicGraph& g,
                                        const FFamily& fam);

// Labels the edges of m (every perfect matching in lexicographic order when
// m is absent) with A..D or nothing, cycle by cycle.
SearchResult<FFamily> find_ffamily(const CubicGraph& g,
                                   const std::optional<PerfectMatching>& m = {},
                                   const SearchLimits& limits = {});

// First perfect matching (lexicographic) whose complement is exactly two
// odd cycles.
std::optional<PerfectMatching> find_two_odd_cycle_matching(const CubicGraph& g);

struct TransportedFamily {
  DotProduct product;
  FFamily family;
};

// The family of g2 carried into g1 . g2; spec.e3 plays xy. e1 and e2 must
// lie on the two cycles of g1 \ m1. Throws PreconditionError.
TransportedFamily dot_preserve_type1(const CubicGraph& g1,
                                     const PerfectMatching& m1,
                                     const CubicGraph& g2, const FFamily& fam2,
                                     const DotProductSpec& spec);

// The family of g1 carried into g1 . g2; spec.e1, spec.e2 avoid m1 and N,
// spec.e3 lies in m2 and joins the two cycles of g2 \ m2.
TransportedFamily dot_preserve_type2(const CubicGraph& g1, const FFamily& fam1,
                                     const CubicGraph& g2,
                                     const PerfectMatching& m2,
                                     const DotProductSpec& spec);

// First valid spec in enumeration order for each construction.
std::optional<DotProductSpec> first_type1_spec(const CubicGraph& g1,
                                               const PerfectMatching& m1,
                                               const CubicGraph& g2,
                                               const FFamily& fam2);
std::optional<DotProductSpec> first_type2_spec(const CubicGraph& g1,
                                               const FFamily& fam1,
                                               const CubicGraph& g2,
                                               const PerfectMatching& m2);

enum class Preservation { type1, type2 };

struct DotStep {
  Preservation type = Preservation::type1;
  CubicGraph piece;
  std::optional<DotProductSpec> spec;  // first valid spec when absent
};

struct DotStage {
  CubicGraph graph;
  FFamily family;
  FulkersonCovering covering;
  std::optional<DotProductSpec> spec;  // absent for the base
};

class DotStepError : public PreconditionError {
 public:
  DotStepError(int step, const std::string& what)
      : PreconditionError("step " + std::to_string(step) + ": " + what),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

// G_0 = base with a searched family, G_i = G_{i-1} . piece_i. Every stage is
// verified. Throws DotStepError naming the failing step (0 = base).
std::vector<DotStage> iterate_dot_sequence(const CubicGraph& base,
                                           const std::vector<DotStep>& steps,
                                           const SearchLimits& limits = {});

struct C5Covering {
  enum class Outcome { found, no_c5_factor, gstar_not_colourable };
  Outcome outcome = Outcome::no_c5_factor;
  std::optional<C5TwoFactor> factor;
  std::optional<GStar> gstar;
  std::optional<FFamily> family;
  std::optional<FulkersonCovering> covering;
};

// Tries C5 2-factors in order until one gives a 5-edge-colourable G*; the
// first four colour classes become the family.
C5Covering covering_from_c5_structure(const CubicGraph& g);

}  // namespace fulkerson

#endif  // FULKERSON_FFAMILY_HPP_
