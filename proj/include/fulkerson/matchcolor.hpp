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

#ifndef FULKERSON_MATCHCOLOR_HPP_
#define FULKERSON_MATCHCOLOR_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "fulkerson/graph.hpp"
#include "fulkerson/search.hpp"

namespace fulkerson {

struct MatchingEnumeration {
  std::vector<PerfectMatching> matchings;
  bool truncated = false;
};

// Calls `visit` on every perfect matching that contains `include` and avoids
// `exclude`, in lexicographic order of sorted edge ids, until it returns
// false. Returns false iff stopped by the visitor.
bool for_each_perfect_matching(const MultiGraph& g, const EdgeSet& include,
                               const EdgeSet& exclude,
                               const std::function<bool(const EdgeSet&)>& visit);

// All perfect matchings in lexicographic order. With a limit, stops after
// `limit` matchings and sets `truncated` if more exist. Odd n gives none.
MatchingEnumeration enumerate_perfect_matchings(
    const MultiGraph& g, std::optional<std::size_t> limit = kDefaultMatchingLimit);

// Lexicographically first perfect matching containing `include` and
// avoiding `exclude`.
std::optional<PerfectMatching> find_perfect_matching(const MultiGraph& g,
                                                     const Matching& include,
                                                     const EdgeSet& exclude);

// True iff a = m ∩ m' for some perfect matching m'. Requires a ⊆ m.
bool is_m_balanced(const MultiGraph& g, const PerfectMatching& m,
                   const Matching& a);

// Result of splitting the edges of a matching and smoothing every vertex of
// degree two. Components are renumbered (ascending original id) and may carry
// loops at real vertices; closed chains without a real vertex are counted as
// vertexless loops.
struct SuppressedGraph {
  std::vector<MultiGraph> components;
  int loop_count = 0;
  // Per component: local vertex -> original vertex.
  std::vector<std::vector<VertexId>> vertex_origin;
  // Per component: local edge -> original edges absorbed, in path order.
  std::vector<std::vector<std::vector<EdgeId>>> edge_chain;
  // Original edges of each vertexless loop.
  std::vector<std::vector<EdgeId>> loop_chains;
};

// Splits every edge ab of `a`: the edge is dropped and the two remaining edges
// at a are joined to the two at b. When `partner` has an edge at both a and b
// those two are joined (and the other two); otherwise the lower-id edges are
// joined. Then degree-two vertices are suppressed.
SuppressedGraph split_and_suppress(const CubicGraph& g, const Matching& a,
                                   const std::optional<Matching>& partner = {});

struct EdgeColoring {
  std::vector<int> color;  // indexed by edge id
  int palette = 0;

  EdgeSet color_class(const MultiGraph& g, int c) const;
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

bool is_proper_coloring(const MultiGraph& g, const EdgeColoring& c);

// Proper edge coloring with `colors` colors, or absent. Deterministic
// backtracking: the edges of one maximum-degree vertex are pre-coloured
// 0, 1, 2, ..., then smallest-domain edge first with forward checking.
SearchResult<EdgeColoring> find_edge_coloring(const MultiGraph& g, int colors,
                                              const SearchLimits& limits = {});

std::optional<EdgeColoring> three_edge_coloring(const MultiGraph& g);

// One coloring per component when every component is 3-edge-colourable; the
// vertexless loops take any colour.
std::optional<std::vector<EdgeColoring>> three_edge_colorable(
    const SuppressedGraph& s);

// Every proper 3-edge coloring up to permutation of the colours. Each is the
// representative in which colours first appear in the order 0, 1, 2 along
// increasing edge ids.
std::vector<EdgeColoring> enumerate_three_edge_colorings(const MultiGraph& g);

// Cycles of the 2-factor formed by colours x and y.
CycleSet bicolored_cycles(const MultiGraph& g, const EdgeColoring& c, int x,
                          int y);

// Swaps x and y on `cycle`, which must be a whole {x, y} alternating cycle.
EdgeColoring kempe_exchange(const MultiGraph& g, const EdgeColoring& c, int x,
                            int y, const Cycle& cycle);

CycleSet two_factor_cycles(const CubicGraph& g, const PerfectMatching& m);

struct C5TwoFactor {
  PerfectMatching matching;
  CycleSet cycles;
};

// True iff every cycle is a 5-cycle spanning an induced C5.
bool is_chordless_c5_factor(const MultiGraph& g, const CycleSet& cycles);

// Visits every perfect matching whose complement is a 2-factor of chordless
// 5-cycles, in matching order. Stops when `visit` returns false.
void for_each_c5_two_factor(const CubicGraph& g,
                            const std::function<bool(const C5TwoFactor&)>& visit);
std::optional<C5TwoFactor> find_c5_two_factor(const CubicGraph& g);

// Five-regular multigraph with one vertex per cycle of the 2-factor (in the
// given order) and one edge per matching edge (ascending id).
struct GStar {
  MultiGraph graph;
  std::vector<EdgeId> source_edge;   // G* edge -> matching edge of g
  std::vector<int> cycle_of_vertex;  // vertex of g -> G* vertex
};

GStar shrink_to_gstar(const CubicGraph& g, const PerfectMatching& m,
                      const CycleSet& cycles);

// Throws PreconditionError unless gstar is 5-regular.
std::optional<EdgeColoring> five_edge_coloring(const MultiGraph& gstar);

}  // namespace fulkerson

#endif  // FULKERSON_MATCHCOLOR_HPP_
