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

#ifndef FULKERSON_COVERING_HPP_
#define FULKERSON_COVERING_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fulkerson/graph.hpp"
#include "fulkerson/matchcolor.hpp"
#include "fulkerson/search.hpp"

namespace fulkerson {

// Three perfect matchings of one graph with no edge common to all three.
class FRTriple {
 public:
  FRTriple(const MultiGraph& g, PerfectMatching m1, PerfectMatching m2,
           PerfectMatching m3);

  const PerfectMatching& operator[](int i) const { return m_.at(i); }
  const std::array<PerfectMatching, 3>& matchings() const { return m_; }

  friend bool operator==(const FRTriple&, const FRTriple&) = default;

 private:
  std::array<PerfectMatching, 3> m_;
};

// t_i holds the edges covered exactly i times.
struct TPartition {
  EdgeSet t0, t1, t2;

  friend bool operator==(const TPartition&, const TPartition&) = default;
};

// Throws InvariantError if t0 and t2 come out as anything but disjoint
// matchings.
TPartition t_partition(const MultiGraph& g, const FRTriple& t);

struct FulkersonCovering {
  std::array<PerfectMatching, 6> matchings;

  friend bool operator==(const FulkersonCovering&,
                         const FulkersonCovering&) = default;
};

struct CoverageReport {
  bool ok = false;
  std::vector<int> coverage;  // per edge id
  std::vector<EdgeId> wrong;  // edges whose coverage is not 2
};

// Throws PreconditionError if a member is not a perfect matching of g.
CoverageReport verify_covering(const MultiGraph& g, const FulkersonCovering& f);

bool is_proper(const FulkersonCovering& f);

bool are_compatible(const MultiGraph& g, const FRTriple& t,
                    const FRTriple& t2);

// Throws PreconditionError unless the triples are compatible.
FulkersonCovering covering_from_compatible(const MultiGraph& g,
                                           const FRTriple& t,
                                           const FRTriple& t2);

class LiftError : public PreconditionError {
 public:
  enum class Reason { overlap, not_cycles, not_colourable };
  LiftError(Reason reason, const std::string& what)
      : PreconditionError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Builds a triple with t2 = a1 and t0 = a2 by colouring the graph split at
// a1 (paired along a2) and lifting the colours back. Throws LiftError.
FRTriple fr_triple_from_matchings(const CubicGraph& g, const Matching& a1,
                                  const Matching& a2);

// Streams perfect matchings in lexicographic order and completes each pair
// with a matching avoiding their common edges.
SearchResult<FRTriple> find_fr_triple(const CubicGraph& g,
                                      const SearchLimits& limits = {});

enum class CoveringStrategy { color, exact2cover, a1a2, automatic };

// Accepts color, exact2cover, a1a2, auto (case-insensitive). Throws
// PreconditionError otherwise.
CoveringStrategy parse_strategy(std::string_view name);
const char* to_string(CoveringStrategy s);

// Every returned covering has passed verify_covering. color on a class-2
// graph reports inconclusive.
SearchResult<FulkersonCovering> find_fulkerson_covering(
    const CubicGraph& g, CoveringStrategy strategy,
    const SearchLimits& limits = {});

// Exhaustive double-cover search over all perfect matchings. Coverings are
// produced once each as multisets, members in enumeration order.
SearchResult<std::vector<FulkersonCovering>> all_fulkerson_coverings(
    const CubicGraph& g, bool proper_only, std::size_t max_count,
    const SearchLimits& limits = {});

struct BiHamiltonWitness {
  EdgeColoring coloring;
  // Colour pairs (alpha, beta) and (beta, gamma) span non-Hamiltonian
  // 2-factors.
  int alpha = 0, beta = 1, gamma = 2;
};

struct BiHamiltonicity {
  bool bi_hamiltonian = false;
  std::optional<BiHamiltonWitness> witness;
};

// Throws PreconditionError on graphs that are not 3-edge-colourable.
BiHamiltonicity is_bi_hamiltonian(const CubicGraph& g);

// Kempe-exchanges on the (alpha, beta) cycle through the lowest vertex and
// on the (beta, gamma) cycle through the lowest vertex, and returns
// {alpha, alpha', beta', beta'', gamma, gamma''}. Throws PreconditionError
// if either 2-factor is a Hamiltonian cycle.
FulkersonCovering proper_covering_from_witness(const CubicGraph& g,
                                               const BiHamiltonWitness& w);

}  // namespace fulkerson

#endif  // FULKERSON_COVERING_HPP_
