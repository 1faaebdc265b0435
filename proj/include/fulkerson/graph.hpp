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

#ifndef FULKERSON_GRAPH_HPP_
#define FULKERSON_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fulkerson/error.hpp"

namespace fulkerson {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId a;
  VertexId b;

  bool is_loop() const { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with dense vertex ids 0..n-1 and dense edge ids
// 0..m-1. Parallel edges and loops are allowed; an edge is identified by its
// id, never by its endpoints. Immutable once constructed.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count,
             const std::vector<std::pair<VertexId, VertexId>>& endpoints);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }

  // Incident edge ids in increasing order; a loop is listed twice.
  std::span<const EdgeId> incident(VertexId v) const;

  VertexId other_end(EdgeId e, VertexId v) const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  // Structural hash of (n, edge list). Used as the host tag of edge sets.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const MultiGraph& x, const MultiGraph& y) {
    return x.vertex_count() == y.vertex_count() && x.edges_ == y.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::uint64_t fingerprint_ = 0;
};

// A loopless multigraph in which every vertex has degree exactly 3.
class CubicGraph {
 public:
  CubicGraph() = default;
  explicit CubicGraph(MultiGraph g);
  CubicGraph(int vertex_count,
             const std::vector<std::pair<VertexId, VertexId>>& endpoints)
      : CubicGraph(MultiGraph(vertex_count, endpoints)) {}

  const MultiGraph& graph() const { return graph_; }
  operator const MultiGraph&() const { return graph_; }  // NOLINT

  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }
  const Edge& edge(EdgeId e) const { return graph_.edge(e); }
  std::span<const Edge> edges() const { return graph_.edges(); }
  std::span<const EdgeId> incident(VertexId v) const {
    return graph_.incident(v);
  }
  VertexId other_end(EdgeId e, VertexId v) const {
    return graph_.other_end(e, v);
  }
  std::uint64_t fingerprint() const { return graph_.fingerprint(); }

  friend bool operator==(const CubicGraph&, const CubicGraph&) = default;

 private:
  MultiGraph graph_;
};

// Set of edge ids of one host graph, stored as a bitset. Binary operations
// require both operands to share the same host tag.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const MultiGraph& host);
  EdgeSet(const MultiGraph& host, std::span<const EdgeId> ids);
  EdgeSet(const MultiGraph& host, std::initializer_list<EdgeId> ids);

  // Every edge of the host.
  static EdgeSet all(const MultiGraph& host);

  void insert(EdgeId e);
  void erase(EdgeId e);
  bool contains(EdgeId e) const;

  std::size_t size() const;
  bool empty() const;
  int universe() const { return universe_; }
  std::uint64_t host() const { return host_; }

  std::vector<EdgeId> ids() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int bit = __builtin_ctzll(bits);
        f(static_cast<EdgeId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  EdgeSet& operator^=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet x, const EdgeSet& y) { return x |= y; }
  friend EdgeSet operator&(EdgeSet x, const EdgeSet& y) { return x &= y; }
  friend EdgeSet operator-(EdgeSet x, const EdgeSet& y) { return x -= y; }
  friend EdgeSet operator^(EdgeSet x, const EdgeSet& y) { return x ^= y; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  // Lexicographic order of the sorted id lists.
  friend std::strong_ordering operator<=>(const EdgeSet& x, const EdgeSet& y);

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

 private:
  void check_host(const EdgeSet& other) const;
  void check_id(EdgeId e) const;

  std::vector<std::uint64_t> words_;
  int universe_ = 0;
  std::uint64_t host_ = 0;
};

// An edge set in which no two members share an endpoint. Loops never belong
// to a matching.
class Matching {
 public:
  Matching() = default;
  Matching(const MultiGraph& g, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const { return edges_.contains(e); }
  std::vector<EdgeId> ids() const { return edges_.ids(); }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching& x,
                                          const Matching& y) {
    return x.edges_ <=> y.edges_;
  }

 protected:
  struct Unchecked {};
  Matching(EdgeSet edges, Unchecked) : edges_(std::move(edges)) {}

 private:
  EdgeSet edges_;
};

// A matching that saturates every vertex.
class PerfectMatching : public Matching {
 public:
  PerfectMatching() = default;
  PerfectMatching(const MultiGraph& g, EdgeSet edges);
};

bool is_matching(const MultiGraph& g, const EdgeSet& s);
bool is_perfect_matching(const MultiGraph& g, const EdgeSet& s);

// A cycle given both as a closed vertex walk and its edges; edges[i] joins
// vertices[i] and vertices[(i + 1) % length].
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool is_odd() const { return length() % 2 == 1; }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Vertex-disjoint cycles.
using CycleSet = std::vector<Cycle>;

// Raised by cycle_decomposition; names the offending vertex.
class DegreeError : public PreconditionError {
 public:
  DegreeError(VertexId vertex, int degree);
  VertexId vertex() const { return vertex_; }
  int degree() const { return degree_; }

 private:
  VertexId vertex_;
  int degree_;
};

int degree(const MultiGraph& g, VertexId v);

bool is_connected(const MultiGraph& g);

// Component index per vertex, numbered by lowest member vertex.
std::vector<int> connected_components(const MultiGraph& g);

// Throws PreconditionError on disconnected input.
bool is_bridgeless(const MultiGraph& g);

// True iff no set of fewer than k edges leaves two components that both
// contain a cycle. Brute-force cut enumeration, 1 <= k <= 6.
bool cyclic_edge_connectivity_at_least(const CubicGraph& g, int k);

bool is_bipartite(const MultiGraph& g);

// Splits a 2-regular edge set into its cycles. Cycles start at their lowest
// vertex and continue towards the lower neighbour (lower edge id on ties);
// cycles are listed by starting vertex.
CycleSet cycle_decomposition(const MultiGraph& g, const EdgeSet& s);

}  // namespace fulkerson

template <>
struct std::hash<fulkerson::EdgeSet> {
  std::size_t operator()(const fulkerson::EdgeSet& s) const noexcept {
    return s.hash();
  }
};

#endif  // FULKERSON_GRAPH_HPP_
