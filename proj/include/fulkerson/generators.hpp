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

#ifndef FULKERSON_GENERATORS_HPP_
#define FULKERSON_GENERATORS_HPP_

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fulkerson/graph.hpp"

namespace fulkerson {

struct VertexLabel {
  std::string role;
  int index = 0;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

// Bijection between structured vertex labels and vertex ids.
class NamedVertexMap {
 public:
  void add(VertexLabel label, VertexId id);
  VertexId id(const std::string& role, int index = 0) const;
  const VertexLabel& label(VertexId id) const;
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, VertexId> ids_;
};

// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram (5+i)-(5+(i+2)%5).
// Edge ids: outer 0..4, spokes 5..9, inner 10..14.
CubicGraph petersen();

// Flower snark J_k for odd k >= 3. x_i = i, y_i = k+i, z_i = 2k+i,
// t_i = 3k+i. Edges: the x-cycle, the 2k-cycle y_0..y_{k-1} z_0..z_{k-1},
// then the claws t_i x_i, t_i y_i, t_i z_i.
CubicGraph flower_snark(int k);
NamedVertexMap flower_snark_names(int k);

// Goldberg graph G_k for odd k >= 3: k copies of an 8-vertex block on a..h
// (vertex 8i + letter). The a_i form a k-cycle; consecutive blocks are
// also joined by f_i e_{i+1} and h_i g_{i+1}.
CubicGraph goldberg(int k);
NamedVertexMap goldberg_names(int k);

CubicGraph theta();
CubicGraph k4();
CubicGraph k33();
CubicGraph cube_q3();

// Cycle v_0..v_{m-1} with the edges v_{2i} v_{2i+1} doubled; m even, m >= 4.
CubicGraph doubled_matching_cycle(int m);

// Two 5-cycles abcde (vertices 0..4) and 12345 (vertices 5..9) joined by
// a2, b4, c3, d5, e1. Edge ids: abcde cycle 0..4, 12345 cycle 5..9, then
// the cross edges in the order above (10..14).
CubicGraph ten_vertex_c5_example();
NamedVertexMap ten_vertex_c5_names();

// Edges e1 = u1v1 and e2 = u2v2 of the first graph are removed, the ends of
// e3 = x1x2 of the second graph are removed, and u1y1, v1y2, u2z1, v2z2 are
// added. u_i is the lower-numbered end of e_i; x1 is e3's `a` end unless
// flip_e3; y1 < y2 and z1 < z2 by (edge id, vertex) unless swapped.
struct DotProductSpec {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  EdgeId e3 = -1;
  bool flip_e3 = false;
  bool swap_y = false;
  bool swap_z = false;

  friend bool operator==(const DotProductSpec&,
                         const DotProductSpec&) = default;
};

struct DotProductEnds {
  VertexId u1, v1, u2, v2;  // in the first graph
  VertexId x1, x2, y1, y2, z1, z2;  // in the second graph
};

// Throws PreconditionError when the spec is not valid for (g1, g2).
DotProductEnds resolve_dot_product(const CubicGraph& g1, const CubicGraph& g2,
                                   const DotProductSpec& spec);

enum class Origin { first, second, joining };

// Where every element of a dot product came from. Source ids refer to the
// operand named by the origin; joining edges are numbered 0..3 in the order
// u1y1, v1y2, u2z1, v2z2. The reverse maps hold -1 for removed elements.
struct DotProvenance {
  std::vector<Origin> edge_origin;
  std::vector<int> edge_source;
  std::vector<Origin> vertex_origin;
  std::vector<VertexId> vertex_source;
  std::vector<EdgeId> edge_from_first;
  std::vector<EdgeId> edge_from_second;
  std::vector<VertexId> vertex_from_first;
  std::vector<VertexId> vertex_from_second;
  std::array<EdgeId, 4> joining{};
};

struct DotProduct {
  CubicGraph graph;
  DotProvenance provenance;
};

// Output keeps the first graph's vertices and edges (minus e1, e2) in order,
// then the surviving part of the second graph, then the four new edges.
DotProduct dot_product(const CubicGraph& g1, const CubicGraph& g2,
                       const DotProductSpec& spec);

// Every valid spec for (g1, g2), ordered by (e1, e2, e3, flip, swap_y,
// swap_z) with e1 < e2.
std::vector<DotProductSpec> enumerate_dot_product_specs(const CubicGraph& g1,
                                                        const CubicGraph& g2);

// For every edge x_i y_i of `base_matching` (ascending id) replaces the
// current graph H by piece . H with e3 = x_i y_i and (e1, e2) = piece_edges.
// All vertices of `base` vanish; the result has |M| * n(piece) vertices.
CubicGraph dot_blowup(const CubicGraph& base,
                      const std::vector<EdgeId>& base_matching,
                      const CubicGraph& piece,
                      std::pair<EdgeId, EdgeId> piece_edges);

}  // namespace fulkerson

#endif  // FULKERSON_GENERATORS_HPP_
