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

#include "fulkerson/generators.hpp"

#include <algorithm>
#include <string>

namespace fulkerson {
namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void require_odd_at_least_three(int k, const char* what) {
  if (k < 3 || k % 2 == 0) {
    throw PreconditionError(std::string(what) +
                            " needs an odd parameter k >= 3, got " +
                            std::to_string(k));
  }
}

}  // namespace

void NamedVertexMap::add(VertexLabel label, VertexId id) {
  if (id != static_cast<VertexId>(labels_.size())) {
    throw PreconditionError("vertex labels must be added in id order");
  }
  if (!ids_.emplace(label, id).second) {
    throw PreconditionError("duplicate vertex label " + label.role +
                            std::to_string(label.index));
  }
  labels_.push_back(std::move(label));
}

VertexId NamedVertexMap::id(const std::string& role, int index) const {
  auto it = ids_.find(VertexLabel{role, index});
  if (it == ids_.end()) {
    throw PreconditionError("no vertex labelled " + role +
                            std::to_string(index));
  }
  return it->second;
}

const VertexLabel& NamedVertexMap::label(VertexId id) const {
  if (id < 0 || id >= static_cast<VertexId>(labels_.size())) {
    throw PreconditionError("no label for vertex " + std::to_string(id));
  }
  return labels_[id];
}

CubicGraph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
  return CubicGraph(10, e);
}

CubicGraph flower_snark(int k) {
  require_odd_at_least_three(k, "flower snark");
  auto x = [](int i) { return i; };
  auto y = [k](int i) { return k + i; };
  auto z = [k](int i) { return 2 * k + i; };
  auto t = [k](int i) { return 3 * k + i; };
  EdgeList e;
  for (int i = 0; i < k; ++i) e.emplace_back(x(i), x((i + 1) % k));
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(y(i), y(i + 1));
  e.emplace_back(y(k - 1), z(0));
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(z(i), z(i + 1));
  e.emplace_back(z(k - 1), y(0));
  for (int i = 0; i < k; ++i) {
    e.emplace_back(t(i), x(i));
    e.emplace_back(t(i), y(i));
    e.emplace_back(t(i), z(i));
  }
  return CubicGraph(4 * k, e);
}

NamedVertexMap flower_snark_names(int k) {
  require_odd_at_least_three(k, "flower snark");
  NamedVertexMap names;
  VertexId v = 0;
  for (const char* role : {"x", "y", "z", "t"}) {
    for (int i = 0; i < k; ++i) names.add({role, i}, v++);
  }
  return names;
}

CubicGraph goldberg(int k) {
  require_odd_at_least_three(k, "Goldberg graph");
  enum { a, b, c, d, e, f, g, h };
  auto at = [](int block, int letter) { return 8 * block + letter; };
  EdgeList edges;
  for (int i = 0; i < k; ++i) {
    // Petersen graph minus a 3-vertex path, hung from a_i through b_i.
    // e_i, g_i take edges from the left block and f_i, h_i feed the right.
    for (auto [x, y] : {std::pair{a, b}, {b, c}, {b, d}, {c, e}, {c, h},
                        {d, f}, {d, g}, {e, f}, {g, h}}) {
      edges.emplace_back(at(i, x), at(i, y));
    }
  }
  for (int i = 0; i < k; ++i) {
    const int next = (i + 1) % k;
    edges.emplace_back(at(i, a), at(next, a));
    edges.emplace_back(at(i, f), at(next, e));
    edges.emplace_back(at(i, h), at(next, g));
  }
  return CubicGraph(8 * k, edges);
}
NamedVertexMap goldberg_names(int k) {
  require_odd_at_least_three(k, "Goldberg graph");
  NamedVertexMap names;
  for (int i = 0; i < k; ++i) {
    for (int letter = 0; letter < 8; ++letter) {
      names.add({std::string(1, static_cast<char>('a' + letter)), i},
                8 * i + letter);
    }
  }
  return names;
}

CubicGraph theta() { return CubicGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

CubicGraph k4() {
  return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph k33() {
  EdgeList e;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
  }
  return CubicGraph(6, e);
}

CubicGraph cube_q3() {
  EdgeList e;
  for (int v = 0; v < 8; ++v) {
    for (int bit : {1, 2, 4}) {
      if ((v & bit) == 0) e.emplace_back(v, v | bit);
    }
  }
  return CubicGraph(8, e);
}

CubicGraph doubled_matching_cycle(int m) {
  if (m < 4 || m % 2 != 0) {
    throw PreconditionError("doubled_matching_cycle needs an even m >= 4");
  }
  EdgeList e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  for (int i = 0; i < m; i += 2) e.emplace_back(i, i + 1);
  return CubicGraph(m, e);
}

CubicGraph ten_vertex_c5_example() {
  // a..e = 0..4, digit d = 4 + d.
  auto digit = [](int d) { return 4 + d; };
  EdgeList e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (int d = 1; d <= 5; ++d) e.emplace_back(digit(d), digit(d % 5 + 1));
  e.emplace_back(0, digit(2));
  e.emplace_back(1, digit(4));
  e.emplace_back(2, digit(3));
  e.emplace_back(3, digit(5));
  e.emplace_back(4, digit(1));
  return CubicGraph(10, e);
}

NamedVertexMap ten_vertex_c5_names() {
  NamedVertexMap names;
  VertexId v = 0;
  for (const char* role : {"a", "b", "c", "d", "e", "1", "2", "3", "4", "5"}) {
    names.add({role, 0}, v++);
  }
  return names;
}

// ------------------------------------------------------------ dot product

DotProductEnds resolve_dot_product(const CubicGraph& g1, const CubicGraph& g2,
                                   const DotProductSpec& spec) {
  const MultiGraph& h1 = g1;
  const MultiGraph& h2 = g2;
  if (!h1.has_edge(spec.e1) || !h1.has_edge(spec.e2)) {
    throw PreconditionError("dot product: e1/e2 not edges of the first graph");
  }
  if (!h2.has_edge(spec.e3)) {
    throw PreconditionError("dot product: e3 not an edge of the second graph");
  }
  if (spec.e1 == spec.e2) {
    throw PreconditionError("dot product: e1 and e2 must differ");
  }
  const Edge& e1 = h1.edge(spec.e1);
  const Edge& e2 = h1.edge(spec.e2);
  if (e1.a == e2.a || e1.a == e2.b || e1.b == e2.a || e1.b == e2.b) {
    throw PreconditionError("dot product: e1 and e2 must not be adjacent");
  }
  DotProductEnds ends{};
  ends.u1 = std::min(e1.a, e1.b);
  ends.v1 = std::max(e1.a, e1.b);
  ends.u2 = std::min(e2.a, e2.b);
  ends.v2 = std::max(e2.a, e2.b);

  const Edge& e3 = h2.edge(spec.e3);
  ends.x1 = spec.flip_e3 ? e3.b : e3.a;
  ends.x2 = spec.flip_e3 ? e3.a : e3.b;
  auto others = [&](VertexId x, VertexId partner, bool swap) {
    std::vector<EdgeId> rest;
    for (EdgeId e : h2.incident(x)) {
      if (e != spec.e3) rest.push_back(e);
    }
    VertexId p = h2.other_end(rest[0], x);
    VertexId q = h2.other_end(rest[1], x);
    if (p == partner || q == partner || p == q) {
      throw PreconditionError(
          "dot product: ends of e3 need two further distinct neighbours");
    }
    return swap ? std::pair{q, p} : std::pair{p, q};
  };
  std::tie(ends.y1, ends.y2) = others(ends.x1, ends.x2, spec.swap_y);
  std::tie(ends.z1, ends.z2) = others(ends.x2, ends.x1, spec.swap_z);
  return ends;
}

DotProduct dot_product(const CubicGraph& g1, const CubicGraph& g2,
                       const DotProductSpec& spec) {
  const DotProductEnds ends = resolve_dot_product(g1, g2, spec);
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  DotProvenance prov;
  prov.vertex_from_first.resize(n1);
  prov.vertex_from_second.assign(n2, -1);
  prov.edge_from_first.assign(g1.edge_count(), -1);
  prov.edge_from_second.assign(g2.edge_count(), -1);

  for (VertexId v = 0; v < n1; ++v) {
    prov.vertex_from_first[v] = v;
    prov.vertex_origin.push_back(Origin::first);
    prov.vertex_source.push_back(v);
  }
  VertexId next = n1;
  for (VertexId v = 0; v < n2; ++v) {
    if (v == ends.x1 || v == ends.x2) continue;
    prov.vertex_from_second[v] = next++;
    prov.vertex_origin.push_back(Origin::second);
    prov.vertex_source.push_back(v);
  }

  EdgeList edges;
  auto push = [&](VertexId a, VertexId b, Origin origin, int source) {
    const EdgeId id = static_cast<EdgeId>(edges.size());
    edges.emplace_back(a, b);
    prov.edge_origin.push_back(origin);
    prov.edge_source.push_back(source);
    return id;
  };
  for (const Edge& e : g1.edges()) {
    if (e.id == spec.e1 || e.id == spec.e2) continue;
    prov.edge_from_first[e.id] = push(e.a, e.b, Origin::first, e.id);
  }
  for (const Edge& e : g2.edges()) {
    if (e.a == ends.x1 || e.a == ends.x2 || e.b == ends.x1 ||
        e.b == ends.x2) {
      continue;
    }
    prov.edge_from_second[e.id] =
        push(prov.vertex_from_second[e.a], prov.vertex_from_second[e.b],
             Origin::second, e.id);
  }
  const auto& in2 = prov.vertex_from_second;
  prov.joining[0] = push(ends.u1, in2[ends.y1], Origin::joining, 0);
  prov.joining[1] = push(ends.v1, in2[ends.y2], Origin::joining, 1);
  prov.joining[2] = push(ends.u2, in2[ends.z1], Origin::joining, 2);
  prov.joining[3] = push(ends.v2, in2[ends.z2], Origin::joining, 3);

  return DotProduct{CubicGraph(n1 + n2 - 2, edges), std::move(prov)};
}

std::vector<DotProductSpec> enumerate_dot_product_specs(const CubicGraph& g1,
                                                        const CubicGraph& g2) {
  std::vector<DotProductSpec> specs;
  for (EdgeId e1 = 0; e1 < g1.edge_count(); ++e1) {
    for (EdgeId e2 = e1 + 1; e2 < g1.edge_count(); ++e2) {
      for (EdgeId e3 = 0; e3 < g2.edge_count(); ++e3) {
        for (int bits = 0; bits < 8; ++bits) {
          DotProductSpec s{e1, e2, e3, (bits & 4) != 0, (bits & 2) != 0,
                           (bits & 1) != 0};
          try {
            resolve_dot_product(g1, g2, s);
          } catch (const PreconditionError&) {
            continue;
          }
          specs.push_back(s);
        }
      }
    }
  }
  return specs;
}

CubicGraph dot_blowup(const CubicGraph& base,
                      const std::vector<EdgeId>& base_matching,
                      const CubicGraph& piece,
                      std::pair<EdgeId, EdgeId> piece_edges) {
  CubicGraph current = base;
  std::vector<EdgeId> where(base.edge_count());
  for (EdgeId e = 0; e < base.edge_count(); ++e) where[e] = e;
  for (EdgeId xy : base_matching) {
    if (where[xy] < 0) {
      throw PreconditionError("dot_blowup: base edges must form a matching");
    }
    DotProductSpec spec{piece_edges.first, piece_edges.second, where[xy]};
    DotProduct step = dot_product(piece, current, spec);
    for (EdgeId& w : where) {
      w = (w < 0) ? -1 : step.provenance.edge_from_second[w];
    }
    current = std::move(step.graph);
  }
  return current;
}

}  // namespace fulkerson
