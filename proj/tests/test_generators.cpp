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

#include <set>

#include "doctest.h"
#include "fulkerson/generators.hpp"
#include "fulkerson/matchcolor.hpp"
#include "oracles.hpp"

using namespace fulkerson;

namespace {

bool cubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) != 3) return false;
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
  }
  return true;
}

int girth(const MultiGraph& g) {
  int best = 1 << 30;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1);
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const VertexId v = queue[h];
      for (EdgeId e : g.incident(v)) {
        if (e == via[v]) continue;
        const VertexId w = g.other_end(e, v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          via[w] = e;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("petersen") {
  const CubicGraph p = petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK_FALSE(oracle::colorable(p, 3));
  CHECK(oracle::perfect_matchings(p).size() == 6);
  CHECK(girth(p) == 5);
}

TEST_CASE("flower snarks") {
  const CubicGraph j3 = flower_snark(3);
  CHECK(j3.vertex_count() == 12);
  CHECK(j3.edge_count() == 18);
  for (int k : {3, 5, 7}) {
    const CubicGraph j = flower_snark(k);
    CHECK(j.vertex_count() == 4 * k);
    CHECK(cubic(j));
  }
  const CubicGraph j5 = flower_snark(5);
  CHECK_FALSE(oracle::colorable(j5, 3));
  CHECK(is_bridgeless(j5));
  CHECK(cyclic_edge_connectivity_at_least(j5, 4));
  CHECK(oracle::cyclic_edge_connectivity(j5) >= 4);
  CHECK_THROWS_AS(flower_snark(4), PreconditionError);
  CHECK_THROWS_AS(flower_snark(1), PreconditionError);
  const NamedVertexMap names = flower_snark_names(5);
  CHECK(names.size() == 20);
}

TEST_CASE("goldberg snarks") {
  const CubicGraph g5 = goldberg(5);
  CHECK(g5.vertex_count() == 40);
  CHECK(g5.edge_count() == 60);
  CHECK(cubic(g5));
  CHECK(is_bridgeless(g5));
  CHECK(girth(g5) == 5);
  CHECK_FALSE(three_edge_coloring(g5).has_value());
  const CubicGraph g3 = goldberg(3);
  CHECK(cubic(g3));
  CHECK(is_bridgeless(g3));
  CHECK(oracle::bridgeless(g3));
  CHECK_FALSE(oracle::colorable(g3, 3));
  CHECK_THROWS_AS(goldberg(4), PreconditionError);
  CHECK(goldberg_names(3).size() == 24);
}

TEST_CASE("small families") {
  CHECK(theta().vertex_count() == 2);
  CHECK(theta().edge_count() == 3);
  const CubicGraph d4 = doubled_matching_cycle(4);
  CHECK(d4.vertex_count() == 4);
  CHECK(d4.edge_count() == 6);
  CHECK(cubic(d4));
  CHECK_THROWS_AS(doubled_matching_cycle(5), PreconditionError);
  CHECK(cubic(k4()));
  CHECK(cubic(k33()));
  CHECK(cubic(cube_q3()));
  CHECK(is_bipartite(cube_q3()));
}

TEST_CASE("ten-vertex example") {
  const CubicGraph g = ten_vertex_c5_example();
  CHECK(g.vertex_count() == 10);
  CHECK(cubic(g));
  const NamedVertexMap n = ten_vertex_c5_names();
  auto edge_between = [&](const char* x, const char* y) {
    for (const Edge& e : g.edges()) {
      const VertexId a = n.id(x), b = n.id(y);
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.id;
    }
    return -1;
  };
  std::vector<EdgeId> m;
  for (auto [x, y] : {std::pair{"a", "2"}, {"b", "4"}, {"c", "3"}, {"d", "5"},
                      {"e", "1"}}) {
    m.push_back(edge_between(x, y));
    CHECK(m.back() >= 0);
  }
  CHECK(oracle::is_perfect(g, m));
  std::sort(m.begin(), m.end());
  const CycleSet cs = cycle_decomposition(g, EdgeSet::all(g) - EdgeSet(g, m));
  REQUIRE(cs.size() == 2);
  std::set<std::string> first, second;
  for (VertexId v : cs[0].vertices) first.insert(n.label(v).role);
  for (VertexId v : cs[1].vertices) second.insert(n.label(v).role);
  CHECK(first == std::set<std::string>{"a", "b", "c", "d", "e"});
  CHECK(second == std::set<std::string>{"1", "2", "3", "4", "5"});
}

TEST_CASE("generators are deterministic") {
  CHECK(petersen() == petersen());
  CHECK(flower_snark(7) == flower_snark(7));
  CHECK(goldberg(5) == goldberg(5));
  CHECK(dot_blowup(petersen(), {5, 6, 7, 8, 9}, petersen(), {5, 7}) ==
        dot_blowup(petersen(), {5, 6, 7, 8, 9}, petersen(), {5, 7}));
}

TEST_CASE("dot product arithmetic and provenance") {
  const CubicGraph p = petersen();
  const auto specs = enumerate_dot_product_specs(p, p);
  REQUIRE_FALSE(specs.empty());
  for (std::size_t i = 0; i < specs.size(); i += 97) {
    const DotProduct d = dot_product(p, p, specs[i]);
    CHECK(d.graph.vertex_count() == 18);
    CHECK(d.graph.edge_count() == 27);
    CHECK(cubic(d.graph));
    CHECK(is_bridgeless(d.graph));
    int joining = 0;
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
      joining += d.provenance.edge_origin[e] == Origin::joining;
    }
    CHECK(joining == 4);
    CHECK(d.provenance.edge_from_first[specs[i].e1] == -1);
    CHECK(d.provenance.edge_from_second[specs[i].e3] == -1);
  }
  DotProductSpec adjacent{0, 1, 0};
  const Edge& a = p.edge(0);
  const Edge& b = p.edge(1);
  if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) {
    CHECK_THROWS_AS(dot_product(p, p, adjacent), PreconditionError);
  }
  CHECK_THROWS_AS(dot_product(p, p, DotProductSpec{0, 0, 0}), PreconditionError);
}

TEST_CASE("dot products of bridgeless graphs are bridgeless") {
  const std::vector<CubicGraph> small{petersen(), k4(), k33(), cube_q3(),
                                      flower_snark(3)};
  int checked = 0;
  for (const CubicGraph& g1 : small) {
    for (const CubicGraph& g2 : small) {
      const auto specs = enumerate_dot_product_specs(g1, g2);
      for (std::size_t i = 0; i < specs.size(); i += 53) {
        const DotProduct d = dot_product(g1, g2, specs[i]);
        CHECK(oracle::bridgeless(d.graph));
        ++checked;
      }
    }
  }
  CHECK(checked > 25);
}

TEST_CASE("petersen blowup") {
  const CubicGraph h = dot_blowup(petersen(), {5, 6, 7, 8, 9}, petersen(), {5, 7});
  CHECK(h.vertex_count() == 50);
  CHECK(cubic(h));
  CHECK(is_bridgeless(h));
}
