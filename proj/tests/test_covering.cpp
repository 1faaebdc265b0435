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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "fulkerson/covering.hpp"
#include "fulkerson/generators.hpp"
#include "fulkerson/matchcolor.hpp"
#include "oracles.hpp"

using namespace fulkerson;

namespace {

std::vector<std::vector<EdgeId>> ids_of(const FulkersonCovering& f) {
  std::vector<std::vector<EdgeId>> out;
  for (const auto& m : f.matchings) out.push_back(m.ids());
  return out;
}

FulkersonCovering doubled_classes(const CubicGraph& g, const EdgeColoring& c) {
  std::array<PerfectMatching, 6> ms;
  for (int i = 0; i < 6; ++i) ms[i] = PerfectMatching(g, c.color_class(g, i % 3));
  return FulkersonCovering{ms};
}

FRTriple color_triple(const CubicGraph& g) {
  const EdgeColoring c = *three_edge_coloring(g);
  return FRTriple(g, PerfectMatching(g, c.color_class(g, 0)),
                  PerfectMatching(g, c.color_class(g, 1)),
                  PerfectMatching(g, c.color_class(g, 2)));
}

// Bi-hamiltonian: every colouring has at least two Hamiltonian bicoloured
// 2-factors. Checked on raw colourings.
bool bi_hamiltonian_oracle(const CubicGraph& g) {
  bool all = true;
  oracle::for_each_coloring(g, 3, [&](const std::vector<int>& color) {
    int hamiltonian = 0;
    for (auto [x, y] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      std::vector<std::pair<VertexId, VertexId>> e;
      for (const Edge& f : g.edges()) {
        if (color[f.id] == x || color[f.id] == y) e.emplace_back(f.a, f.b);
      }
      const MultiGraph h(g.vertex_count(), e);
      hamiltonian += is_connected(h);
    }
    all = hamiltonian >= 2;
    return all;
  });
  return all;
}

std::vector<CubicGraph> corpus() {
  return {petersen(), k4(), theta(), k33(), cube_q3(), flower_snark(3),
          flower_snark(5), doubled_matching_cycle(4), doubled_matching_cycle(6),
          ten_vertex_c5_example(), goldberg(3)};
}

}  // namespace

TEST_CASE("fr-triples validate their input") {
  const CubicGraph g = k33();
  const auto m = enumerate_perfect_matchings(g).matchings[0];
  CHECK_THROWS_AS(FRTriple(g, m, m, m), PreconditionError);
  const FRTriple t = color_triple(g);
  CHECK(t[0].size() == 3);
}

TEST_CASE("t-partition of a colour triple") {
  const CubicGraph g = k4();
  const TPartition p = t_partition(g, color_triple(g));
  CHECK(p.t1 == EdgeSet::all(g));
  CHECK(p.t0.empty());
  CHECK(p.t2.empty());
}

TEST_CASE("t0 and t2 of any three petersen matchings are disjoint matchings") {
  const CubicGraph p = petersen();
  const auto pms = enumerate_perfect_matchings(p).matchings;
  int triples = 0;
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i + 1; j < pms.size(); ++j) {
      for (std::size_t k = j + 1; k < pms.size(); ++k) {
        const FRTriple t(p, pms[i], pms[j], pms[k]);
        const TPartition part = t_partition(p, t);
        CHECK_FALSE(part.t0.empty());
        CHECK_FALSE(part.t2.empty());
        CHECK_FALSE(part.t0.intersects(part.t2));
        CHECK(is_matching(p, part.t0));
        CHECK(is_matching(p, part.t2));
        const auto c = oracle::coverage(p, {pms[i].ids(), pms[j].ids(), pms[k].ids()});
        for (EdgeId e = 0; e < p.edge_count(); ++e) {
          CHECK(part.t0.contains(e) == (c[e] == 0));
          CHECK(part.t2.contains(e) == (c[e] == 2));
        }
        ++triples;
      }
    }
  }
  CHECK(triples == 20);
}

TEST_CASE("verify_covering") {
  const CubicGraph k = k4();
  CHECK(verify_covering(k, doubled_classes(k, *three_edge_coloring(k))).ok);
  const CubicGraph p = petersen();
  const auto pms = enumerate_perfect_matchings(p).matchings;
  FulkersonCovering six;
  std::copy(pms.begin(), pms.end(), six.matchings.begin());
  CHECK(verify_covering(p, six).ok);
  FulkersonCovering same;
  same.matchings.fill(pms[0]);
  const CoverageReport bad = verify_covering(p, same);
  CHECK_FALSE(bad.ok);
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    CHECK(bad.coverage[e] == (pms[0].contains(e) ? 6 : 0));
  }
  CHECK(bad.wrong.size() == 15);
}

TEST_CASE("compatibility and the covering built from it") {
  const CubicGraph p = petersen();
  const auto pms = enumerate_perfect_matchings(p).matchings;
  const FRTriple t(p, pms[0], pms[1], pms[2]);
  const FRTriple t2(p, pms[3], pms[4], pms[5]);
  CHECK(are_compatible(p, t, t2));
  const FulkersonCovering f = covering_from_compatible(p, t, t2);
  CHECK(verify_covering(p, f).ok);
  CHECK(oracle::is_fulkerson_cover(p, ids_of(f)));
  CHECK_FALSE(are_compatible(p, t, t));
  CHECK_THROWS_AS(covering_from_compatible(p, t, t), PreconditionError);

  const CubicGraph k = k4();
  const FRTriple c = color_triple(k);
  CHECK(are_compatible(k, c, c));
  const FulkersonCovering kc = covering_from_compatible(k, c, c);
  CHECK(verify_covering(k, kc).ok);
  CHECK_FALSE(is_proper(kc));
}

TEST_CASE("triples from (a1, a2)") {
  const CubicGraph k = k4();
  const FRTriple t = fr_triple_from_matchings(k, Matching(k, EdgeSet(k)),
                                              Matching(k, EdgeSet(k)));
  std::set<std::vector<EdgeId>> got, expect;
  for (const auto& m : t.matchings()) got.insert(m.ids());
  const EdgeColoring c = *three_edge_coloring(k);
  for (int x = 0; x < 3; ++x) expect.insert(c.color_class(k, x).ids());
  CHECK(got == expect);

  const CubicGraph p = petersen();
  const auto pms = enumerate_perfect_matchings(p).matchings;
  for (std::size_t i = 0; i + 2 < pms.size(); ++i) {
    const FRTriple known(p, pms[i], pms[i + 1], pms[i + 2]);
    const TPartition part = t_partition(p, known);
    const FRTriple rebuilt =
        fr_triple_from_matchings(p, Matching(p, part.t2), Matching(p, part.t0));
    CHECK(t_partition(p, rebuilt) == part);
  }

  // Two adjacent-free edges whose union is a path fragment, not cycles.
  const Edge& e0 = p.edge(0);
  EdgeId far = -1;
  for (const Edge& e : p.edges()) {
    if (e.a != e0.a && e.a != e0.b && e.b != e0.a && e.b != e0.b) {
      far = e.id;
      break;
    }
  }
  try {
    fr_triple_from_matchings(p, Matching(p, EdgeSet(p, {0})),
                             Matching(p, EdgeSet(p, {far})));
    FAIL("expected LiftError");
  } catch (const LiftError& e) {
    CHECK(e.reason() == LiftError::Reason::not_cycles);
  }
  CHECK_THROWS_AS(fr_triple_from_matchings(p, Matching(p, EdgeSet(p, {0})),
                                           Matching(p, EdgeSet(p, {0}))),
                  LiftError);
}

TEST_CASE("find_fr_triple") {
  for (const CubicGraph& g : {petersen(), k33(), flower_snark(5)}) {
    const auto r = find_fr_triple(g);
    REQUIRE(r.found());
    std::vector<std::vector<EdgeId>> three;
    for (const auto& m : r.value->matchings()) {
      three.push_back(m.ids());
      CHECK(oracle::is_perfect(g, three.back()));
    }
    const auto c = oracle::coverage(g, three);
    CHECK(std::find(c.begin(), c.end(), 3) == c.end());
  }
  SearchLimits tiny;
  tiny.node_budget = 1;
  CHECK(find_fr_triple(flower_snark(5), tiny).status == SearchStatus::budget_exhausted);
}

TEST_CASE("strategies") {
  CHECK(parse_strategy("color") == CoveringStrategy::color);
  CHECK(parse_strategy("COLOUR") == CoveringStrategy::color);
  CHECK(parse_strategy("exact2cover") == CoveringStrategy::exact2cover);
  CHECK(parse_strategy("a1a2") == CoveringStrategy::a1a2);
  CHECK(parse_strategy("auto") == CoveringStrategy::automatic);
  CHECK_THROWS_AS(parse_strategy("dlx"), PreconditionError);
  CHECK(std::string(to_string(CoveringStrategy::a1a2)) == "a1a2");
}

TEST_CASE("find_fulkerson_covering across strategies") {
  const auto k = find_fulkerson_covering(k4(), CoveringStrategy::color);
  REQUIRE(k.found());
  CHECK(oracle::is_fulkerson_cover(k4(), ids_of(*k.value)));

  const CubicGraph p = petersen();
  const auto e = find_fulkerson_covering(p, CoveringStrategy::exact2cover);
  REQUIRE(e.found());
  auto got = ids_of(*e.value);
  std::sort(got.begin(), got.end());
  CHECK(got == oracle::perfect_matchings(p));

  CHECK(find_fulkerson_covering(p, CoveringStrategy::color).status ==
        SearchStatus::inconclusive);

  for (const CubicGraph& g : corpus()) {
    for (auto s : {CoveringStrategy::exact2cover, CoveringStrategy::a1a2,
                   CoveringStrategy::automatic}) {
      CAPTURE(to_string(s));
      const auto r = find_fulkerson_covering(g, s);
      REQUIRE(r.found());
      CHECK(oracle::is_fulkerson_cover(g, ids_of(*r.value)));
    }
  }
}

TEST_CASE("all coverings agree with multiset enumeration") {
  for (const CubicGraph& g : {k4(), theta(), k33(), petersen(), cube_q3(),
                              flower_snark(3), doubled_matching_cycle(6)}) {
    const auto expect = oracle::fulkerson_covers(g);
    const auto all = all_fulkerson_coverings(g, false, 100000);
    REQUIRE(all.found());
    CHECK(all.value->size() == expect.size());
    std::size_t proper_expect = 0;
    for (const auto& pick : expect) {
      proper_expect += std::set<int>(pick.begin(), pick.end()).size() == 6;
    }
    const auto proper = all_fulkerson_coverings(g, true, 100000);
    CHECK(proper.value->size() == proper_expect);
    for (const auto& f : *proper.value) {
      CHECK(is_proper(f));
      CHECK(verify_covering(g, f).ok);
    }
  }
}

TEST_CASE("small graphs without proper coverings") {
  for (const CubicGraph& g : {theta(), k4(), doubled_matching_cycle(6)}) {
    CHECK(all_fulkerson_coverings(g, true, 10).value->empty());
  }
  // K3,3 has exactly six perfect matchings and each edge lies in two.
  const auto k = all_fulkerson_coverings(k33(), true, 10);
  CHECK(k.value->size() == 1);
}

TEST_CASE("class-2 graphs only have proper coverings") {
  for (const CubicGraph& g : {petersen(), flower_snark(3)}) {
    const auto all = all_fulkerson_coverings(g, false, 100000);
    REQUIRE_FALSE(all.value->empty());
    for (const auto& f : *all.value) CHECK(is_proper(f));
  }
}

TEST_CASE("bi-hamiltonicity") {
  const BiHamiltonicity q = is_bi_hamiltonian(cube_q3());
  CHECK_FALSE(q.bi_hamiltonian);
  REQUIRE(q.witness.has_value());
  CHECK(is_bi_hamiltonian(ten_vertex_c5_example()).bi_hamiltonian);
  CHECK_THROWS_AS(is_bi_hamiltonian(petersen()), PreconditionError);
  for (const CubicGraph& g : {k4(), theta(), k33(), cube_q3(),
                              doubled_matching_cycle(4), doubled_matching_cycle(6),
                              ten_vertex_c5_example()}) {
    CHECK(is_bi_hamiltonian(g).bi_hamiltonian == bi_hamiltonian_oracle(g));
  }
  CHECK(is_bi_hamiltonian(doubled_matching_cycle(6)).bi_hamiltonian);
}

TEST_CASE("proper covering from a non-bi-hamiltonian witness") {
  const CubicGraph q = cube_q3();
  const auto w = is_bi_hamiltonian(q).witness;
  REQUIRE(w.has_value());
  const FulkersonCovering f = proper_covering_from_witness(q, *w);
  CHECK(verify_covering(q, f).ok);
  CHECK(is_proper(f));
  CHECK(oracle::is_fulkerson_cover(q, ids_of(f)));

  const CubicGraph t = ten_vertex_c5_example();
  const EdgeColoring c = *three_edge_coloring(t);
  for (auto [x, y, z] : {std::tuple{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1},
                         {1, 2, 0}, {2, 1, 0}}) {
    const bool hamiltonian_xy = bicolored_cycles(t, c, x, y).size() == 1;
    const bool hamiltonian_yz = bicolored_cycles(t, c, y, z).size() == 1;
    if (hamiltonian_xy || hamiltonian_yz) {
      CHECK_THROWS_AS(proper_covering_from_witness(t, BiHamiltonWitness{c, x, y, z}),
                      PreconditionError);
    }
  }
}
