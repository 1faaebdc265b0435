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

#include "fulkerson/covering.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace fulkerson {

namespace {

void require_host(const MultiGraph& g, const EdgeSet& s, const char* what) {
  if (s.host() != g.fingerprint()) {
    throw PreconditionError(std::string(what) + " belongs to another graph");
  }
}

Matching empty_matching(const MultiGraph& g) { return Matching(g, EdgeSet(g)); }

}  // namespace

FRTriple::FRTriple(const MultiGraph& g, PerfectMatching m1,
                   PerfectMatching m2, PerfectMatching m3)
    : m_{std::move(m1), std::move(m2), std::move(m3)} {
  for (const PerfectMatching& m : m_) {
    require_host(g, m.edges(), "FR-triple member");
    if (!is_perfect_matching(g, m.edges())) {
      throw PreconditionError("FR-triple member is not a perfect matching");
    }
  }
  if ((m_[0].edges() & m_[1].edges() & m_[2].edges()).size() != 0) {
    throw PreconditionError("FR-triple members share an edge");
  }
}

TPartition t_partition(const MultiGraph& g, const FRTriple& t) {
  TPartition p{EdgeSet(g), EdgeSet(g), EdgeSet(g)};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int count = 0;
    for (const PerfectMatching& m : t.matchings()) count += m.contains(e);
    if (count == 0) p.t0.insert(e);
    if (count == 1) p.t1.insert(e);
    if (count == 2) p.t2.insert(e);
  }
  if (!is_matching(g, p.t0) || !is_matching(g, p.t2)) {
    throw InvariantError("t0 or t2 of an FR-triple is not a matching");
  }
  return p;
}

CoverageReport verify_covering(const MultiGraph& g,
                               const FulkersonCovering& f) {
  for (const PerfectMatching& m : f.matchings) {
    require_host(g, m.edges(), "covering member");
    if (!is_perfect_matching(g, m.edges())) {
      throw PreconditionError("covering member is not a perfect matching");
    }
  }
  CoverageReport report;
  report.coverage.assign(g.edge_count(), 0);
  for (const PerfectMatching& m : f.matchings) {
    m.edges().for_each([&](EdgeId e) { ++report.coverage[e]; });
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (report.coverage[e] != 2) report.wrong.push_back(e);
  }
  report.ok = report.wrong.empty();
  return report;
}

bool is_proper(const FulkersonCovering& f) {
  for (std::size_t i = 0; i < f.matchings.size(); ++i) {
    for (std::size_t j = i + 1; j < f.matchings.size(); ++j) {
      if (f.matchings[i] == f.matchings[j]) return false;
    }
  }
  return true;
}

bool are_compatible(const MultiGraph& g, const FRTriple& t,
                    const FRTriple& t2) {
  const TPartition p = t_partition(g, t);
  const TPartition q = t_partition(g, t2);
  return p.t0 == q.t2 && p.t2 == q.t0;
}

FulkersonCovering covering_from_compatible(const MultiGraph& g,
                                           const FRTriple& t,
                                           const FRTriple& t2) {
  if (!are_compatible(g, t, t2)) {
    throw PreconditionError("FR-triples are not compatible");
  }
  FulkersonCovering f{{t[0], t[1], t[2], t2[0], t2[1], t2[2]}};
  if (!verify_covering(g, f).ok) {
    throw InvariantError("compatible triples did not double-cover");
  }
  return f;
}

// ------------------------------------------------------------------- lift

FRTriple fr_triple_from_matchings(const CubicGraph& g, const Matching& a1,
                                  const Matching& a2) {
  const MultiGraph& h = g;
  require_host(h, a1.edges(), "a1");
  require_host(h, a2.edges(), "a2");
  if (a1.edges().intersects(a2.edges())) {
    throw LiftError(LiftError::Reason::overlap, "a1 and a2 share an edge");
  }
  std::vector<EdgeId> a2_at(h.vertex_count(), -1);
  std::vector<char> in_a1(h.vertex_count(), 0);
  a2.edges().for_each([&](EdgeId e) {
    a2_at[h.edge(e).a] = a2_at[h.edge(e).b] = e;
  });
  a1.edges().for_each([&](EdgeId e) { in_a1[h.edge(e).a] = in_a1[h.edge(e).b] = 1; });
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (static_cast<bool>(in_a1[v]) != (a2_at[v] >= 0)) {
      throw LiftError(LiftError::Reason::not_cycles,
                      "a1 and a2 do not form disjoint cycles at vertex " +
                          std::to_string(v));
    }
  }
  const SuppressedGraph s = split_and_suppress(g, a1, a2);
  const auto colours = three_edge_colorable(s);
  if (!colours) {
    throw LiftError(LiftError::Reason::not_colourable,
                    "the graph split at a1 is not 3-edge-colourable");
  }
  std::vector<int> colour(h.edge_count(), -1);
  for (std::size_t k = 0; k < s.components.size(); ++k) {
    for (std::size_t j = 0; j < s.edge_chain[k].size(); ++j) {
      for (EdgeId e : s.edge_chain[k][j]) colour[e] = (*colours)[k].color[j];
    }
  }
  for (const auto& loop : s.loop_chains) {
    const auto in_a2 = std::count_if(loop.begin(), loop.end(), [&](EdgeId e) {
      return a2.contains(e);
    });
    if (in_a2 == static_cast<long>(loop.size())) continue;
    if (in_a2 != 0) throw InvariantError("split loop mixes a2 and other edges");
    for (EdgeId e : loop) colour[e] = 0;
  }
  std::array<EdgeSet, 3> classes{EdgeSet(h), EdgeSet(h), EdgeSet(h)};
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (colour[e] >= 0) classes[colour[e]].insert(e);
  }
  a1.edges().for_each([&](EdgeId e) {
    const VertexId u = h.edge(e).a;
    EdgeId third = -1;
    for (EdgeId f : h.incident(u)) {
      if (f != e && f != a2_at[u]) third = f;
    }
    const int c = third >= 0 ? colour[third] : -1;
    if (c < 0) throw InvariantError("a1 edge has no coloured neighbour chain");
    classes[(c + 1) % 3].insert(e);
    classes[(c + 2) % 3].insert(e);
  });
  for (const EdgeSet& c : classes) {
    if (!is_perfect_matching(h, c)) {
      throw InvariantError("lifted colour class is not a perfect matching");
    }
  }
  FRTriple t(h, PerfectMatching(h, classes[0]), PerfectMatching(h, classes[1]),
             PerfectMatching(h, classes[2]));
  const TPartition p = t_partition(h, t);
  if (p.t2 != a1.edges() || p.t0 != a2.edges()) {
    throw InvariantError("lifted triple has the wrong partition");
  }
  return t;
}

// ------------------------------------------------------------- FR search

SearchResult<FRTriple> find_fr_triple(const CubicGraph& g,
                                      const SearchLimits& limits) {
  SearchResult<FRTriple> result;
  SearchMeter meter(limits);
  const EdgeSet none(g);
  const Matching nothing = empty_matching(g);
  for_each_perfect_matching(g, none, none, [&](const EdgeSet& m1) {
    bool reached = false;
    return for_each_perfect_matching(g, none, none, [&](const EdgeSet& m2) {
      if (!meter.tick()) return false;
      if (!reached) {
        if (m2 != m1) return true;
        reached = true;
      }
      auto m3 = find_perfect_matching(g, nothing, m1 & m2);
      if (!m3) return true;
      result.value.emplace(g, PerfectMatching(g, m1), PerfectMatching(g, m2),
                           std::move(*m3));
      return false;
    }) && !result.value;
  });
  result.nodes = meter.nodes();
  if (result.value) {
    result.status = SearchStatus::found;
  } else if (meter.halted()) {
    result.status = SearchStatus::budget_exhausted;
  }
  return result;
}

// ------------------------------------------------------- covering search

CoveringStrategy parse_strategy(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (lower == "color" || lower == "colour") return CoveringStrategy::color;
  if (lower == "exact2cover") return CoveringStrategy::exact2cover;
  if (lower == "a1a2") return CoveringStrategy::a1a2;
  if (lower == "auto" || lower == "automatic") {
    return CoveringStrategy::automatic;
  }
  throw PreconditionError("unknown strategy '" + std::string(name) + "'");
}

const char* to_string(CoveringStrategy s) {
  switch (s) {
    case CoveringStrategy::color:
      return "color";
    case CoveringStrategy::exact2cover:
      return "exact2cover";
    case CoveringStrategy::a1a2:
      return "a1a2";
    case CoveringStrategy::automatic:
      return "auto";
  }
  return "?";
}

namespace {

// Chooses perfect matchings (with repetition unless `distinct`) so that
// every edge is covered exactly twice. Branches on the edge with the fewest
// usable matchings; an edge short of two is completed by an unordered pair,
// so every multiset is produced once.
class DoubleCoverSearch {
 public:
  DoubleCoverSearch(const MultiGraph& g, const std::vector<PerfectMatching>& pms,
                    bool distinct, SearchMeter& meter,
                    const std::function<bool(const std::vector<int>&)>& visit)
      : g_(g), pms_(pms), distinct_(distinct), meter_(meter), visit_(visit),
        containing_(g.edge_count()), used_(pms.size(), 0) {
    for (std::size_t i = 0; i < pms.size(); ++i) {
      pms[i].edges().for_each([&](EdgeId e) {
        containing_[e].push_back(static_cast<int>(i));
      });
    }
  }

  // False iff stopped by the visitor or the meter.
  bool run() { return descend(EdgeSet(g_), EdgeSet(g_)); }

 private:
  bool usable(int p, const EdgeSet& twice) const {
    return !(distinct_ && used_[p]) && !pms_[p].edges().intersects(twice);
  }

  bool descend(const EdgeSet& once, const EdgeSet& twice) {
    if (!meter_.tick()) return false;
    EdgeId pick = -1;
    std::size_t fewest = SIZE_MAX;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (twice.contains(e)) continue;
      std::size_t k = 0;
      for (int p : containing_[e]) k += usable(p, twice);
      if (k < fewest) {
        fewest = k;
        pick = e;
      }
    }
    if (pick < 0) return visit_(chosen_);
    const auto& options = containing_[pick];
    const bool need_two = !once.contains(pick);
    for (std::size_t i = 0; i < options.size(); ++i) {
      const int p = options[i];
      if (!usable(p, twice)) continue;
      EdgeSet once1 = once ^ pms_[p].edges();
      EdgeSet twice1 = twice | (once & pms_[p].edges());
      once1 -= twice1;
      push(p);
      bool go_on = true;
      if (!need_two) {
        go_on = descend(once1, twice1);
      } else {
        for (std::size_t j = distinct_ ? i + 1 : i;
             go_on && j < options.size(); ++j) {
          const int q = options[j];
          if (!usable(q, twice1)) continue;
          EdgeSet once2 = once1 ^ pms_[q].edges();
          EdgeSet twice2 = twice1 | (once1 & pms_[q].edges());
          once2 -= twice2;
          push(q);
          go_on = descend(once2, twice2);
          pop(q);
        }
      }
      pop(p);
      if (!go_on) return false;
    }
    return true;
  }

  void push(int p) {
    chosen_.push_back(p);
    ++used_[p];
  }
  void pop(int p) {
    chosen_.pop_back();
    --used_[p];
  }

  const MultiGraph& g_;
  const std::vector<PerfectMatching>& pms_;
  bool distinct_;
  SearchMeter& meter_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> used_;
  std::vector<int> chosen_;
};

FulkersonCovering covering_from_indices(const std::vector<PerfectMatching>& pms,
                                        std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  FulkersonCovering f;
  for (std::size_t i = 0; i < 6; ++i) f.matchings[i] = pms[idx.at(i)];
  return f;
}

SearchResult<FulkersonCovering> by_colouring(const CubicGraph& g,
                                             const SearchLimits& limits) {
  SearchResult<FulkersonCovering> out;
  const auto c = find_edge_coloring(g, 3, limits);
  out.nodes = c.nodes;
  if (c.status == SearchStatus::budget_exhausted) {
    out.status = SearchStatus::budget_exhausted;
    return out;
  }
  if (!c.value) {
    out.status = SearchStatus::inconclusive;
    out.note = "graph is not 3-edge-colourable";
    return out;
  }
  FulkersonCovering f;
  for (int i = 0; i < 6; ++i) {
    f.matchings[i] = PerfectMatching(g, c.value->color_class(g, i % 3));
  }
  out.value = std::move(f);
  out.status = SearchStatus::found;
  return out;
}

SearchResult<FulkersonCovering> by_exact_cover(const CubicGraph& g,
                                               const SearchLimits& limits) {
  SearchResult<FulkersonCovering> out;
  const MatchingEnumeration pms =
      enumerate_perfect_matchings(g, limits.matching_limit);
  SearchMeter meter(limits);
  std::function<bool(const std::vector<int>&)> visit =
      [&](const std::vector<int>& idx) {
        out.value = covering_from_indices(pms.matchings, idx);
        return false;
      };
  DoubleCoverSearch(g, pms.matchings, false, meter, visit).run();
  out.nodes = meter.nodes();
  if (out.value) {
    out.status = SearchStatus::found;
  } else if (meter.halted() || pms.truncated) {
    out.status = SearchStatus::budget_exhausted;
    if (pms.truncated) out.note = "perfect matching enumeration truncated";
  }
  return out;
}

SearchResult<FulkersonCovering> by_a1a2(const CubicGraph& g,
                                        const SearchLimits& limits) {
  SearchResult<FulkersonCovering> out;
  const MatchingEnumeration pms =
      enumerate_perfect_matchings(g, limits.matching_limit);
  const auto& list = pms.matchings;
  SearchMeter meter(limits);
  std::unordered_set<EdgeSet> tried;  // t0 of every candidate seen
  const std::size_t count = list.size();
  for (std::size_t i = 0; i < count && !out.value; ++i) {
    for (std::size_t j = i; j < count && !out.value; ++j) {
      const EdgeSet common = list[i].edges() & list[j].edges();
      for (std::size_t k = j; k < count; ++k) {
        if (!meter.tick()) break;
        if (list[k].edges().intersects(common)) continue;
        const FRTriple t(g, list[i], list[j], list[k]);
        const TPartition p = t_partition(g, t);
        if (!tried.insert(p.t0).second) continue;
        try {
          const FRTriple first =
              fr_triple_from_matchings(g, Matching(g, p.t2), Matching(g, p.t0));
          const FRTriple second =
              fr_triple_from_matchings(g, Matching(g, p.t0), Matching(g, p.t2));
          out.value = covering_from_compatible(g, first, second);
          break;
        } catch (const LiftError& e) {
          if (e.reason() != LiftError::Reason::not_colourable) throw;
        }
      }
      if (meter.halted()) break;
    }
    if (meter.halted()) break;
  }
  out.nodes = meter.nodes();
  if (out.value) {
    out.status = SearchStatus::found;
  } else if (meter.halted() || pms.truncated) {
    out.status = SearchStatus::budget_exhausted;
  }
  return out;
}

}  // namespace

SearchResult<FulkersonCovering> find_fulkerson_covering(
    const CubicGraph& g, CoveringStrategy strategy,
    const SearchLimits& limits) {
  SearchResult<FulkersonCovering> out;
  switch (strategy) {
    case CoveringStrategy::color:
      out = by_colouring(g, limits);
      break;
    case CoveringStrategy::exact2cover:
      out = by_exact_cover(g, limits);
      break;
    case CoveringStrategy::a1a2:
      out = by_a1a2(g, limits);
      break;
    case CoveringStrategy::automatic: {
      out = by_colouring(g, limits);
      if (out.found() || out.status == SearchStatus::budget_exhausted) break;
      const std::uint64_t spent = out.nodes;
      out = by_exact_cover(g, limits);
      out.nodes += spent;
      if (out.status != SearchStatus::budget_exhausted) break;
      const std::uint64_t spent2 = out.nodes;
      out = by_a1a2(g, limits);
      out.nodes += spent2;
      break;
    }
  }
  if (out.value && !verify_covering(g, *out.value).ok) {
    throw InvariantError("covering search produced an invalid covering");
  }
  return out;
}

SearchResult<std::vector<FulkersonCovering>> all_fulkerson_coverings(
    const CubicGraph& g, bool proper_only, std::size_t max_count,
    const SearchLimits& limits) {
  SearchResult<std::vector<FulkersonCovering>> out;
  out.value.emplace();
  const MatchingEnumeration pms =
      enumerate_perfect_matchings(g, limits.matching_limit);
  SearchMeter meter(limits);
  bool capped = false;
  std::function<bool(const std::vector<int>&)> visit =
      [&](const std::vector<int>& idx) {
        if (out.value->size() >= max_count) {
          capped = true;
          return false;
        }
        out.value->push_back(covering_from_indices(pms.matchings, idx));
        return true;
      };
  DoubleCoverSearch(g, pms.matchings, proper_only, meter, visit).run();
  out.nodes = meter.nodes();
  if (meter.halted() || pms.truncated) {
    out.status = SearchStatus::budget_exhausted;
  } else if (!out.value->empty()) {
    out.status = SearchStatus::found;
  }
  if (capped) out.note = "stopped at the requested number of coverings";
  return out;
}

// ------------------------------------------------------- bi-hamiltonicity

BiHamiltonicity is_bi_hamiltonian(const CubicGraph& g) {
  const std::vector<EdgeColoring> colourings =
      enumerate_three_edge_colorings(g);
  if (colourings.empty()) {
    throw PreconditionError("bi-hamiltonicity needs a 3-edge-colourable graph");
  }
  constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const EdgeColoring& c : colourings) {
    std::vector<std::pair<int, int>> broken;
    for (auto [x, y] : kPairs) {
      if (bicolored_cycles(g, c, x, y).size() != 1) broken.emplace_back(x, y);
    }
    if (broken.size() < 2) continue;
    const auto [p, q] = std::pair{broken[0], broken[1]};
    const int beta = (p.first == q.first || p.first == q.second) ? p.first
                                                                  : p.second;
    BiHamiltonWitness w{c, p.first + p.second - beta, beta,
                        q.first + q.second - beta};
    return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

FulkersonCovering proper_covering_from_witness(const CubicGraph& g,
                                               const BiHamiltonWitness& w) {
  const EdgeColoring& c = w.coloring;
  if (c.palette != 3 || !is_proper_coloring(g, c)) {
    throw PreconditionError("witness colouring is not a proper 3-colouring");
  }
  const std::array<int, 3> names{w.alpha, w.beta, w.gamma};
  for (int i = 0; i < 3; ++i) {
    if (names[i] < 0 || names[i] > 2 ||
        names[i] == names[(i + 1) % 3]) {
      throw PreconditionError("witness colours must be 0, 1, 2 in some order");
    }
  }
  const CycleSet ab = bicolored_cycles(g, c, w.alpha, w.beta);
  const CycleSet bg = bicolored_cycles(g, c, w.beta, w.gamma);
  if (ab.size() == 1 || bg.size() == 1) {
    throw PreconditionError("witness 2-factor is a Hamiltonian cycle");
  }
  const EdgeColoring once = kempe_exchange(g, c, w.alpha, w.beta, ab.front());
  const EdgeColoring twice = kempe_exchange(g, c, w.beta, w.gamma, bg.front());
  auto pm = [&](const EdgeColoring& col, int colour) {
    return PerfectMatching(g, col.color_class(g, colour));
  };
  FulkersonCovering f{{pm(c, w.alpha), pm(once, w.alpha), pm(once, w.beta),
                       pm(twice, w.beta), pm(c, w.gamma), pm(twice, w.gamma)}};
  if (!verify_covering(g, f).ok || !is_proper(f)) {
    throw InvariantError("witness construction is not a proper covering");
  }
  return f;
}

}  // namespace fulkerson
