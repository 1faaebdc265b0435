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

#include "fulkerson/matchcolor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace fulkerson {

// ------------------------------------------------------ perfect matchings

namespace {

// Include-first branching over edges in id order, which yields matchings in
// lexicographic order. A vertex is dead once it is unmatched and has no
// usable edge left at or beyond the current position.
class MatchingWalker {
 public:
  MatchingWalker(const MultiGraph& g, const EdgeSet& include,
                 const EdgeSet& exclude,
                 const std::function<bool(const EdgeSet&)>& visit)
      : g_(g),
        visit_(visit),
        blocked_(g.edge_count(), 0),
        matched_(g.vertex_count(), 0),
        current_(g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (exclude.contains(e) || g.edge(e).is_loop()) blocked_[e] = 1;
    }
    include.for_each([&](EdgeId e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop() || matched_[ed.a] || matched_[ed.b]) feasible_ = false;
      if (!ed.is_loop()) {
        matched_[ed.a] = matched_[ed.b] = 1;
        matched_count_ += 2;
      }
      current_.insert(e);
      blocked_[e] = 1;
    });
  }

  // Returns false iff the visitor asked to stop.
  bool run() {
    if (!feasible_ || g_.vertex_count() % 2 != 0) return true;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!alive(v, 0)) return true;
    }
    return descend(0);
  }

 private:
  bool alive(VertexId v, EdgeId from) const {
    if (matched_[v]) return true;
    for (EdgeId f : g_.incident(v)) {
      if (f < from || blocked_[f]) continue;
      if (!matched_[g_.other_end(f, v)]) return true;
    }
    return false;
  }

  bool descend(EdgeId i) {
    if (matched_count_ == g_.vertex_count()) return visit_(current_);
    if (i >= g_.edge_count()) return true;
    const Edge& e = g_.edge(i);
    if (!blocked_[i] && !matched_[e.a] && !matched_[e.b]) {
      matched_[e.a] = matched_[e.b] = 1;
      matched_count_ += 2;
      current_.insert(i);
      bool ok = true;
      for (VertexId end : {e.a, e.b}) {
        for (EdgeId f : g_.incident(end)) {
          if (!alive(g_.other_end(f, end), i + 1)) ok = false;
        }
      }
      const bool keep_going = !ok || descend(i + 1);
      current_.erase(i);
      matched_[e.a] = matched_[e.b] = 0;
      matched_count_ -= 2;
      if (!keep_going) return false;
    }
    if (alive(e.a, i + 1) && alive(e.b, i + 1)) return descend(i + 1);
    return true;
  }

  const MultiGraph& g_;
  const std::function<bool(const EdgeSet&)>& visit_;
  std::vector<char> blocked_;
  std::vector<char> matched_;
  int matched_count_ = 0;
  EdgeSet current_;
  bool feasible_ = true;
};

}  // namespace

bool for_each_perfect_matching(
    const MultiGraph& g, const EdgeSet& include, const EdgeSet& exclude,
    const std::function<bool(const EdgeSet&)>& visit) {
  MatchingWalker walker(g, include, exclude, visit);
  return walker.run();
}

MatchingEnumeration enumerate_perfect_matchings(
    const MultiGraph& g, std::optional<std::size_t> limit) {
  MatchingEnumeration out;
  const EdgeSet none(g);
  for_each_perfect_matching(g, none, none, [&](const EdgeSet& s) {
    if (limit && out.matchings.size() >= *limit) {
      out.truncated = true;
      return false;
    }
    out.matchings.emplace_back(g, s);
    return true;
  });
  return out;
}

std::optional<PerfectMatching> find_perfect_matching(const MultiGraph& g,
                                                     const Matching& include,
                                                     const EdgeSet& exclude) {
  if (include.edges().intersects(exclude)) {
    throw PreconditionError("include and exclude sets overlap");
  }
  std::optional<PerfectMatching> found;
  for_each_perfect_matching(g, include.edges(), exclude,
                            [&](const EdgeSet& s) {
                              found.emplace(g, s);
                              return false;
                            });
  return found;
}

bool is_m_balanced(const MultiGraph& g, const PerfectMatching& m,
                   const Matching& a) {
  if (!a.edges().is_subset_of(m.edges())) {
    throw PreconditionError("balanced-matching test needs a subset of M");
  }
  return find_perfect_matching(g, a, m.edges() - a.edges()).has_value();
}

// ----------------------------------------------------- split and suppress

SuppressedGraph split_and_suppress(const CubicGraph& g, const Matching& a,
                                   const std::optional<Matching>& partner) {
  const MultiGraph& h = g;
  if (a.edges().host() != h.fingerprint() || !is_matching(h, a.edges())) {
    throw PreconditionError("split_and_suppress needs a matching of g");
  }
  if (partner) {
    if (!is_matching(h, partner->edges())) {
      throw PreconditionError("pairing partner is not a matching of g");
    }
    if (partner->edges().intersects(a.edges())) {
      throw PreconditionError("pairing partner must be disjoint from a");
    }
  }
  const int n = h.vertex_count();
  std::vector<VertexId> mate(n, -1);
  a.edges().for_each([&](EdgeId e) {
    mate[h.edge(e).a] = h.edge(e).b;
    mate[h.edge(e).b] = h.edge(e).a;
  });

  // Half-edge 2e + s sits on edge e at end s (0 = a, 1 = b).
  auto half = [&](EdgeId e, VertexId v) { return 2 * e + (h.edge(e).a == v ? 0 : 1); };
  auto vertex_of = [&](int hid) {
    const Edge& e = h.edge(hid / 2);
    return hid % 2 == 0 ? e.a : e.b;
  };
  std::vector<int> paired(2 * h.edge_count(), -1);
  a.edges().for_each([&](EdgeId ae) {
    const VertexId u = h.edge(ae).a;
    const VertexId w = h.edge(ae).b;
    auto rest = [&](VertexId v) {
      std::array<EdgeId, 2> r{};
      int k = 0;
      for (EdgeId f : h.incident(v)) {
        if (f != ae) r[k++] = f;
      }
      std::sort(r.begin(), r.end());
      if (partner) {
        if (partner->contains(r[1])) std::swap(r[0], r[1]);
      }
      return r;
    };
    std::array<EdgeId, 2> at_u = rest(u);
    std::array<EdgeId, 2> at_w = rest(w);
    const bool use_partner = partner && partner->contains(at_u[0]) &&
                             partner->contains(at_w[0]);
    if (!use_partner) {
      std::sort(at_u.begin(), at_u.end());
      std::sort(at_w.begin(), at_w.end());
    }
    for (int k = 0; k < 2; ++k) {
      const int hu = half(at_u[k], u);
      const int hw = half(at_w[k], w);
      paired[hu] = hw;
      paired[hw] = hu;
    }
  });

  struct Chain {
    VertexId from, to;
    std::vector<EdgeId> edges;
  };
  std::vector<char> used(h.edge_count(), 0);
  a.edges().for_each([&](EdgeId e) { used[e] = 1; });

  // Follows the chain leaving through half-edge `start`. Stops at a real
  // vertex or when the chain closes up on its first edge.
  auto follow = [&](int start, std::vector<EdgeId>& edges) {
    int hid = start;
    while (true) {
      const EdgeId e = hid / 2;
      used[e] = 1;
      edges.push_back(e);
      const int arrive = hid ^ 1;
      const VertexId v = vertex_of(arrive);
      if (mate[v] < 0) return v;
      hid = paired[arrive];
      if (hid / 2 == edges.front() && hid == start) return VertexId{-1};
    }
  };

  std::vector<Chain> chains;
  for (VertexId r = 0; r < n; ++r) {
    if (mate[r] >= 0) continue;
    for (EdgeId e : h.incident(r)) {
      if (used[e]) continue;
      Chain c{r, -1, {}};
      c.to = follow(half(e, r), c.edges);
      if (c.edges.size() == 1) {
        c.from = h.edge(e).a;
        c.to = h.edge(e).b;
      } else if (c.edges.back() < c.edges.front()) {
        std::swap(c.from, c.to);
        std::reverse(c.edges.begin(), c.edges.end());
      }
      chains.push_back(std::move(c));
    }
  }
  SuppressedGraph out;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (used[e]) continue;
    std::vector<EdgeId> loop;
    follow(2 * e, loop);
    out.loop_chains.push_back(std::move(loop));
  }
  out.loop_count = static_cast<int>(out.loop_chains.size());

  std::sort(chains.begin(), chains.end(), [](const Chain& x, const Chain& y) {
    return x.edges.front() < y.edges.front();
  });

  // Components over the real vertices.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < chains.size(); ++i) {
    adj[chains[i].from].push_back(chains[i].to);
    adj[chains[i].to].push_back(chains[i].from);
  }
  int count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (mate[s] >= 0 || comp[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  out.vertex_origin.resize(count);
  out.edge_chain.resize(count);
  std::vector<VertexId> local(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (comp[v] < 0) continue;
    local[v] = static_cast<VertexId>(out.vertex_origin[comp[v]].size());
    out.vertex_origin[comp[v]].push_back(v);
  }
  std::vector<std::vector<std::pair<VertexId, VertexId>>> ends(count);
  for (Chain& c : chains) {
    const int k = comp[c.from];
    ends[k].emplace_back(local[c.from], local[c.to]);
    out.edge_chain[k].push_back(std::move(c.edges));
  }
  for (int k = 0; k < count; ++k) {
    out.components.emplace_back(
        static_cast<int>(out.vertex_origin[k].size()), ends[k]);
  }
  return out;
}

// -------------------------------------------------------------- colorings

EdgeSet EdgeColoring::color_class(const MultiGraph& g, int c) const {
  EdgeSet s(g);
  for (EdgeId e = 0; e < static_cast<EdgeId>(color.size()); ++e) {
    if (color[e] == c) s.insert(e);
  }
  return s;
}

bool is_proper_coloring(const MultiGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.color.size()) != g.edge_count()) return false;
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || c.color[e.id] < 0 || c.color[e.id] >= c.palette) {
      return false;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    unsigned seen = 0;
    for (EdgeId e : g.incident(v)) {
      const unsigned bit = 1U << c.color[e];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const MultiGraph& g, int colors, SearchMeter& meter)
      : g_(g), colors_(colors), meter_(meter) {
    // Edges sharing an endpoint, without duplicates.
    neighbours_.resize(g.edge_count());
    for (const Edge& e : g.edges()) {
      for (VertexId v : {e.a, e.b}) {
        for (EdgeId f : g.incident(v)) {
          if (f != e.id) neighbours_[e.id].push_back(f);
        }
      }
      auto& nb = neighbours_[e.id];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  // nullopt on budget exhaustion; otherwise whether a coloring exists.
  std::optional<bool> solve(std::vector<int>& color) {
    const unsigned full = (1U << colors_) - 1;
    std::vector<unsigned> domain(g_.edge_count(), full);
    color.assign(g_.edge_count(), -1);
    VertexId anchor = -1;
    std::size_t best = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (g_.incident(v).size() > best) {
        best = g_.incident(v).size();
        anchor = v;
      }
    }
    if (anchor >= 0) {
      int c = 0;
      for (EdgeId e : g_.incident(anchor)) {
        if (!assign(e, c++, domain, color)) return false;
      }
    }
    return descend(domain, color);
  }

 private:
  bool assign(EdgeId e, int c, std::vector<unsigned>& domain,
              std::vector<int>& color) {
    if (!(domain[e] & (1U << c))) return false;
    color[e] = c;
    domain[e] = 1U << c;
    for (EdgeId f : neighbours_[e]) {
      if (color[f] >= 0) continue;
      domain[f] &= ~(1U << c);
      if (domain[f] == 0) return false;
    }
    return true;
  }

  std::optional<bool> descend(std::vector<unsigned>& domain,
                              std::vector<int>& color) {
    if (!meter_.tick()) return std::nullopt;
    EdgeId pick = -1;
    int fewest = colors_ + 1;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color[e] >= 0) continue;
      const int k = __builtin_popcount(domain[e]);
      if (k < fewest) {
        fewest = k;
        pick = e;
      }
    }
    if (pick < 0) return true;
    for (int c = 0; c < colors_; ++c) {
      if (!(domain[pick] & (1U << c))) continue;
      std::vector<unsigned> d = domain;
      std::vector<int> col = color;
      if (!assign(pick, c, d, col)) continue;
      auto r = descend(d, col);
      if (!r) return std::nullopt;
      if (*r) {
        color = std::move(col);
        return true;
      }
    }
    return false;
  }

  const MultiGraph& g_;
  int colors_;
  SearchMeter& meter_;
  std::vector<std::vector<EdgeId>> neighbours_;
};

}  // namespace

SearchResult<EdgeColoring> find_edge_coloring(const MultiGraph& g, int colors,
                                              const SearchLimits& limits) {
  if (colors < 1 || colors > 16) {
    throw PreconditionError("palette size must be in 1..16");
  }
  SearchResult<EdgeColoring> result;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      result.note = "graph has a loop";
      return result;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(g.incident(v).size()) > colors) {
      result.note = "maximum degree exceeds palette";
      return result;
    }
  }
  SearchMeter meter(limits);
  ColoringSearch search(g, colors, meter);
  std::vector<int> color;
  const auto outcome = search.solve(color);
  result.nodes = meter.nodes();
  if (!outcome) {
    result.status = SearchStatus::budget_exhausted;
  } else if (*outcome) {
    result.status = SearchStatus::found;
    result.value = EdgeColoring{std::move(color), colors};
  }
  return result;
}

std::optional<EdgeColoring> three_edge_coloring(const MultiGraph& g) {
  SearchLimits unlimited;
  unlimited.node_budget = UINT64_MAX;
  return find_edge_coloring(g, 3, unlimited).value;
}

std::optional<std::vector<EdgeColoring>> three_edge_colorable(
    const SuppressedGraph& s) {
  std::vector<EdgeColoring> out;
  for (const MultiGraph& comp : s.components) {
    auto c = three_edge_coloring(comp);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

std::vector<EdgeColoring> enumerate_three_edge_colorings(const MultiGraph& g) {
  std::vector<EdgeColoring> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return out;
  }
  const int m = g.edge_count();
  std::vector<int> color(m, -1);
  auto clashes = [&](EdgeId e, int c) {
    for (VertexId v : {g.edge(e).a, g.edge(e).b}) {
      for (EdgeId f : g.incident(v)) {
        if (f != e && color[f] == c) return true;
      }
    }
    return false;
  };
  std::function<void(EdgeId, int)> descend = [&](EdgeId e, int used) {
    if (e == m) {
      out.push_back(EdgeColoring{color, 3});
      return;
    }
    for (int c = 0; c <= std::min(used, 2); ++c) {
      if (clashes(e, c)) continue;
      color[e] = c;
      descend(e + 1, std::max(used, c + 1));
      color[e] = -1;
    }
  };
  descend(0, 0);
  return out;
}

CycleSet bicolored_cycles(const MultiGraph& g, const EdgeColoring& c, int x,
                          int y) {
  EdgeSet s(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c.color[e] == x || c.color[e] == y) s.insert(e);
  }
  return cycle_decomposition(g, s);
}

EdgeColoring kempe_exchange(const MultiGraph& g, const EdgeColoring& c, int x,
                            int y, const Cycle& cycle) {
  if (x == y) throw PreconditionError("Kempe exchange needs two colours");
  const std::size_t len = cycle.edges.size();
  if (len < 2 || cycle.vertices.size() != len) {
    throw PreconditionError("Kempe exchange needs a cycle");
  }
  for (std::size_t i = 0; i < len; ++i) {
    const EdgeId e = cycle.edges[i];
    if (!g.has_edge(e) || (c.color.at(e) != x && c.color.at(e) != y)) {
      throw PreconditionError("cycle is not bichromatic in the two colours");
    }
    const VertexId from = cycle.vertices[i];
    const VertexId to = cycle.vertices[(i + 1) % len];
    const Edge& ed = g.edge(e);
    if (!((ed.a == from && ed.b == to) || (ed.a == to && ed.b == from))) {
      throw PreconditionError("cycle edges do not follow its vertices");
    }
    if (c.color[e] == c.color[cycle.edges[(i + 1) % len]]) {
      throw PreconditionError("cycle does not alternate the two colours");
    }
  }
  EdgeColoring out = c;
  for (EdgeId e : cycle.edges) out.color[e] = (c.color[e] == x) ? y : x;
  return out;
}

// ---------------------------------------------------------- C5 2-factors

CycleSet two_factor_cycles(const CubicGraph& g, const PerfectMatching& m) {
  return cycle_decomposition(g, EdgeSet::all(g) - m.edges());
}

bool is_chordless_c5_factor(const MultiGraph& g, const CycleSet& cycles) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].length() != 5) return false;
    for (VertexId v : cycles[i].vertices) owner[v] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& cyc = cycles[i];
    int inside = 0;
    for (const Edge& e : g.edges()) {
      if (owner[e.a] == static_cast<int>(i) &&
          owner[e.b] == static_cast<int>(i)) {
        ++inside;
      }
    }
    if (inside != static_cast<int>(cyc.length())) return false;
  }
  return true;
}

void for_each_c5_two_factor(
    const CubicGraph& g,
    const std::function<bool(const C5TwoFactor&)>& visit) {
  if (g.vertex_count() % 10 != 0) return;
  const EdgeSet none(g);
  const EdgeSet all = EdgeSet::all(g);
  for_each_perfect_matching(g, none, none, [&](const EdgeSet& s) {
    CycleSet cycles = cycle_decomposition(g, all - s);
    if (!is_chordless_c5_factor(g, cycles)) return true;
    return visit(C5TwoFactor{PerfectMatching(g, s), std::move(cycles)});
  });
}

std::optional<C5TwoFactor> find_c5_two_factor(const CubicGraph& g) {
  std::optional<C5TwoFactor> found;
  for_each_c5_two_factor(g, [&](const C5TwoFactor& f) {
    found = f;
    return false;
  });
  return found;
}

GStar shrink_to_gstar(const CubicGraph& g, const PerfectMatching& m,
                      const CycleSet& cycles) {
  if (two_factor_cycles(g, m).size() != cycles.size() ||
      !is_chordless_c5_factor(g, cycles)) {
    throw PreconditionError("G* needs the chordless C5 2-factor of M");
  }
  GStar out;
  out.cycle_of_vertex.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (VertexId v : cycles[i].vertices) {
      out.cycle_of_vertex[v] = static_cast<int>(i);
    }
  }
  EdgeSet covered(g);
  for (const Cycle& c : cycles) {
    for (EdgeId e : c.edges) covered.insert(e);
  }
  if (covered != EdgeSet::all(g) - m.edges()) {
    throw PreconditionError("cycles are not the complement of M");
  }
  std::vector<std::pair<VertexId, VertexId>> ends;
  m.edges().for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    ends.emplace_back(out.cycle_of_vertex[ed.a], out.cycle_of_vertex[ed.b]);
    out.source_edge.push_back(e);
  });
  out.graph = MultiGraph(static_cast<int>(cycles.size()), ends);
  return out;
}

std::optional<EdgeColoring> five_edge_coloring(const MultiGraph& gstar) {
  for (VertexId v = 0; v < gstar.vertex_count(); ++v) {
    if (gstar.incident(v).size() != 5) {
      throw PreconditionError("five_edge_coloring needs a 5-regular graph");
    }
  }
  SearchLimits unlimited;
  unlimited.node_budget = UINT64_MAX;
  return find_edge_coloring(gstar, 5, unlimited).value;
}

}  // namespace fulkerson
