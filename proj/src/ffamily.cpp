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

#include "fulkerson/ffamily.hpp"

#include <algorithm>
#include <future>

namespace fulkerson {

namespace {

constexpr const char* kMemberNames = "ABCD";

// Cycles of G \ M with each vertex's cycle, position and matching edge.
struct CycleIndex {
  CycleSet cycles;
  std::vector<int> cycle_of;
  std::vector<int> position;
  std::vector<EdgeId> m_at;

  CycleIndex(const CubicGraph& g, const PerfectMatching& m)
      : cycles(two_factor_cycles(g, m)),
        cycle_of(g.vertex_count(), -1),
        position(g.vertex_count(), -1),
        m_at(g.vertex_count(), -1) {
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      for (std::size_t i = 0; i < cycles[c].vertices.size(); ++i) {
        cycle_of[cycles[c].vertices[i]] = static_cast<int>(c);
        position[cycles[c].vertices[i]] = static_cast<int>(i);
      }
    }
    const MultiGraph& h = g;
    m.edges().for_each([&](EdgeId e) {
      m_at[h.edge(e).a] = e;
      m_at[h.edge(e).b] = e;
    });
  }
};

using Positions = std::array<std::vector<int>, 4>;

// Positions on cycle c of the vertices met by each member; label[e] is the
// member holding matching edge e, or -1.
Positions positions_on(const CycleIndex& index, int c,
                       const std::vector<int>& label) {
  Positions pos;
  const Cycle& cycle = index.cycles[c];
  for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
    const int x = label[index.m_at[cycle.vertices[i]]];
    if (x >= 0) pos[x].push_back(static_cast<int>(i));
  }
  return pos;
}

std::vector<std::array<EdgeId, 2>> pairings_on(const Cycle& cycle,
                                               std::vector<int> s) {
  std::sort(s.begin(), s.end());
  const int len = static_cast<int>(cycle.length());
  auto edge_between = [&](int p, int q) -> EdgeId {
    if (q == p + 1) return cycle.edges[p];
    if (p == 0 && q == len - 1) return cycle.edges[len - 1];
    return -1;
  };
  std::vector<std::array<EdgeId, 2>> out;
  for (auto [x, y, z, w] : {std::array{0, 1, 2, 3}, std::array{1, 2, 0, 3}}) {
    const EdgeId e = edge_between(s[x], s[y]);
    const EdgeId f = edge_between(s[z], s[w]);
    if (e < 0 || f < 0) continue;
    out.push_back({std::min(e, f), std::max(e, f)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> merged(const Positions& pos) {
  std::vector<int> all;
  for (const auto& p : pos) all.insert(all.end(), p.begin(), p.end());
  return all;
}

// Conditions i and ii on one cycle; empty string when they hold.
std::pair<std::string, std::string> shape_problem(const Cycle& cycle,
                                                  const Positions& pos) {
  std::size_t total = 0;
  for (const auto& p : pos) total += p.size();
  if (cycle.is_odd()) {
    for (int x = 0; x < 4; ++x) {
      if (pos[x].size() != 1) {
        return {"i", std::string("member ") + kMemberNames[x] + " meets odd cycle " +
                         std::to_string(pos[x].size()) + " times"};
      }
    }
    return {};
  }
  if (total == 0) return {};
  if (total != 4) {
    return {"ii", "even cycle meets the family at " + std::to_string(total) +
                      " vertices"};
  }
  std::vector<std::size_t> sizes;
  for (const auto& p : pos) {
    if (!p.empty()) sizes.push_back(p.size());
  }
  std::sort(sizes.begin(), sizes.end());
  if (sizes != std::vector<std::size_t>{4} &&
      sizes != std::vector<std::size_t>{2, 2}) {
    return {"ii", "even cycle is not met 2+2 or 4 by the members"};
  }
  return {};
}

// Whether the matching part of M_X on this cycle exists: consecutive ends
// of X must be an odd distance apart, and a cycle X avoids must be even.
bool parity_ok(const Cycle& cycle, const std::vector<int>& p) {
  const int len = static_cast<int>(cycle.length());
  if (p.empty()) return len % 2 == 0;
  std::vector<int> s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int next = i + 1 < s.size() ? s[i + 1] : s[0] + len;
    if ((next - s[i]) % 2 == 0) return false;
  }
  return true;
}

std::optional<FamilyProblem> cycle_problem(const Cycle& cycle, int c,
                                           const Positions& pos) {
  auto [cond, detail] = shape_problem(cycle, pos);
  if (!cond.empty()) return FamilyProblem{c, cond, detail};
  for (int x = 0; x < 4; ++x) {
    if (!parity_ok(cycle, pos[x])) {
      return FamilyProblem{c, "balanced",
                           std::string("member ") + kMemberNames[x] +
                               " leaves an odd gap on the cycle"};
    }
  }
  const std::vector<int> all = merged(pos);
  if (!all.empty() && pairings_on(cycle, all).empty()) {
    return FamilyProblem{c, "iii",
                         "the four vertices carry no 2-edge matching"};
  }
  return std::nullopt;
}

void validate_shape(const CubicGraph& g, const PerfectMatching& m,
                    const std::array<Matching, 4>& members) {
  const MultiGraph& h = g;
  if (m.edges().host() != h.fingerprint() ||
      !is_perfect_matching(h, m.edges())) {
    throw PreconditionError("family matching is not a perfect matching of g");
  }
  EdgeSet seen(h);
  for (const Matching& x : members) {
    if (x.edges().host() != h.fingerprint()) {
      throw PreconditionError("family member belongs to another graph");
    }
    if (!x.edges().is_subset_of(m.edges())) {
      throw PreconditionError("family member is not contained in m");
    }
    if (x.edges().intersects(seen)) {
      throw PreconditionError("family members are not disjoint");
    }
    seen |= x.edges();
  }
}

std::vector<int> labels_of(const MultiGraph& g,
                           const std::array<Matching, 4>& members) {
  std::vector<int> label(g.edge_count(), -1);
  for (int x = 0; x < 4; ++x) {
    members[x].edges().for_each([&](EdgeId e) { label[e] = x; });
  }
  return label;
}

// Cycle edges of M_X forced by the ends `p` of X; nullopt if X misses it.
std::optional<std::vector<EdgeId>> forced_restriction(const Cycle& cycle,
                                                      std::vector<int> p) {
  if (p.empty()) return std::nullopt;
  const int len = static_cast<int>(cycle.length());
  std::sort(p.begin(), p.end());
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int next = i + 1 < p.size() ? p[i + 1] : p[0] + len;
    for (int q = p[i] + 1; q + 1 < next; q += 2) {
      out.push_back(cycle.edges[q % len]);
    }
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ verification

std::optional<std::vector<NOption>> n_options(
    const CubicGraph& g, const PerfectMatching& m,
    const std::array<Matching, 4>& members) {
  validate_shape(g, m, members);
  const CycleIndex index(g, m);
  const std::vector<int> label = labels_of(g, members);
  std::vector<NOption> out;
  for (std::size_t c = 0; c < index.cycles.size(); ++c) {
    const Positions pos = positions_on(index, static_cast<int>(c), label);
    if (!shape_problem(index.cycles[c], pos).first.empty()) return std::nullopt;
    const std::vector<int> all = merged(pos);
    if (all.empty()) continue;
    NOption option{static_cast<int>(c), pairings_on(index.cycles[c], all)};
    if (option.matchings.empty()) return std::nullopt;
    out.push_back(std::move(option));
  }
  return out;
}

std::optional<Matching> derive_n(const CubicGraph& g, const PerfectMatching& m,
                                 const std::array<Matching, 4>& members) {
  const auto options = n_options(g, m, members);
  if (!options) return std::nullopt;
  EdgeSet n(g);
  for (const NOption& o : *options) {
    n.insert(o.matchings.front()[0]);
    n.insert(o.matchings.front()[1]);
  }
  return Matching(g, n);
}

FFamilyReport verify_ffamily(const CubicGraph& g, const FFamily& fam) {
  validate_shape(g, fam.m, fam.members);
  const MultiGraph& h = g;
  if (fam.n_edges.edges().host() != h.fingerprint()) {
    throw PreconditionError("N belongs to another graph");
  }
  const CycleIndex index(g, fam.m);
  const std::vector<int> label = labels_of(g, fam.members);
  FFamilyReport report;
  report.cycles = index.cycles;
  EdgeSet n_seen(h);
  for (std::size_t c = 0; c < index.cycles.size(); ++c) {
    const Cycle& cycle = index.cycles[c];
    const int ci = static_cast<int>(c);
    const Positions pos = positions_on(index, ci, label);
    if (auto problem = cycle_problem(cycle, ci, pos)) {
      report.problems.push_back(*problem);
      continue;
    }
    std::vector<EdgeId> on_cycle;
    for (EdgeId e : cycle.edges) {
      if (fam.n_edges.contains(e)) on_cycle.push_back(e);
    }
    std::sort(on_cycle.begin(), on_cycle.end());
    n_seen |= EdgeSet(h, on_cycle);
    const std::vector<int> all = merged(pos);
    const auto options = all.empty() ? std::vector<std::array<EdgeId, 2>>{}
                                     : pairings_on(cycle, all);
    const bool fits =
        all.empty() ? on_cycle.empty()
                    : std::any_of(options.begin(), options.end(),
                                  [&](const std::array<EdgeId, 2>& o) {
                                    return on_cycle ==
                                           std::vector<EdgeId>(o.begin(), o.end());
                                  });
    if (!fits) {
      report.problems.push_back(
          {ci, "iii", "N on this cycle is not a matching of the four vertices"});
    }
  }
  if (n_seen != fam.n_edges.edges()) {
    report.problems.push_back({-1, "N", "N has edges off the met cycles"});
  }
  for (int x = 0; x < 4; ++x) {
    if (fam.members[x].empty()) {
      report.problems.push_back(
          {-1, "nonempty", std::string("member ") + kMemberNames[x] + " is empty"});
    } else if (!is_m_balanced(g, fam.m, fam.members[x])) {
      report.problems.push_back(
          {-1, "balanced",
           std::string("member ") + kMemberNames[x] + " is not M-balanced"});
    }
  }
  report.ok = report.problems.empty();
  return report;
}

// ------------------------------------------------- covering from a family

FulkersonCovering covering_from_ffamily(const CubicGraph& g,
                                        const FFamily& fam) {
  const FFamilyReport report = verify_ffamily(g, fam);
  if (!report.ok) {
    const FamilyProblem& p = report.problems.front();
    throw PreconditionError("not an F-family: condition " + p.condition +
                            (p.cycle >= 0 ? " on cycle " + std::to_string(p.cycle)
                                          : std::string()) +
                            ": " + p.detail);
  }
  const MultiGraph& h = g;
  const CycleIndex index(g, fam.m);
  const std::vector<int> label = labels_of(g, fam.members);
  std::array<EdgeSet, 4> mx;
  for (int x = 0; x < 4; ++x) mx[x] = fam.members[x].edges();

  for (std::size_t c = 0; c < index.cycles.size(); ++c) {
    const Cycle& cycle = index.cycles[c];
    const int len = static_cast<int>(cycle.length());
    const Positions pos = positions_on(index, static_cast<int>(c), label);
    std::array<std::vector<EdgeId>, 4> fixed;
    std::vector<int> free;
    for (int x = 0; x < 4; ++x) {
      if (auto r = forced_restriction(cycle, pos[x])) {
        fixed[x] = std::move(*r);
      } else {
        free.push_back(x);
      }
    }
    std::array<std::vector<EdgeId>, 2> alternating;
    for (int i = 0; i < len; ++i) alternating[i % 2].push_back(cycle.edges[i]);
    bool done = false;
    for (unsigned choice = 0; choice < (1U << free.size()) && !done; ++choice) {
      for (std::size_t i = 0; i < free.size(); ++i) {
        fixed[free[i]] = alternating[(choice >> i) & 1];
      }
      std::vector<int> cover(len, 0);
      for (int i = 0; i < len; ++i) {
        cover[i] = fam.n_edges.contains(cycle.edges[i]) ? 1 : 0;
      }
      for (int x = 0; x < 4; ++x) {
        for (EdgeId e : fixed[x]) {
          const auto at = std::find(cycle.edges.begin(), cycle.edges.end(), e);
          ++cover[at - cycle.edges.begin()];
        }
      }
      done = std::all_of(cover.begin(), cover.end(), [](int k) { return k == 2; });
    }
    if (!done) {
      throw CoveringConstructionError(
          static_cast<int>(c),
          "no restriction choice double-covers cycle " + std::to_string(c));
    }
    for (int x = 0; x < 4; ++x) {
      for (EdgeId e : fixed[x]) mx[x].insert(e);
    }
  }
  EdgeSet rest = fam.m.edges();
  for (const Matching& x : fam.members) rest -= x.edges();
  FulkersonCovering f{{fam.m, PerfectMatching(h, mx[0]), PerfectMatching(h, mx[1]),
                       PerfectMatching(h, mx[2]), PerfectMatching(h, mx[3]),
                       PerfectMatching(h, rest | fam.n_edges.edges())}};
  if (!verify_covering(h, f).ok) {
    throw InvariantError("F-family covering does not double-cover");
  }
  if (!is_proper(f)) {
    throw InvariantError("F-family covering repeats a matching");
  }
  return f;
}

// ----------------------------------------------------------------- search

namespace {

class FamilySearch {
 public:
  FamilySearch(const CubicGraph& g, const PerfectMatching& m,
               SearchMeter& meter)
      : g_(g), m_(m), index_(g, m), meter_(meter),
        label_(g.edge_count(), -1),
        count_(index_.cycles.size(), std::array<int, 4>{}),
        remaining_(index_.cycles.size(), 0) {
    std::vector<char> seen(g.edge_count(), 0);
    for (std::size_t c = 0; c < index_.cycles.size(); ++c) {
      remaining_[c] = static_cast<int>(index_.cycles[c].length());
      for (VertexId v : index_.cycles[c].vertices) {
        const EdgeId e = index_.m_at[v];
        if (!seen[e]) {
          seen[e] = 1;
          order_.push_back(e);
        }
      }
    }
  }

  std::optional<FFamily> run() {
    if (descend(0, -1)) return found_;
    return std::nullopt;
  }

 private:
  std::array<int, 2> cycles_of(EdgeId e) const {
    const Edge& ed = static_cast<const MultiGraph&>(g_).edge(e);
    return {index_.cycle_of[ed.a], index_.cycle_of[ed.b]};
  }

  bool partial_ok(int c) const {
    const Cycle& cycle = index_.cycles[c];
    const auto& k = count_[c];
    if (cycle.is_odd()) {
      int missing = 0;
      for (int x = 0; x < 4; ++x) {
        if (k[x] > 1) return false;
        missing += k[x] == 0;
      }
      return missing <= remaining_[c];
    }
    int total = 0, distinct = 0;
    for (int x = 0; x < 4; ++x) {
      total += k[x];
      distinct += k[x] > 0;
    }
    if (total > 4 || distinct > 2) return false;
    if (distinct == 2) {
      for (int x = 0; x < 4; ++x) {
        if (k[x] > 2) return false;
      }
    }
    return true;
  }

  bool complete_ok(int c) const {
    return !cycle_problem(index_.cycles[c], c, positions_on(index_, c, label_));
  }

  bool apply(EdgeId e, int x) {
    label_[e] = x;
    bool ok = true;
    const auto cs = cycles_of(e);
    for (int c : cs) {
      --remaining_[c];
      if (x >= 0) ++count_[c][x];
    }
    for (int c : cs) {
      if (!partial_ok(c) || (remaining_[c] == 0 && !complete_ok(c))) ok = false;
    }
    return ok;
  }

  void undo(EdgeId e, int x) {
    for (int c : cycles_of(e)) {
      ++remaining_[c];
      if (x >= 0) --count_[c][x];
    }
    label_[e] = -1;
  }

  // Returns true once a family is stored or the meter halts.
  bool descend(std::size_t i, int highest) {
    if (!meter_.tick()) return true;
    if (i == order_.size()) return highest == 3 && accept();
    const EdgeId e = order_[i];
    for (int x = -1; x <= std::min(highest + 1, 3); ++x) {
      const bool ok = apply(e, x);
      const bool stop = ok && descend(i + 1, std::max(highest, x));
      undo(e, x);
      if (stop) return true;
    }
    return false;
  }

  bool accept() {
    std::array<Matching, 4> members;
    const MultiGraph& h = g_;
    for (int x = 0; x < 4; ++x) {
      EdgeSet s(h);
      for (EdgeId e : order_) {
        if (label_[e] == x) s.insert(e);
      }
      members[x] = Matching(h, s);
    }
    auto n = derive_n(g_, m_, members);
    if (!n) return false;
    FFamily fam{m_, members, *n};
    if (!verify_ffamily(g_, fam).ok) {
      throw InvariantError("family search accepted an invalid family");
    }
    found_ = std::move(fam);
    return true;
  }

  const CubicGraph& g_;
  const PerfectMatching& m_;
  CycleIndex index_;
  SearchMeter& meter_;
  std::vector<EdgeId> order_;
  std::vector<int> label_;
  std::vector<std::array<int, 4>> count_;
  std::vector<int> remaining_;
  std::optional<FFamily> found_;
};

}  // namespace

SearchResult<FFamily> find_ffamily(const CubicGraph& g,
                                   const std::optional<PerfectMatching>& m,
                                   const SearchLimits& limits) {
  SearchResult<FFamily> result;
  SearchMeter meter(limits);
  std::vector<PerfectMatching> candidates;
  bool truncated = false;
  if (m) {
    if (!is_perfect_matching(g, m->edges())) {
      throw PreconditionError("m is not a perfect matching of g");
    }
    candidates.push_back(*m);
  } else {
    MatchingEnumeration all =
        enumerate_perfect_matchings(g, limits.matching_limit);
    candidates = std::move(all.matchings);
    truncated = all.truncated;
  }
  const std::size_t batch = std::max(1U, limits.threads);
  for (std::size_t start = 0; start < candidates.size() && !result.value;
       start += batch) {
    const std::size_t end = std::min(candidates.size(), start + batch);
    std::vector<std::optional<FFamily>> found(end - start);
    if (batch == 1) {
      found[0] = FamilySearch(g, candidates[start], meter).run();
    } else {
      std::vector<std::future<std::optional<FFamily>>> jobs;
      for (std::size_t i = start; i < end; ++i) {
        jobs.push_back(std::async(std::launch::async, [&, i] {
          return FamilySearch(g, candidates[i], meter).run();
        }));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) found[i] = jobs[i].get();
    }
    for (auto& f : found) {
      if (f) {
        result.value = std::move(f);
        break;
      }
    }
    if (meter.halted()) break;
  }
  result.nodes = meter.nodes();
  if (result.value) {
    result.status = SearchStatus::found;
  } else if (meter.halted() || truncated) {
    result.status = SearchStatus::budget_exhausted;
  }
  return result;
}

std::optional<PerfectMatching> find_two_odd_cycle_matching(const CubicGraph& g) {
  std::optional<PerfectMatching> out;
  const EdgeSet none(g);
  for_each_perfect_matching(g, none, none, [&](const EdgeSet& s) {
    const CycleSet cycles = cycle_decomposition(g, EdgeSet::all(g) - s);
    if (cycles.size() == 2 && cycles[0].is_odd() && cycles[1].is_odd()) {
      out.emplace(g, s);
      return false;
    }
    return true;
  });
  return out;
}

// ------------------------------------------------------------ dot products

namespace {

Matching carry(const MultiGraph& target, const Matching& source,
               const std::vector<EdgeId>& map) {
  EdgeSet s(target);
  source.edges().for_each([&](EdgeId e) {
    if (map[e] < 0) throw InvariantError("carried edge was removed");
    s.insert(map[e]);
  });
  return Matching(target, s);
}

FFamily carried_family(const DotProduct& p, const PerfectMatching& m1,
                       const PerfectMatching& m2, EdgeId xy,
                       const std::array<Matching, 4>& members,
                       const Matching& n, bool from_first) {
  const MultiGraph& h = p.graph;
  const auto& pv = p.provenance;
  EdgeSet m = carry(h, m1, pv.edge_from_first).edges();
  m2.edges().for_each([&](EdgeId e) {
    if (e != xy) m.insert(pv.edge_from_second[e]);
  });
  const auto& map = from_first ? pv.edge_from_first : pv.edge_from_second;
  FFamily fam{PerfectMatching(h, m), {}, carry(h, n, map)};
  for (int x = 0; x < 4; ++x) fam.members[x] = carry(h, members[x], map);
  return fam;
}

void require_family(const CubicGraph& g, const FFamily& fam, const char* who) {
  if (!verify_ffamily(g, fam).ok) {
    throw PreconditionError(std::string(who) + " is not an F-family");
  }
}

// The two cycles of g \ m, both odd; throws otherwise.
CycleSet two_odd_cycles(const CubicGraph& g, const PerfectMatching& m,
                        const char* who) {
  if (!is_perfect_matching(g, m.edges())) {
    throw PreconditionError(std::string(who) + " is not a perfect matching");
  }
  CycleSet cycles = two_factor_cycles(g, m);
  if (cycles.size() != 2 || !cycles[0].is_odd() || !cycles[1].is_odd()) {
    throw PreconditionError(std::string("complement of ") + who +
                            " is not two odd cycles");
  }
  return cycles;
}

int cycle_holding(const CycleSet& cycles, EdgeId e) {
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& es = cycles[c].edges;
    if (std::find(es.begin(), es.end(), e) != es.end()) return static_cast<int>(c);
  }
  return -1;
}

int cycle_at(const CycleSet& cycles, VertexId v) {
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& vs = cycles[c].vertices;
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) return static_cast<int>(c);
  }
  return -1;
}

bool member_edge(const FFamily& fam, EdgeId e) {
  return std::any_of(fam.members.begin(), fam.members.end(),
                     [&](const Matching& x) { return x.contains(e); });
}

void check_type1(const CubicGraph& g1, const PerfectMatching& m1,
                 const CubicGraph& g2, const FFamily& fam2,
                 const DotProductSpec& spec) {
  require_family(g2, fam2, "fam2");
  const CycleSet c1 = two_odd_cycles(g1, m1, "m1");
  const int a = cycle_holding(c1, spec.e1);
  const int b = cycle_holding(c1, spec.e2);
  if (a < 0 || b < 0 || a == b) {
    throw PreconditionError("e1 and e2 must lie on the two cycles of g1 \\ m1");
  }
  const MultiGraph& h2 = g2;
  if (!h2.has_edge(spec.e3) || !fam2.m.contains(spec.e3)) {
    throw PreconditionError("xy is not an edge of m2");
  }
  if (member_edge(fam2, spec.e3)) {
    throw PreconditionError("xy belongs to a family member");
  }
  const CycleSet c2 = two_factor_cycles(g2, fam2.m);
  const int x = cycle_at(c2, h2.edge(spec.e3).a);
  const int y = cycle_at(c2, h2.edge(spec.e3).b);
  if (x == y || !c2[x].is_odd() || !c2[y].is_odd()) {
    throw PreconditionError("xy does not join two distinct odd cycles");
  }
}

void check_type2(const CubicGraph& g1, const FFamily& fam1,
                 const CubicGraph& g2, const PerfectMatching& m2,
                 const DotProductSpec& spec) {
  require_family(g1, fam1, "fam1");
  const MultiGraph& h1 = g1;
  for (EdgeId e : {spec.e1, spec.e2}) {
    if (!h1.has_edge(e)) throw PreconditionError("e1/e2 is not an edge of g1");
    if (fam1.m.contains(e)) throw PreconditionError("e1/e2 lies in m1");
    if (fam1.n_edges.contains(e)) throw PreconditionError("e1/e2 lies in N");
  }
  const CycleSet c2 = two_odd_cycles(g2, m2, "m2");
  const MultiGraph& h2 = g2;
  if (!h2.has_edge(spec.e3) || !m2.contains(spec.e3)) {
    throw PreconditionError("e3 is not an edge of m2");
  }
  if (cycle_at(c2, h2.edge(spec.e3).a) == cycle_at(c2, h2.edge(spec.e3).b)) {
    throw PreconditionError("e3 does not join the two cycles of g2 \\ m2");
  }
}

TransportedFamily finish(DotProduct product, FFamily fam) {
  if (!verify_ffamily(product.graph, fam).ok) {
    throw InvariantError("transported family does not verify");
  }
  return {std::move(product), std::move(fam)};
}

bool resolves(const CubicGraph& g1, const CubicGraph& g2,
              const DotProductSpec& spec) {
  try {
    resolve_dot_product(g1, g2, spec);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

TransportedFamily dot_preserve_type1(const CubicGraph& g1,
                                     const PerfectMatching& m1,
                                     const CubicGraph& g2, const FFamily& fam2,
                                     const DotProductSpec& spec) {
  check_type1(g1, m1, g2, fam2, spec);
  DotProduct product = dot_product(g1, g2, spec);
  FFamily fam = carried_family(product, m1, fam2.m, spec.e3, fam2.members,
                               fam2.n_edges, false);
  return finish(std::move(product), std::move(fam));
}

TransportedFamily dot_preserve_type2(const CubicGraph& g1, const FFamily& fam1,
                                     const CubicGraph& g2,
                                     const PerfectMatching& m2,
                                     const DotProductSpec& spec) {
  check_type2(g1, fam1, g2, m2, spec);
  DotProduct product = dot_product(g1, g2, spec);
  FFamily fam = carried_family(product, fam1.m, m2, spec.e3, fam1.members,
                               fam1.n_edges, true);
  return finish(std::move(product), std::move(fam));
}

std::optional<DotProductSpec> first_type1_spec(const CubicGraph& g1,
                                               const PerfectMatching& m1,
                                               const CubicGraph& g2,
                                               const FFamily& fam2) {
  const CycleSet c1 = two_odd_cycles(g1, m1, "m1");
  const CycleSet c2 = two_factor_cycles(g2, fam2.m);
  const MultiGraph& h2 = g2;
  std::vector<EdgeId> xys;
  fam2.m.edges().for_each([&](EdgeId e) {
    const int x = cycle_at(c2, h2.edge(e).a);
    const int y = cycle_at(c2, h2.edge(e).b);
    if (!member_edge(fam2, e) && x != y && c2[x].is_odd() && c2[y].is_odd()) {
      xys.push_back(e);
    }
  });
  std::vector<EdgeId> first = c1[0].edges, second = c1[1].edges;
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  for (EdgeId a : first) {
    for (EdgeId b : second) {
      for (EdgeId xy : xys) {
        const DotProductSpec spec{std::min(a, b), std::max(a, b), xy};
        if (resolves(g1, g2, spec)) return spec;
      }
    }
  }
  return std::nullopt;
}

std::optional<DotProductSpec> first_type2_spec(const CubicGraph& g1,
                                               const FFamily& fam1,
                                               const CubicGraph& g2,
                                               const PerfectMatching& m2) {
  const CycleSet c2 = two_odd_cycles(g2, m2, "m2");
  const MultiGraph& h1 = g1;
  const MultiGraph& h2 = g2;
  std::vector<EdgeId> e3s;
  m2.edges().for_each([&](EdgeId e) {
    if (cycle_at(c2, h2.edge(e).a) != cycle_at(c2, h2.edge(e).b)) {
      e3s.push_back(e);
    }
  });
  std::vector<EdgeId> free;
  for (EdgeId e = 0; e < h1.edge_count(); ++e) {
    if (!fam1.m.contains(e) && !fam1.n_edges.contains(e)) free.push_back(e);
  }
  for (std::size_t i = 0; i < free.size(); ++i) {
    for (std::size_t j = i + 1; j < free.size(); ++j) {
      for (EdgeId e3 : e3s) {
        const DotProductSpec spec{free[i], free[j], e3};
        if (resolves(g1, g2, spec)) return spec;
      }
    }
  }
  return std::nullopt;
}

std::vector<DotStage> iterate_dot_sequence(const CubicGraph& base,
                                           const std::vector<DotStep>& steps,
                                           const SearchLimits& limits) {
  std::vector<DotStage> stages;
  auto family_of = [&](const CubicGraph& g, int step) {
    auto r = find_ffamily(g, std::nullopt, limits);
    if (!r.value) {
      throw DotStepError(step, std::string("no F-family found (") +
                                   to_string(r.status) + ")");
    }
    return *r.value;
  };
  {
    FFamily fam = family_of(base, 0);
    FulkersonCovering cov = covering_from_ffamily(base, fam);
    stages.push_back({base, std::move(fam), std::move(cov), std::nullopt});
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    const DotStep& step = steps[i];
    const DotStage& prev = stages.back();
    try {
      std::optional<TransportedFamily> t;
      std::optional<DotProductSpec> spec = step.spec;
      if (step.type == Preservation::type1) {
        auto m1 = find_two_odd_cycle_matching(prev.graph);
        if (!m1) throw DotStepError(number, "no matching with two odd cycles");
        const FFamily fam2 = family_of(step.piece, number);
        if (!spec) spec = first_type1_spec(prev.graph, *m1, step.piece, fam2);
        if (!spec) throw DotStepError(number, "no valid dot product");
        t = dot_preserve_type1(prev.graph, *m1, step.piece, fam2, *spec);
      } else {
        auto m2 = find_two_odd_cycle_matching(step.piece);
        if (!m2) throw DotStepError(number, "piece has no matching with two odd cycles");
        if (!spec) spec = first_type2_spec(prev.graph, prev.family, step.piece, *m2);
        if (!spec) throw DotStepError(number, "no valid dot product");
        t = dot_preserve_type2(prev.graph, prev.family, step.piece, *m2, *spec);
      }
      FulkersonCovering cov = covering_from_ffamily(t->product.graph, t->family);
      stages.push_back({t->product.graph, std::move(t->family), std::move(cov), spec});
    } catch (const DotStepError&) {
      throw;
    } catch (const PreconditionError& e) {
      throw DotStepError(number, e.what());
    }
  }
  return stages;
}

// ---------------------------------------------------------- C5 2-factors

C5Covering covering_from_c5_structure(const CubicGraph& g) {
  C5Covering out;
  bool any = false;
  for_each_c5_two_factor(g, [&](const C5TwoFactor& factor) {
    any = true;
    GStar star = shrink_to_gstar(g, factor.matching, factor.cycles);
    const auto colouring = five_edge_coloring(star.graph);
    if (!colouring) return true;
    const MultiGraph& h = g;
    std::array<Matching, 4> members;
    for (int x = 0; x < 4; ++x) {
      EdgeSet s(h);
      for (std::size_t j = 0; j < star.source_edge.size(); ++j) {
        if (colouring->color[j] == x) s.insert(star.source_edge[j]);
      }
      members[x] = Matching(h, s);
    }
    auto n = derive_n(g, factor.matching, members);
    if (!n) throw InvariantError("C5 colour classes give no N");
    FFamily fam{factor.matching, members, *n};
    out.covering = covering_from_ffamily(g, fam);
    out.family = std::move(fam);
    out.factor = factor;
    out.gstar = std::move(star);
    out.outcome = C5Covering::Outcome::found;
    return false;
  });
  if (!out.covering && any) {
    out.outcome = C5Covering::Outcome::gstar_not_colourable;
  }
  return out;
}

}  // namespace fulkerson
