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

#include "fulkerson/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace fulkerson {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
  return h;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

MultiGraph::MultiGraph(
    int vertex_count,
    const std::vector<std::pair<VertexId, VertexId>>& endpoints)
    : incidence_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  edges_.reserve(endpoints.size());
  fingerprint_ = mix(kFnvOffset, static_cast<std::uint64_t>(vertex_count));
  for (const auto& [a, b] : endpoints) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count) {
      throw PreconditionError("edge endpoint out of range: " +
                              std::to_string(a) + "-" + std::to_string(b));
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, a, b});
    incidence_[a].push_back(id);
    incidence_[b].push_back(id);
    fingerprint_ = mix(fingerprint_, static_cast<std::uint64_t>(a));
    fingerprint_ = mix(fingerprint_, static_cast<std::uint64_t>(b));
  }
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (!has_edge(e)) throw PreconditionError("unknown edge " + std::to_string(e));
  return edges_[e];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  if (!has_vertex(v)) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  return incidence_[v];
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw PreconditionError("vertex " + std::to_string(v) +
                          " is not an endpoint of edge " + std::to_string(e));
}

CubicGraph::CubicGraph(MultiGraph g) : graph_(std::move(g)) {
  for (const Edge& e : graph_.edges()) {
    if (e.is_loop()) {
      throw PreconditionError("cubic graph cannot contain loop " +
                              std::to_string(e.id));
    }
  }
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.incident(v).size() != 3) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(graph_.incident(v).size()) +
                              ", expected 3");
    }
  }
}

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(const MultiGraph& host)
    : words_((host.edge_count() + 63) / 64, 0),
      universe_(host.edge_count()),
      host_(host.fingerprint()) {}

EdgeSet::EdgeSet(const MultiGraph& host, std::span<const EdgeId> ids)
    : EdgeSet(host) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet::EdgeSet(const MultiGraph& host, std::initializer_list<EdgeId> ids)
    : EdgeSet(host) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet EdgeSet::all(const MultiGraph& host) {
  EdgeSet s(host);
  for (EdgeId e = 0; e < host.edge_count(); ++e) s.insert(e);
  return s;
}

void EdgeSet::check_id(EdgeId e) const {
  if (e < 0 || e >= universe_) {
    throw PreconditionError("edge id " + std::to_string(e) +
                            " outside host of " + std::to_string(universe_) +
                            " edges");
  }
}

void EdgeSet::check_host(const EdgeSet& other) const {
  if (host_ != other.host_ || universe_ != other.universe_) {
    throw PreconditionError("edge sets belong to different graphs");
  }
}

void EdgeSet::insert(EdgeId e) {
  check_id(e);
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(EdgeId e) {
  check_id(e);
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

bool EdgeSet::contains(EdgeId e) const {
  if (e < 0 || e >= universe_) return false;
  return (words_[e / 64] >> (e % 64)) & 1U;
}

std::size_t EdgeSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += __builtin_popcountll(w);
  return n;
}

bool EdgeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  check_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const EdgeSet& x, const EdgeSet& y) {
  if (auto c = x.universe_ <=> y.universe_; c != 0) return c;
  for (std::size_t i = 0; i < x.words_.size(); ++i) {
    const std::uint64_t diff = x.words_[i] ^ y.words_[i];
    if (diff == 0) continue;
    const int bit = __builtin_ctzll(diff);
    const EdgeId d = static_cast<EdgeId>(i * 64 + bit);
    // The set holding d is smaller unless the other set has nothing beyond d
    // and is therefore a proper prefix.
    const bool x_has = x.contains(d);
    const EdgeSet& other = x_has ? y : x;
    bool other_has_more = false;
    for (std::size_t j = i; j < other.words_.size() && !other_has_more; ++j) {
      std::uint64_t w = other.words_[j];
      if (j == i) w &= (bit == 63) ? 0 : (~std::uint64_t{0} << (bit + 1));
      other_has_more = w != 0;
    }
    const bool x_smaller = x_has ? other_has_more : !other_has_more;
    return x_smaller ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t EdgeSet::hash() const {
  std::uint64_t h = mix(kFnvOffset, host_);
  for (std::uint64_t w : words_) h = mix(h, w);
  return static_cast<std::size_t>(h);
}

// --------------------------------------------------------------- matchings

bool is_matching(const MultiGraph& g, const EdgeSet& s) {
  if (s.universe() != g.edge_count() || s.host() != g.fingerprint()) {
    return false;
  }
  std::vector<char> used(g.vertex_count(), 0);
  bool ok = true;
  s.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop() || used[ed.a] || used[ed.b]) ok = false;
    if (!ed.is_loop()) used[ed.a] = used[ed.b] = 1;
  });
  return ok;
}

bool is_perfect_matching(const MultiGraph& g, const EdgeSet& s) {
  return is_matching(g, s) &&
         2 * static_cast<int>(s.size()) == g.vertex_count();
}

Matching::Matching(const MultiGraph& g, EdgeSet edges)
    : edges_(std::move(edges)) {
  if (!is_matching(g, edges_)) {
    throw PreconditionError("edge set is not a matching of the host graph");
  }
}

PerfectMatching::PerfectMatching(const MultiGraph& g, EdgeSet edges)
    : Matching(std::move(edges), Unchecked{}) {
  if (!is_perfect_matching(g, this->edges())) {
    throw PreconditionError("edge set is not a perfect matching");
  }
}

// -------------------------------------------------------------- predicates

DegreeError::DegreeError(VertexId vertex, int degree)
    : PreconditionError("vertex " + std::to_string(vertex) + " has " +
                        std::to_string(degree) +
                        " incident edges in the set, expected 0 or 2"),
      vertex_(vertex),
      degree_(degree) {}

int degree(const MultiGraph& g, VertexId v) {
  return static_cast<int>(g.incident(v).size());
}

std::vector<int> connected_components(const MultiGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<VertexId> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const MultiGraph& g) {
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_bridgeless(const MultiGraph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("is_bridgeless requires a connected graph");
  }
  const int n = g.vertex_count();
  if (n == 0) return true;
  // Iterative lowpoint DFS keyed on the entering edge id, so that a parallel
  // copy of the tree edge counts as a back edge.
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  int timer = 0;
  std::vector<Frame> stack{{0, -1, 0}};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      EdgeId e = inc[f.next++];
      if (e == f.via) continue;
      VertexId w = g.other_end(e, f.v);
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, e, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (!stack.empty()) {
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] > disc[parent.v]) return false;
    }
  }
  return true;
}

namespace {

// Number of components of g minus `removed` that contain a cycle.
int cyclic_components_without(const MultiGraph& g,
                              const std::vector<EdgeId>& removed) {
  UnionFind uf(g.vertex_count());
  std::vector<char> gone(g.edge_count(), 0);
  for (EdgeId e : removed) gone[e] = 1;
  for (const Edge& e : g.edges()) {
    if (!gone[e.id]) uf.unite(e.a, e.b);
  }
  std::vector<int> verts(g.vertex_count(), 0), edges(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++verts[uf.find(v)];
  for (const Edge& e : g.edges()) {
    if (!gone[e.id]) ++edges[uf.find(e.a)];
  }
  int cyclic = 0;
  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    if (verts[r] > 0 && edges[r] >= verts[r]) ++cyclic;
  }
  return cyclic;
}

}  // namespace

bool cyclic_edge_connectivity_at_least(const CubicGraph& g, int k) {
  if (k < 1 || k > 6) {
    throw PreconditionError("cyclic connectivity threshold must be in 1..6");
  }
  const int m = g.edge_count();
  for (int size = 0; size < k && size <= m; ++size) {
    std::vector<EdgeId> combo(size);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      if (cyclic_components_without(g, combo) >= 2) return false;
      int i = size - 1;
      while (i >= 0 && combo[i] == m - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return true;
}

bool is_bipartite(const MultiGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

CycleSet cycle_decomposition(const MultiGraph& g, const EdgeSet& s) {
  if (s.universe() != g.edge_count() || s.host() != g.fingerprint()) {
    throw PreconditionError("edge set does not belong to this graph");
  }
  std::vector<std::vector<EdgeId>> local(g.vertex_count());
  s.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    local[ed.a].push_back(e);
    local[ed.b].push_back(e);
  });
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = static_cast<int>(local[v].size());
    if (d != 0 && d != 2) throw DegreeError(v, d);
  }
  s.for_each([&](EdgeId e) {
    if (g.edge(e).is_loop()) throw DegreeError(g.edge(e).a, 2);
  });

  CycleSet cycles;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start] || local[start].empty()) continue;
    Cycle c;
    // Leave through the edge leading to the lower neighbour.
    auto key = [&](EdgeId e) {
      return std::pair{g.other_end(e, start), e};
    };
    EdgeId first = local[start][0];
    if (key(local[start][1]) < key(first)) first = local[start][1];
    VertexId v = start;
    EdgeId via = first;
    do {
      seen[v] = 1;
      c.vertices.push_back(v);
      c.edges.push_back(via);
      v = g.other_end(via, v);
      via = (local[v][0] == via) ? local[v][1] : local[v][0];
    } while (v != start);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

}  // namespace fulkerson
