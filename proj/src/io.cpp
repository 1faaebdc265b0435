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

#include "fulkerson/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace fulkerson {

namespace {

// Splits the next non-blank, non-comment line into words.
bool next_words(std::istream& in, int& line, std::vector<std::string>& words) {
  std::string text;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) {
      text.erase(hash);
    }
    std::istringstream split(text);
    words.clear();
    for (std::string w; split >> w;) words.push_back(w);
    if (!words.empty()) return true;
  }
  return false;
}

int to_int(const std::string& word, int line) {
  int value = 0;
  const char* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + word + "'");
  }
  return value;
}

std::vector<EdgeId> ids_after(const std::vector<std::string>& words,
                              std::size_t first, int line) {
  std::vector<EdgeId> ids;
  for (std::size_t i = first; i < words.size(); ++i) {
    ids.push_back(to_int(words[i], line));
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ParseError(line, "repeated edge id");
  }
  return ids;
}

void write_ids(std::ostream& out, const char* tag,
               const std::vector<EdgeId>& ids) {
  out << tag;
  for (EdgeId e : ids) out << ' ' << e;
  out << '\n';
}

EdgeSet edge_set(const MultiGraph& g, const std::vector<EdgeId>& ids) {
  for (EdgeId e : ids) {
    if (!g.has_edge(e)) {
      throw PreconditionError("certificate names missing edge " +
                              std::to_string(e));
    }
  }
  return EdgeSet(g, ids);
}

void require_kind(const Certificate& c, CertificateKind kind) {
  if (c.kind != kind) {
    throw PreconditionError(std::string("expected a ") + to_string(kind) +
                            " certificate, got " + to_string(c.kind));
  }
}

}  // namespace

std::string write_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "cubic " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.id << ' ' << e.a << ' ' << e.b << '\n';
  }
  return out.str();
}

MultiGraph read_graph(std::istream& in) {
  int line = 0;
  std::vector<std::string> words;
  if (!next_words(in, line, words)) throw ParseError(0, "empty graph file");
  if (words.size() != 3 || words[0] != "cubic") {
    throw ParseError(line, "expected 'cubic <n> <m>'");
  }
  const int n = to_int(words[1], line);
  const int m = to_int(words[2], line);
  if (n < 0 || m < 0) throw ParseError(line, "negative size");
  std::vector<std::pair<VertexId, VertexId>> ends(m, {-1, -1});
  std::vector<char> seen(m, 0);
  for (int k = 0; k < m; ++k) {
    if (!next_words(in, line, words)) {
      throw ParseError(0, "file ends after " + std::to_string(k) + " of " +
                              std::to_string(m) + " edges");
    }
    if (words.size() != 3) throw ParseError(line, "expected '<id> <u> <v>'");
    const int id = to_int(words[0], line);
    if (id < 0 || id >= m) throw ParseError(line, "edge id out of range");
    if (seen[id]) throw ParseError(line, "edge id listed twice");
    seen[id] = 1;
    ends[id] = {to_int(words[1], line), to_int(words[2], line)};
    if (ends[id].first < 0 || ends[id].first >= n || ends[id].second < 0 ||
        ends[id].second >= n) {
      throw ParseError(line, "endpoint out of range");
    }
  }
  if (next_words(in, line, words)) throw ParseError(line, "trailing content");
  return MultiGraph(n, ends);
}

MultiGraph read_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::fr_triple:
      return "fr-triple";
    case CertificateKind::covering:
      return "covering";
    case CertificateKind::ffamily:
      return "ffamily";
  }
  return "?";
}

std::string write_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "kind " << to_string(c.kind) << '\n';
  if (c.kind == CertificateKind::ffamily) {
    write_ids(out, "m", c.m);
    for (std::size_t i = 0; i < c.matchings.size(); ++i) {
      const std::string tag = std::string("member ") + "ABCD"[i % 4];
      write_ids(out, tag.c_str(), c.matchings[i]);
    }
    write_ids(out, "n", c.n);
  } else {
    for (const auto& ids : c.matchings) write_ids(out, "matching", ids);
  }
  return out.str();
}

Certificate read_certificate(std::istream& in) {
  int line = 0;
  std::vector<std::string> words;
  if (!next_words(in, line, words)) throw ParseError(0, "empty certificate");
  if (words.size() != 2 || words[0] != "kind") {
    throw ParseError(line, "expected 'kind <fr-triple|covering|ffamily>'");
  }
  Certificate c;
  if (words[1] == "fr-triple") {
    c.kind = CertificateKind::fr_triple;
  } else if (words[1] == "covering") {
    c.kind = CertificateKind::covering;
  } else if (words[1] == "ffamily") {
    c.kind = CertificateKind::ffamily;
  } else {
    throw ParseError(line, "unknown certificate kind '" + words[1] + "'");
  }
  bool have_m = false, have_n = false;
  while (next_words(in, line, words)) {
    const std::string& tag = words[0];
    if (c.kind != CertificateKind::ffamily && tag == "matching") {
      c.matchings.push_back(ids_after(words, 1, line));
    } else if (c.kind == CertificateKind::ffamily && tag == "m" && !have_m) {
      c.m = ids_after(words, 1, line);
      have_m = true;
    } else if (c.kind == CertificateKind::ffamily && tag == "n" && !have_n) {
      c.n = ids_after(words, 1, line);
      have_n = true;
    } else if (c.kind == CertificateKind::ffamily && tag == "member" &&
               words.size() >= 2 && words[1].size() == 1 &&
               words[1][0] == "ABCD"[c.matchings.size() % 4] &&
               c.matchings.size() < 4) {
      c.matchings.push_back(ids_after(words, 2, line));
    } else {
      throw ParseError(line, "unexpected '" + tag + "'");
    }
  }
  const std::size_t want = c.kind == CertificateKind::fr_triple  ? 3
                           : c.kind == CertificateKind::covering ? 6
                                                                 : 4;
  if (c.matchings.size() != want) {
    throw ParseError(0, std::string(to_string(c.kind)) + " needs " +
                            std::to_string(want) + " matchings, got " +
                            std::to_string(c.matchings.size()));
  }
  if (c.kind == CertificateKind::ffamily && (!have_m || !have_n)) {
    throw ParseError(0, "ffamily needs 'm' and 'n' lines");
  }
  return c;
}

Certificate read_certificate(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

Certificate certificate_of(const FRTriple& t) {
  Certificate c{CertificateKind::fr_triple, {}, {}, {}};
  for (const PerfectMatching& m : t.matchings()) c.matchings.push_back(m.ids());
  return c;
}

Certificate certificate_of(const FulkersonCovering& f) {
  Certificate c{CertificateKind::covering, {}, {}, {}};
  for (const PerfectMatching& m : f.matchings) c.matchings.push_back(m.ids());
  return c;
}

Certificate certificate_of(const FFamily& fam) {
  Certificate c{CertificateKind::ffamily, {}, fam.m.ids(), fam.n_edges.ids()};
  for (const Matching& x : fam.members) c.matchings.push_back(x.ids());
  return c;
}

FRTriple fr_triple_from_certificate(const MultiGraph& g, const Certificate& c) {
  require_kind(c, CertificateKind::fr_triple);
  return FRTriple(g, PerfectMatching(g, edge_set(g, c.matchings.at(0))),
                  PerfectMatching(g, edge_set(g, c.matchings.at(1))),
                  PerfectMatching(g, edge_set(g, c.matchings.at(2))));
}

FulkersonCovering covering_from_certificate(const MultiGraph& g,
                                            const Certificate& c) {
  require_kind(c, CertificateKind::covering);
  FulkersonCovering f;
  for (std::size_t i = 0; i < 6; ++i) {
    f.matchings[i] = PerfectMatching(g, edge_set(g, c.matchings.at(i)));
  }
  return f;
}

FFamily ffamily_from_certificate(const MultiGraph& g, const Certificate& c) {
  require_kind(c, CertificateKind::ffamily);
  FFamily fam{PerfectMatching(g, edge_set(g, c.m)), {},
              Matching(g, edge_set(g, c.n))};
  for (std::size_t i = 0; i < 4; ++i) {
    fam.members[i] = Matching(g, edge_set(g, c.matchings.at(i)));
  }
  return fam;
}

}  // namespace fulkerson
