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

#ifndef FULKERSON_IO_HPP_
#define FULKERSON_IO_HPP_

#include <istream>
#include <string>
#include <vector>

#include "fulkerson/covering.hpp"
#include "fulkerson/error.hpp"
#include "fulkerson/ffamily.hpp"
#include "fulkerson/graph.hpp"

namespace fulkerson {

// Malformed input text; carries the 1-based line number (0 = end of input).
class ParseError : public PreconditionError {
 public:
  ParseError(int line, const std::string& what)
      : PreconditionError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph file: "cubic <n> <m>" then one "<id> <u> <v>" line per edge, ids
// 0..m-1 each exactly once. '#' starts a comment.
std::string write_graph(const MultiGraph& g);
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph(const std::string& text);

enum class CertificateKind { fr_triple, covering, ffamily };

// Matchings as sorted edge-id lists. For fr-triple and covering they are
// the 3 or 6 members; for ffamily the members A..D, with m and n set.
struct Certificate {
  CertificateKind kind = CertificateKind::covering;
  std::vector<std::vector<EdgeId>> matchings;
  std::vector<EdgeId> m;
  std::vector<EdgeId> n;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

const char* to_string(CertificateKind kind);

std::string write_certificate(const Certificate& c);
Certificate read_certificate(std::istream& in);
Certificate read_certificate(const std::string& text);

Certificate certificate_of(const FRTriple& t);
Certificate certificate_of(const FulkersonCovering& f);
Certificate certificate_of(const FFamily& fam);

// Rebuild the object on g. Throw PreconditionError when a list is not a
// (perfect) matching of g or the kind does not match.
FRTriple fr_triple_from_certificate(const MultiGraph& g, const Certificate& c);
FulkersonCovering covering_from_certificate(const MultiGraph& g,
                                            const Certificate& c);
FFamily ffamily_from_certificate(const MultiGraph& g, const Certificate& c);

}  // namespace fulkerson

#endif  // FULKERSON_IO_HPP_
