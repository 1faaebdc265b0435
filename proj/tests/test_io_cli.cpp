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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fulkerson/cli.hpp"
#include "fulkerson/io.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace fulkerson;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("fulkerson_cli_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::filesystem::path path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("graph files round-trip") {
  for (const CubicGraph& g : {petersen(), theta(), goldberg(3),
                              doubled_matching_cycle(6)}) {
    const std::string text = write_graph(g);
    const MultiGraph back = read_graph(text);
    CHECK(back == g.graph());
    CHECK(write_graph(back) == text);
  }
  CHECK(read_graph("# comment\ncubic 2 3\n0 0 1\n1 0 1 # tail\n2 1 0\n").edge_count() == 3);
}

TEST_CASE("malformed graph files") {
  CHECK_THROWS_AS(read_graph(""), ParseError);
  CHECK_THROWS_AS(read_graph("cubic 2 3\n0 0 1\n1 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_graph("cubic 2 3\n0 0 1\n0 0 1\n2 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_graph("cubic 2 3\n0 0 1\n1 0 1\n2 0 5\n"), ParseError);
  CHECK_THROWS_AS(read_graph("cubic 2 3\n0 0 1\n1 0 1\n2 0 1\nextra\n"), ParseError);
  try {
    read_graph("cubic 2 3\n0 0 1\n1 x 1\n2 0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("certificates round-trip") {
  const CubicGraph p = petersen();
  const auto cov = find_fulkerson_covering(p, CoveringStrategy::automatic);
  const auto fam = find_ffamily(p);
  const auto tri = find_fr_triple(p);
  for (const Certificate& c : {certificate_of(*cov.value), certificate_of(*fam.value),
                               certificate_of(*tri.value)}) {
    const std::string text = write_certificate(c);
    CHECK(read_certificate(text) == c);
    CHECK(write_certificate(read_certificate(text)) == text);
  }
  CHECK(covering_from_certificate(p, certificate_of(*cov.value)) == *cov.value);
  CHECK(ffamily_from_certificate(p, certificate_of(*fam.value)) == *fam.value);
  CHECK(fr_triple_from_certificate(p, certificate_of(*tri.value)) == *tri.value);
  CHECK_THROWS_AS(read_certificate("kind covering\nmatching 0 1\n"), ParseError);
  CHECK_THROWS_AS(read_certificate("kind nothing\n"), ParseError);
}

TEST_CASE("cli gen") {
  const Run p = run({"gen", "petersen"});
  CHECK(p.code == 0);
  CHECK(read_graph(p.out).vertex_count() == 10);
  const Run f = run({"gen", "flower", "5"});
  CHECK(f.code == 0);
  CHECK(read_graph(f.out).vertex_count() == 20);
  CHECK(run({"gen", "flower", "4"}).code == 2);
  CHECK(run({"gen", "nonsense"}).code == 2);
  CHECK(run({"gen", "petersen", "3"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli verify") {
  TempDir dir;
  const std::string graph = dir.write("p.graph", run({"gen", "petersen"}).out);
  const Run s = run({"search", graph, "covering"});
  REQUIRE(s.code == 0);
  const std::string cert = dir.write("p.cert", s.out);
  const Run ok = run({"verify", graph, cert});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("proper: yes") != std::string::npos);

  Certificate c = read_certificate(s.out);
  c.matchings[1] = c.matchings[0];
  const Run bad = run({"verify", graph, dir.write("bad.cert", write_certificate(c))});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("covered 3 times") != std::string::npos);
  CHECK(bad.out.find("covered 1 times") != std::string::npos);

  const std::string text = s.out.substr(0, s.out.size() / 2);
  CHECK(run({"verify", graph, dir.write("cut.cert", text)}).code == 2);
  const std::string g = run({"gen", "petersen"}).out;
  CHECK(run({"verify", dir.write("cut.graph", g.substr(0, g.size() / 2)), cert}).code == 2);
  CHECK(run({"verify", graph, dir.write("npm.cert",
                                        "kind fr-triple\nmatching 0\nmatching 1\nmatching 2\n")})
            .code == 1);
}

TEST_CASE("cli search") {
  TempDir dir;
  const std::string graph = dir.write("p.graph", run({"gen", "petersen"}).out);
  for (const char* target : {"fr-triple", "covering", "ffamily"}) {
    const Run s = run({"search", graph, target});
    REQUIRE(s.code == 0);
    CHECK(run({"verify", graph, dir.write("c.cert", s.out)}).code == 0);
  }
  const std::string k4 = dir.write("k4.graph", run({"gen", "k4"}).out);
  CHECK(run({"search", k4, "ffamily"}).code == 1);
  const std::string j5 = dir.write("j5.graph", run({"gen", "flower", "5"}).out);
  const Run a = run({"search", j5, "covering", "--strategy", "a1a2"});
  CHECK(a.code == 0);
  CHECK(run({"verify", j5, dir.write("j5.cert", a.out)}).code == 0);
  CHECK(run({"search", j5, "ffamily", "--budget", "2"}).code == 3);
  CHECK(run({"search", j5, "covering", "--strategy", "magic"}).code == 2);
  CHECK(run({"search", j5, "triangle"}).code == 2);
  CHECK(run({"search", graph, "ffamily", "--all"}).code == 2);

  // Theta has coverings but none proper.
  const std::string th = dir.write("t.graph", run({"gen", "theta"}).out);
  const Run all = run({"search", th, "covering", "--all"});
  CHECK(all.code == 0);
  CHECK(all.err.find("coverings: ") != std::string::npos);
  CHECK(run({"search", th, "covering", "--proper"}).code == 1);

  const Run threaded = run({"search", j5, "ffamily", "--threads", "3"});
  CHECK(threaded.code == 0);
  CHECK(threaded.out == run({"search", j5, "ffamily"}).out);
}

TEST_CASE("cli budget from the environment") {
  TempDir dir;
  const std::string j5 = dir.write("j5.graph", run({"gen", "flower", "5"}).out);
  ::setenv("FULKERSON_LAB_BUDGET", "2", 1);
  CHECK(run({"search", j5, "ffamily"}).code == 3);
  CHECK(run({"search", j5, "ffamily", "--budget", "100000000"}).code == 0);
  ::setenv("FULKERSON_LAB_BUDGET", "lots", 1);
  CHECK(run({"gen", "k4"}).code == 2);
  ::unsetenv("FULKERSON_LAB_BUDGET");
}

TEST_CASE("cli pipeline") {
  TempDir dir;
  const std::string recipe = dir.write("r.txt", "base petersen\nstep type1 petersen\n");
  const auto out = dir.path() / "out";
  const Run r = run({"pipeline", recipe, "--out", out.string(), "--emit-intermediate"});
  REQUIRE(r.code == 0);
  const std::string graph = (out / "graph.txt").string();
  CHECK(run({"verify", graph, (out / "ffamily.cert").string()}).code == 0);
  CHECK(run({"verify", graph, (out / "covering.cert").string()}).code == 0);
  std::ifstream in(graph);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(read_graph(text.str()).vertex_count() == 18);
  CHECK(std::filesystem::exists(out / "stage_0.graph"));
  CHECK(std::filesystem::exists(out / "stage_1.graph"));

  const Run empty = run({"pipeline", dir.write("e.txt", "base petersen\n")});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("stage 0") != std::string::npos);

  // A spec whose e1 lies in N of the petersen family: find one.
  const CubicGraph p = petersen();
  const FFamily fam = *find_ffamily(p).value;
  const auto m2 = find_two_odd_cycle_matching(p);
  std::string bad_step;
  for (const auto& spec : enumerate_dot_product_specs(p, p)) {
    if (fam.n_edges.contains(spec.e1) && m2->contains(spec.e3)) {
      bad_step = "step type2 petersen e1=" + std::to_string(spec.e1) +
                 " e2=" + std::to_string(spec.e2) + " e3=" + std::to_string(spec.e3) +
                 " flip=" + std::to_string(spec.flip_e3) +
                 " swap_y=" + std::to_string(spec.swap_y) +
                 " swap_z=" + std::to_string(spec.swap_z) + "\n";
      break;
    }
  }
  REQUIRE_FALSE(bad_step.empty());
  const Run fail = run({"pipeline", dir.write("b.txt", "base petersen\n" + bad_step)});
  CHECK(fail.code == 1);
  CHECK(fail.err.find("step 1") != std::string::npos);

  CHECK(run({"pipeline", dir.write("x.txt", "step type1 petersen\n")}).code == 2);
  CHECK(run({"pipeline", dir.write("y.txt", "base flower 3\n")}).code == 2);
  CHECK(run({"pipeline", dir.write("z.txt", "base petersen\nstep type1 petersen e1=1\n")})
            .code == 2);
  CHECK(run({"pipeline", recipe, "--emit-intermediate"}).code == 2);
}

TEST_CASE("recipes") {
  const Recipe r = parse_recipe(
      "# two steps\nbase flower 5\nstep type2 petersen\n"
      "step type1 flower 5 e1=0 e2=2 e3=4 flip=1 swap_y=0 swap_z=1\n");
  CHECK(r.base.vertex_count() == 20);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].type == Preservation::type2);
  CHECK_FALSE(r.steps[0].spec.has_value());
  REQUIRE(r.steps[1].spec.has_value());
  CHECK(r.steps[1].spec->flip_e3);
  CHECK(r.steps[1].spec->swap_z);
  CHECK(r.steps[1].piece.vertex_count() == 20);
  CHECK_THROWS_AS(parse_recipe(""), ParseError);
  CHECK_THROWS_AS(parse_recipe("base petersen\nbase petersen\n"), ParseError);
  CHECK_THROWS_AS(parse_recipe("base petersen\nstep type1 petersen e9=1\n"), ParseError);
}

TEST_CASE("cli export") {
  TempDir dir;
  const std::string graph = dir.write("p.graph", run({"gen", "petersen"}).out);
  const std::string cert = dir.write("c.cert", run({"search", graph, "covering"}).out);
  const Run dot = run({"export", graph, "--format", "dot", "--cert", cert});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  // Every edge carries exactly two matching tags.
  std::istringstream lines(dot.out);
  int labelled = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    const std::string tags = line.substr(colon + 2, line.find('"', colon) - colon - 2);
    CHECK(std::count(tags.begin(), tags.end(), ',') == 1);
    ++labelled;
  }
  CHECK(labelled == 15);

  const Run json = run({"export", graph, "--format", "json"});
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["vertices"] == 10);
  CHECK(doc["adjacency"].size() == 10);
  CHECK(doc["adjacency"][0].size() == 3);
  CHECK(run({"export", graph, "--format", "svg"}).code == 2);
  CHECK(run({"export", dir.write("bad.graph", "cubic 1"), "--format", "dot"}).code == 2);
  CHECK(run({"export", run({"gen", "petersen"}).out, "--format", "dot"}).code == 2);
}
