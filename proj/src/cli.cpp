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

#include "fulkerson/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "fulkerson/io.hpp"
#include "json.hpp"

namespace fulkerson {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

CubicGraph load_graph(const std::string& path) {
  return CubicGraph(read_graph(slurp(path)));
}

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return kExitFound;
    case SearchStatus::budget_exhausted:
      return kExitBudget;
    default:
      return kExitAbsent;
  }
}

CubicGraph generate(const std::string& family, const std::vector<int>& params) {
  auto param = [&](const char* what) {
    if (params.size() != 1) {
      throw PreconditionError(family + " takes one parameter: " + what);
    }
    return params[0];
  };
  auto none = [&] {
    if (!params.empty()) throw PreconditionError(family + " takes no parameters");
  };
  if (family == "petersen") return none(), petersen();
  if (family == "flower") return flower_snark(param("odd k >= 3"));
  if (family == "goldberg") return goldberg(param("odd k >= 3"));
  if (family == "theta") return none(), theta();
  if (family == "k4") return none(), k4();
  if (family == "k33") return none(), k33();
  if (family == "cube") return none(), cube_q3();
  if (family == "doubled") return doubled_matching_cycle(param("even m >= 4"));
  if (family == "ten-c5") return none(), ten_vertex_c5_example();
  if (family == "petersen-blowup") {
    none();
    return dot_blowup(petersen(), {5, 6, 7, 8, 9}, petersen(), {5, 7});
  }
  throw PreconditionError("unknown family '" + family + "'");
}

CubicGraph recipe_graph(const std::vector<std::string>& words, std::size_t at,
                        int line) {
  if (at < words.size() && words[at] == "petersen") return petersen();
  if (at + 1 < words.size() && words[at] == "flower") {
    int k = 0;
    try {
      k = std::stoi(words[at + 1]);
    } catch (const std::exception&) {
      throw ParseError(line, "bad flower parameter");
    }
    if (k < 5 || k % 2 == 0) throw ParseError(line, "flower needs odd k >= 5");
    return flower_snark(k);
  }
  throw ParseError(line, "expected 'petersen' or 'flower <k>'");
}

}  // namespace

Recipe parse_recipe(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<Recipe> recipe;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream split(raw);
    std::vector<std::string> words;
    for (std::string w; split >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words[0] == "base") {
      if (recipe) throw ParseError(line, "second 'base' line");
      if (words.size() != (words.size() > 1 && words[1] == "flower" ? 3u : 2u)) {
        throw ParseError(line, "expected 'base petersen' or 'base flower <k>'");
      }
      recipe = Recipe{recipe_graph(words, 1, line), {}};
      continue;
    }
    if (words[0] != "step") throw ParseError(line, "unknown line '" + words[0] + "'");
    if (!recipe) throw ParseError(line, "'step' before 'base'");
    if (words.size() < 3) throw ParseError(line, "incomplete step");
    DotStep step;
    if (words[1] == "type1") {
      step.type = Preservation::type1;
    } else if (words[1] == "type2") {
      step.type = Preservation::type2;
    } else {
      throw ParseError(line, "step type must be type1 or type2");
    }
    step.piece = recipe_graph(words, 2, line);
    std::map<std::string, int> keys;
    for (std::size_t i = words[2] == "flower" ? 4 : 3; i < words.size(); ++i) {
      const auto eq = words[i].find('=');
      if (eq == std::string::npos) throw ParseError(line, "expected key=value");
      const std::string key = words[i].substr(0, eq);
      if (key != "e1" && key != "e2" && key != "e3" && key != "flip" &&
          key != "swap_y" && key != "swap_z") {
        throw ParseError(line, "unknown key '" + key + "'");
      }
      try {
        keys[key] = std::stoi(words[i].substr(eq + 1));
      } catch (const std::exception&) {
        throw ParseError(line, "bad value for " + key);
      }
    }
    const int named = static_cast<int>(keys.count("e1") + keys.count("e2") +
                                       keys.count("e3"));
    if (named == 3) {
      step.spec = DotProductSpec{keys["e1"], keys["e2"], keys["e3"],
                                 keys["flip"] != 0, keys["swap_y"] != 0,
                                 keys["swap_z"] != 0};
    } else if (named != 0 || !keys.empty()) {
      throw ParseError(line, "give all of e1, e2, e3 or none of the keys");
    }
    recipe->steps.push_back(std::move(step));
  }
  if (!recipe) throw ParseError(0, "recipe has no 'base' line");
  return std::move(*recipe);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fulkerson coverings, FR-triples and F-families of cubic graphs",
               "fulkerson_lab"};
  app.require_subcommand(1);

  std::uint64_t budget = kDefaultNodeBudget;
  if (const char* env = std::getenv("FULKERSON_LAB_BUDGET")) {
    try {
      budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "FULKERSON_LAB_BUDGET is not a number\n";
      return kExitUsage;
    }
  }

  std::string family;
  std::vector<int> params;
  auto* gen = app.add_subcommand("gen", "Print a graph file");
  gen->add_option("family", family,
                  "petersen, flower k, goldberg k, theta, k4, k33, cube, "
                  "doubled m, ten-c5, petersen-blowup")
      ->required();
  gen->add_option("params", params, "Family parameters");

  std::string graph_path, cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("certificate", cert_path)->required();

  std::string target, strategy = "auto";
  bool all = false, proper = false;
  unsigned threads = 1;
  std::size_t limit = 1000;
  auto* search = app.add_subcommand("search", "Search for a certificate");
  search->add_option("graph", graph_path)->required();
  search->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"fr-triple", "covering", "ffamily"}));
  search->add_option("--strategy", strategy, "color, exact2cover, a1a2, auto");
  search->add_option("--budget", budget, "Search node budget");
  search->add_flag("--all", all, "Every covering (as multisets of matchings)");
  search->add_flag("--proper", proper, "Coverings by six distinct matchings");
  search->add_option("--limit", limit, "Cap for --all");
  search->add_option("--threads", threads)->check(CLI::Range(1u, 256u));

  std::string recipe_path, out_dir;
  bool emit = false;
  auto* pipeline = app.add_subcommand("pipeline", "Run a dot-product recipe");
  pipeline->add_option("recipe", recipe_path)->required();
  pipeline->add_option("--out", out_dir, "Directory for the artifacts");
  pipeline->add_flag("--emit-intermediate", emit,
                     "Also write every intermediate graph (needs --out)");
  pipeline->add_option("--budget", budget, "Search node budget");

  std::string format;
  auto* exporter = app.add_subcommand("export", "Render a graph as DOT or JSON");
  exporter->add_option("graph", graph_path)->required();
  exporter->add_option("--format", format)
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("--cert", cert_path, "Annotate edges with a certificate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  SearchLimits limits;
  limits.node_budget = budget;
  limits.threads = threads;

  try {
    if (gen->parsed()) {
      out << write_graph(generate(family, params));
      return kExitFound;
    }

    if (verify->parsed()) {
      const CubicGraph g = load_graph(graph_path);
      const Certificate cert = read_certificate(slurp(cert_path));
      try {
        switch (cert.kind) {
          case CertificateKind::covering: {
            const FulkersonCovering f = covering_from_certificate(g, cert);
            const CoverageReport report = verify_covering(g, f);
            for (EdgeId e : report.wrong) {
              out << "edge " << e << " covered " << report.coverage[e]
                  << " times\n";
            }
            out << "covering: " << (report.ok ? "valid" : "invalid")
                << ", proper: " << (is_proper(f) ? "yes" : "no") << '\n';
            return report.ok ? kExitFound : kExitAbsent;
          }
          case CertificateKind::fr_triple: {
            const FRTriple t = fr_triple_from_certificate(g, cert);
            const TPartition p = t_partition(g, t);
            out << "fr-triple: valid, |T0| = " << p.t0.size()
                << ", |T1| = " << p.t1.size() << ", |T2| = " << p.t2.size()
                << '\n';
            return kExitFound;
          }
          case CertificateKind::ffamily: {
            const FFamily fam = ffamily_from_certificate(g, cert);
            const FFamilyReport report = verify_ffamily(g, fam);
            for (const FamilyProblem& p : report.problems) {
              out << (p.cycle >= 0 ? "cycle " + std::to_string(p.cycle)
                                   : std::string("family"))
                  << ": condition " << p.condition << ": " << p.detail << '\n';
            }
            out << "ffamily: " << (report.ok ? "valid" : "invalid") << '\n';
            return report.ok ? kExitFound : kExitAbsent;
          }
        }
      } catch (const ParseError&) {
        throw;
      } catch (const PreconditionError& e) {
        out << "certificate invalid: " << e.what() << '\n';
        return kExitAbsent;
      }
    }

    if (search->parsed()) {
      const CubicGraph g = load_graph(graph_path);
      const CoveringStrategy how = parse_strategy(strategy);
      if ((all || proper) && target != "covering") {
        err << "--all and --proper apply to covering searches only\n";
        return kExitUsage;
      }
      SearchStatus status = SearchStatus::absent;
      std::uint64_t nodes = 0;
      if (target == "fr-triple") {
        const auto r = find_fr_triple(g, limits);
        if (r.value) out << write_certificate(certificate_of(*r.value));
        status = r.status;
        nodes = r.nodes;
      } else if (target == "ffamily") {
        const auto r = find_ffamily(g, std::nullopt, limits);
        if (r.value) out << write_certificate(certificate_of(*r.value));
        status = r.status;
        nodes = r.nodes;
      } else if (all || proper) {
        const auto r = all_fulkerson_coverings(g, proper, all ? limit : 1, limits);
        for (std::size_t i = 0; i < r.value->size(); ++i) {
          if (i > 0) out << '\n';
          out << write_certificate(certificate_of((*r.value)[i]));
        }
        status = r.status;
        nodes = r.nodes;
        err << "coverings: " << r.value->size() << '\n';
      } else {
        const auto r = find_fulkerson_covering(g, how, limits);
        if (r.value) out << write_certificate(certificate_of(*r.value));
        status = r.status;
        nodes = r.nodes;
        if (!r.note.empty()) err << r.note << '\n';
      }
      err << target << ": " << to_string(status) << " (" << nodes
          << " nodes)\n";
      return exit_for(status);
    }

    if (pipeline->parsed()) {
      if (emit && out_dir.empty()) {
        err << "--emit-intermediate needs --out\n";
        return kExitUsage;
      }
      const Recipe recipe = parse_recipe(slurp(recipe_path));
      std::vector<DotStage> stages;
      try {
        stages = iterate_dot_sequence(recipe.base, recipe.steps, limits);
      } catch (const DotStepError& e) {
        err << e.what() << '\n';
        return kExitAbsent;
      }
      for (std::size_t i = 0; i < stages.size(); ++i) {
        const DotStage& s = stages[i];
        out << "# stage " << i << ": n = " << s.graph.vertex_count()
            << ", m = " << s.graph.edge_count();
        if (s.spec) {
          out << ", spec e1=" << s.spec->e1 << " e2=" << s.spec->e2
              << " e3=" << s.spec->e3 << " flip=" << s.spec->flip_e3
              << " swap_y=" << s.spec->swap_y << " swap_z=" << s.spec->swap_z;
        }
        out << ", family and covering verified\n";
      }
      const DotStage& last = stages.back();
      if (out_dir.empty()) {
        out << write_graph(last.graph) << '\n'
            << write_certificate(certificate_of(last.family)) << '\n'
            << write_certificate(certificate_of(last.covering));
        return kExitFound;
      }
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      spill(dir / "graph.txt", write_graph(last.graph));
      spill(dir / "ffamily.cert", write_certificate(certificate_of(last.family)));
      spill(dir / "covering.cert",
            write_certificate(certificate_of(last.covering)));
      if (emit) {
        for (std::size_t i = 0; i < stages.size(); ++i) {
          const std::string stem = "stage_" + std::to_string(i);
          spill(dir / (stem + ".graph"), write_graph(stages[i].graph));
          spill(dir / (stem + ".ffamily.cert"),
                write_certificate(certificate_of(stages[i].family)));
          spill(dir / (stem + ".covering.cert"),
                write_certificate(certificate_of(stages[i].covering)));
        }
      }
      return kExitFound;
    }

    if (exporter->parsed()) {
      const MultiGraph g = read_graph(slurp(graph_path));
      std::optional<Certificate> cert;
      if (!cert_path.empty()) {
        cert = read_certificate(slurp(cert_path));
        const auto check = [&](const std::vector<EdgeId>& ids) {
          for (EdgeId e : ids) {
            if (!g.has_edge(e)) throw ParseError(0, "certificate edge out of range");
          }
        };
        for (const auto& ids : cert->matchings) check(ids);
        check(cert->m);
        check(cert->n);
      }
      // Tags per edge: matching numbers, or for a family its member letter
      // plus M and N.
      std::vector<std::vector<std::string>> tags(g.edge_count());
      if (cert) {
        const bool fam = cert->kind == CertificateKind::ffamily;
        for (std::size_t i = 0; i < cert->matchings.size(); ++i) {
          const std::string tag =
              fam ? std::string(1, "ABCD"[i]) : "M" + std::to_string(i + 1);
          for (EdgeId e : cert->matchings[i]) tags[e].push_back(tag);
        }
        for (EdgeId e : cert->m) tags[e].insert(tags[e].begin(), "M");
        for (EdgeId e : cert->n) tags[e].push_back("N");
      }
      if (format == "dot") {
        out << "graph G {\n";
        for (const Edge& e : g.edges()) {
          std::string label = "e" + std::to_string(e.id);
          for (std::size_t i = 0; i < tags[e.id].size(); ++i) {
            label += (i == 0 ? ": " : ",") + tags[e.id][i];
          }
          out << "  " << e.a << " -- " << e.b << " [label=\"" << label
              << "\"];\n";
        }
        out << "}\n";
      } else {
        nlohmann::json doc;
        doc["vertices"] = g.vertex_count();
        doc["edges"] = nlohmann::json::array();
        for (const Edge& e : g.edges()) {
          nlohmann::json item{{"id", e.id}, {"u", e.a}, {"v", e.b}};
          if (cert) item["tags"] = tags[e.id];
          doc["edges"].push_back(item);
        }
        doc["adjacency"] = nlohmann::json::array();
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          nlohmann::json row = nlohmann::json::array();
          for (EdgeId e : g.incident(v)) row.push_back(g.other_end(e, v));
          doc["adjacency"].push_back(row);
        }
        if (cert) {
          doc["certificate"] = {{"kind", to_string(cert->kind)},
                                {"matchings", cert->matchings}};
          if (cert->kind == CertificateKind::ffamily) {
            doc["certificate"]["m"] = cert->m;
            doc["certificate"]["n"] = cert->n;
          }
        }
        out << doc.dump(2) << '\n';
      }
      return kExitFound;
    }
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fulkerson
