// Command-line front end: solve, dump families, validate, generate, oracles.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <string>

#include "p6mwis/capture.hpp"
#include "p6mwis/generators.hpp"
#include "p6mwis/induced_path.hpp"
#include "p6mwis/io.hpp"
#include "p6mwis/segments.hpp"
#include "p6mwis/separators.hpp"
#include "p6mwis/solver.hpp"

using namespace p6mwis;
using nlohmann::json;

namespace {

Graph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  return parse_graph(in);
}

json family_json(const std::string& lemma, const SetFamily& f) {
  json members = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) members.push_back({{"set", ids_json(f[i])}, {"tag", f.tag(i)}});
  return {{"lemma", lemma}, {"size", f.size()}, {"members", members}};
}

json sets_json(const std::vector<VertexSet>& sets) {
  json a = json::array();
  for (const auto& s : sets) a.push_back(ids_json(s));
  return a;
}

/// Families that can be dumped by name. Parameterized families use the
/// one-in-three family as X, as the summary construction does.
std::map<std::string, std::function<SetFamily(const Graph&, WorkBudget*)>> lemma_table() {
  return {
      {"two-not-whole", [](const Graph& g, WorkBudget*) { return family_two_not_whole(g); }},
      {"one-in-three-see", [](const Graph& g, WorkBudget*) { return family_one_in_three(g); }},
      {"non-clique-see", [](const Graph& g, WorkBudget*) { return family_nonmesh_sticking(g, family_one_in_three(g)); }},
      {"capture-nonmesh", [](const Graph& g, WorkBudget*) { return family_nonmesh_pair(g); }},
      {"capture-mesh-nomesh", [](const Graph& g, WorkBudget*) { return family_mesh_fuzzy_nonmesh(g); }},
      {"mesh-see-sticking",
       [](const Graph& g, WorkBudget*) { return family_mesh_fuzzy_sticking(g, family_one_in_three(g)); }},
      {"monster", [](const Graph& g, WorkBudget* b) { return family_monster(g, family_one_in_three(g), b); }},
      {"Omplus", [](const Graph& g, WorkBudget*) { return family_omplus(g); }},
      {"summary", [](const Graph& g, WorkBudget* b) { return family_summary(g, b).f9_1; }},
      {"see-hidden", [](const Graph& g, WorkBudget*) { return hidden_families(g).s_hidden; }},
      {"see-pmc-hidden", [](const Graph& g, WorkBudget*) { return hidden_families(g).f_hidden; }},
      {"f-i", [](const Graph& g, WorkBudget*) { return f_I_family(g); }},
      {"separators", [](const Graph& g, WorkBudget* b) { return separator_family_S(g, b); }},
      {"segments",
       [](const Graph& g, WorkBudget* b) {
         return family_FX(g, components_of_separators(g, separator_family_S(g, b)), b);
       }},
      {"final",
       [](const Graph& g, WorkBudget* b) {
         SetFamily out;
         for (const auto& comp : components(g))
           for (const auto& om : assemble_family(g.induced(comp), b).pmcs) out.insert(om, "pmc");
         return out;
       }},
  };
}

int run(int argc, char** argv) {
  CLI::App app{"Maximum weight independent set on P6-free graphs"};
  app.require_subcommand(1);

  std::string input, mode_name = "paper", lemma, kind = "cograph", which;
  std::uint64_t budget = WorkBudget::kDefault, seed = 1;
  bool validate = false, connected = false;
  int n = 8;
  double p = 0.5;
  Weight max_weight = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Solve MWIS for a graph file");
  solve_cmd->add_option("--input", input, "Graph file")->required();
  solve_cmd->add_option("--mode", mode_name, "brute, oracle or paper")->check(CLI::IsMember({"brute", "oracle", "paper"}));
  solve_cmd->add_option("--budget", budget, "Work budget for paper mode");
  solve_cmd->add_flag("--validate-p6", validate, "Warn if the input has an induced P6 in any mode");

  auto table = lemma_table();
  std::vector<std::string> names;
  for (const auto& [k, v] : table) names.push_back(k);
  auto* fam_cmd = app.add_subcommand("families", "Dump one candidate family");
  fam_cmd->add_option("--input", input, "Graph file")->required();
  fam_cmd->add_option("--lemma", lemma, "Family name")->required()->check(CLI::IsMember(names));
  fam_cmd->add_option("--budget", budget, "Work budget");

  auto* p6_cmd = app.add_subcommand("check-p6", "Look for an induced P6");
  p6_cmd->add_option("--input", input, "Graph file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a P6-free graph");
  gen_cmd->add_option("--kind", kind, "cograph, split or reject")->check(CLI::IsMember({"cograph", "split", "reject"}));
  gen_cmd->add_option("--n", n, "Vertex count")->check(CLI::Range(1, kMaxVertices));
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--p", p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--max-weight", max_weight, "Weights drawn from 1..max")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--connected", connected, "Resample until connected");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive PMC or minimal separator listing");
  oracle_cmd->add_option("which", which, "pmcs or seps")->required()->check(CLI::IsMember({"pmcs", "seps"}));
  oracle_cmd->add_option("--input", input, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*solve_cmd) {
    Graph g = load(input);
    SolveOptions opt;
    opt.budget = budget;
    SolveMode mode = *parse_mode(mode_name);
    Solution s = solve(g, mode, opt);
    // Paper mode always validates; the flag extends the check to other modes.
    if (validate && mode != SolveMode::Paper)
      if (auto path = find_induced_path(g, 6)) {
        std::string w = "input contains an induced P6:";
        for (Vertex v : *path) w += " " + std::to_string(v + 1);
        s.warnings.push_back(w);
      }
    json out = {{"weight", s.weight},
                {"solution", ids_json(s.vertices)},
                {"mode", s.mode},
                {"stats",
                 {{"family_sizes", s.family_sizes},
                  {"pmc_count", s.pmc_count},
                  {"elapsed_ms", static_cast<long long>(s.elapsed_ms)}}},
                {"warnings", s.warnings}};
    std::cout << out.dump(2) << "\n";
  } else if (*fam_cmd) {
    Graph g = load(input);
    WorkBudget b;
    b.limit = budget;
    std::cout << family_json(lemma, table.at(lemma)(g, &b)).dump(2) << "\n";
  } else if (*p6_cmd) {
    Graph g = load(input);
    auto path = find_induced_path(g, 6);
    json out = {{"p6_free", !path.has_value()}};
    if (path) {
      json a = json::array();
      for (Vertex v : *path) a.push_back(v + 1);
      out["path"] = a;
    }
    std::cout << out.dump(2) << "\n";
  } else if (*gen_cmd) {
    auto make = [&](std::uint64_t s) {
      if (kind == "cograph") return gen_cograph(s, n, p, max_weight);
      if (kind == "split") return gen_split(s, n, p, max_weight);
      return gen_rejection_p6free(s, n, p, max_weight);
    };
    std::cout << emit_graph(connected ? connected_sample(seed, make) : make(seed));
  } else if (*oracle_cmd) {
    Graph g = load(input);
    auto sets = which == "pmcs" ? enumerate_all_pmcs_exhaustive(g).sorted() : enumerate_minimal_separators_exhaustive(g);
    std::cout << json{{which, sets_json(sets)}, {"count", sets.size()}}.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::Invariant);
  }
}
