#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

namespace cli = girthlift::cli;

namespace {

void add_lift_options(CLI::App& cmd, cli::RunConfig& cfg) {
  cmd.add_option("--tree", cfg.tree, "Spanning tree strategy")->check(CLI::IsMember({"bfs", "dfs"}));
  cmd.add_option("--root", cfg.root, "Spanning tree root vertex");
  cmd.add_option("--max-vertices", cfg.max_vertices, "Cap on lifted vertex count (env GIRTHLIFT_MAX_VERTICES)");
}

}  // namespace

int main(int argc, char** argv) {
  cli::RunConfig cfg;
  cfg.max_vertices = cli::default_max_vertices();

  CLI::App app{"girthlift: spanning-tree lifts of high-girth graphs and their cut embeddings into l1"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a base graph as an edge list");
  gen->add_option("--family", cfg.family,
                  "petersen|heawood|mcgee|pappus|tutte_coxeter|k4|cycle:N|complete:N|random:N:K")
      ->required();
  gen->add_option("--girth-min", cfg.girth_min, "Girth floor for random:N:K");
  gen->add_option("--seed", cfg.seed, "Seed for random generation");
  gen->add_option("--max-tries", cfg.max_tries, "Attempts before random generation gives up");
  gen->add_option("-o,--output", cfg.output, "Edge-list output path (default stdout)");

  auto* lift = app.add_subcommand("lift", "Materialize the lift as an edge list plus a vertex mapping");
  lift->add_option("-i,--input", cfg.input, "Base graph edge list")->required();
  lift->add_option("-o,--output", cfg.output, "Lifted edge-list output path (default stdout)");
  lift->add_option("--map", cfg.map_output, "Write 'lifted_id base_vertex label_bits' lines here");
  add_lift_options(*lift, cfg);

  auto* analyze = app.add_subcommand("analyze", "Measure distortion of F and sweep the lemma checks");
  analyze->add_option("-i,--input", cfg.input, "Base graph edge list")->required();
  analyze->add_option("-o,--output", cfg.output, "Report path (default stdout)");
  analyze->add_option("--pairs", cfg.pairs, "exhaustive | sample:N (default: exhaustive below 10^4 lifted vertices)");
  analyze->add_option("--seed", cfg.seed, "Seed for pair sampling");
  analyze->add_option("--format", cfg.format, "Report format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, cli::ReportFormat>{
          {"json", cli::ReportFormat::json}, {"csv", cli::ReportFormat::csv}}));
  add_lift_options(*analyze, cfg);

  auto* verify = app.add_subcommand("verify", "Run the full property battery over the built-in instance matrix");
  verify->add_option("-o,--output", cfg.output, "Report path (default stdout)");
  verify->add_option("--pairs", cfg.pairs, "exhaustive | sample:N");
  verify->add_option("--seed", cfg.seed, "Seed for sampling and random instances");
  verify->add_flag("--inject-fault", cfg.inject_fault, "Perturb one lifted matching per instance (self-test)");
  add_lift_options(*verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  return cli::run(cfg, std::cout, std::cerr);
}
