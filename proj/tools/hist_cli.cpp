// hist_cli: condition reports, solving, verification, generators, oracle
// counts and sweeps. JSON on stdout; see docs/formats.md.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hist/cli.hpp"

int main(int argc, char** argv) {
  using namespace hist::cli;
  CLI::App app{"Homeomorphically irreducible spanning trees: decide, construct, verify."};
  app.require_subcommand(1);
  int code = kOk;

  std::string format;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "graph6 | edgelist (default: from the .g6/.el extension)");
  };

  std::string check_path;
  auto* check = app.add_subcommand("check", "degree/NC report and obstruction certificate");
  check->add_option("path", check_path, "graph file (- for stdin)")->required();
  add_format(check);
  check->callback([&] { code = cmd_check(check_path, format, std::cout, std::cerr); });

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "decide HIST existence and produce a tree");
  solve->add_option("path", sa.path, "graph file (- for stdin)")->required();
  add_format(solve);
  solve->add_option("--method", sa.method, "auto | constructive | exact | greedy")->capture_default_str();
  solve->add_option("--budget", sa.budget, "exact-search node budget")->capture_default_str();
  solve->add_option("--seed", sa.seed, "seed for the greedy relabelings")->capture_default_str();
  solve->add_flag("--timing", sa.timing, "include elapsed_ms in stats (output no longer byte-stable)");
  solve->add_flag("--verbose", sa.verbose, "human-readable summary on stderr");
  solve->callback([&] {
    sa.format = format;
    code = cmd_solve(sa, std::cout, std::cerr);
  });

  std::string graph_path, tree_path;
  auto* verify = app.add_subcommand("verify", "check that a tree file is a HIST of the graph");
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("tree", tree_path, "tree file, one \"u v\" edge per line")->required();
  add_format(verify);
  verify->callback([&] { code = cmd_verify(graph_path, tree_path, format, std::cout, std::cerr); });

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate a graph on stdout");
  gen->add_option("family", ga.family, "h1 | h2 | h3 | gnp | clique | fixture")->required();
  gen->add_option("--n", ga.n, "order")->required();
  gen->add_option("--p", ga.p, "edge probability (gnp)")->capture_default_str();
  gen->add_option("--seed", ga.seed, "SplitMix64 seed (gnp, fixture)")->capture_default_str();
  gen->add_flag("--coincide", ga.coincide, "h3: the two outside attachments of G2 coincide");
  gen->add_option("--kind", ga.kind, "fixture kind (see docs/formats.md)");
  gen->add_option("--format", ga.format, "edgelist | graph6")->capture_default_str();
  gen->callback([&] { code = cmd_gen(ga, std::cout, std::cerr); });

  std::string oracle_path;
  std::uint64_t cap = hist::kDefaultOracleCap;
  auto* oracle = app.add_subcommand("oracle", "count spanning trees and HISTs by enumeration");
  oracle->add_option("path", oracle_path, "graph file")->required();
  oracle->add_option("--cap", cap, "spanning-tree limit")->capture_default_str();
  add_format(oracle);
  oracle->callback([&] { code = cmd_oracle(oracle_path, format, cap, std::cout, std::cerr); });

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "batch runs: atlas, random fuzzing, H families");
  sweep->add_option("--mode", wa.mode, "atlas | random | families")->capture_default_str();
  sweep->add_option("--n-max", wa.n_max, "largest order")->capture_default_str();
  sweep->add_option("--samples", wa.samples, "random mode sample count")->capture_default_str();
  sweep->add_option("--seed", wa.seed, "random mode seed")->capture_default_str();
  sweep->add_option("--threads", wa.threads, "worker threads (0 = all cores)")->capture_default_str();
  sweep->add_option("--budget", wa.budget, "exact-search node budget")->capture_default_str();
  sweep->add_option("--cap", wa.cap, "oracle spanning-tree limit")->capture_default_str();
  sweep->callback([&] { code = cmd_sweep(wa, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  return code;
}
