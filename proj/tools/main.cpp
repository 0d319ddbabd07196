// Command line front end for the 2WDP-SC solver.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pns/cli.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Bi-objective winner determination (2WDP-SC): Pareto neighborhood search,"
               " instance generation and approximation-set evaluation"};
  app.require_subcommand(1);

  std::string time_limit = "300s";
  std::string strategy = "3,6,9,2,4";

  auto* solve = app.add_subcommand("solve", "run the solver on an instance");
  pns::cli::solve_config solve_cfg;
  solve->add_option("--instance", solve_cfg.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--seed", solve_cfg.seed, "random seed");
  solve->add_option("--sectors", solve_cfg.sectors, "candidate-list sectors (s)");
  solve->add_option("--lmax", solve_cfg.l_max, "construction no-improvement limit");
  solve->add_option("--destroy-strategy", strategy, "destroy rates, e.g. 3,6,9,2,4");
  solve->add_option("--time-limit", time_limit, "improvement budget, e.g. 300s or 0s");
  solve->add_option("--out", solve_cfg.out_dir, "output directory");

  auto* evaluate = app.add_subcommand("evaluate", "score approximation sets");
  pns::cli::evaluate_config eval_cfg;
  std::string eval_out;
  std::string ref_front;
  evaluate->add_option("--instance", eval_cfg.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("sets", eval_cfg.set_paths, "approximation-set files")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--ref-front", ref_front,
                       "reference front file (default: union of the sets)");
  evaluate->add_option("--out", eval_out, "also write the CSV here");

  auto* generate = app.add_subcommand("generate", "write a synthetic instance");
  pns::cli::generate_config gen_cfg;
  std::string gen_out;
  generate->add_option("--contracts", gen_cfg.gen.contracts, "number of contracts");
  generate->add_option("--bids", gen_cfg.gen.bids, "number of bundle bids");
  generate->add_option("--carriers", gen_cfg.gen.carriers, "number of carriers");
  generate->add_option("--bundle-min", gen_cfg.gen.bundle_min, "smallest bundle size");
  generate->add_option("--bundle-max", gen_cfg.gen.bundle_max, "largest bundle size");
  generate->add_option("--gamma", gen_cfg.gen.gamma, "price synergy exponent in (0,1]");
  generate->add_option("--quality-min", gen_cfg.gen.quality_min, "lowest quality value");
  generate->add_option("--quality-max", gen_cfg.gen.quality_max, "highest quality value");
  generate->add_option("--seed", gen_cfg.gen.seed, "random seed");
  generate->add_option("--out", gen_out, "instance file to write");

  auto* ttt = app.add_subcommand("ttt", "time-to-target benchmark");
  pns::cli::ttt_config ttt_cfg;
  std::string ttt_limit = "180s";
  std::string ttt_out;
  ttt->add_option("--instance", ttt_cfg.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  ttt->add_option("--target-hv", ttt_cfg.target_hv, "target normalized hypervolume")
      ->required();
  ttt->add_option("--runs", ttt_cfg.runs, "number of independent runs");
  ttt->add_option("--time-limit", ttt_limit, "per-run censoring limit");
  ttt->add_option("--seed", ttt_cfg.base_seed, "base seed; run r uses seed+r");
  ttt->add_option("--jobs", ttt_cfg.jobs, "parallel workers");
  ttt->add_option("--sectors", ttt_cfg.sectors, "candidate-list sectors (s)");
  ttt->add_option("--lmax", ttt_cfg.l_max, "construction no-improvement limit");
  ttt->add_option("--destroy-strategy", strategy, "destroy rates, e.g. 3,6,9,2,4");
  ttt->add_option("--out", ttt_out, "also write the CSV here");

  auto* front = app.add_subcommand("front", "export the exact Pareto front (small instances)");
  pns::cli::front_config front_cfg;
  std::string front_out;
  front->add_option("--instance", front_cfg.instance_path, "instance file")
      ->required()
      ->check(CLI::ExistingFile);
  front->add_option("--bid-limit", front_cfg.bid_limit, "refuse instances with more bids");
  front->add_option("--out", front_out, "front file to write");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    solve_cfg.strategy = pns::cli::parse_destroy_strategy(strategy);
    solve_cfg.time_limit = pns::cli::parse_duration(time_limit);
    pns::cli::cmd_solve(solve_cfg, std::cout);
  } else if (evaluate->parsed()) {
    if (!ref_front.empty()) eval_cfg.ref_front_path = ref_front;
    if (!eval_out.empty()) eval_cfg.out_csv = eval_out;
    pns::cli::cmd_evaluate(eval_cfg, std::cout);
  } else if (generate->parsed()) {
    if (!gen_out.empty()) gen_cfg.out_path = gen_out;
    pns::cli::cmd_generate(gen_cfg, std::cout);
  } else if (ttt->parsed()) {
    ttt_cfg.strategy = pns::cli::parse_destroy_strategy(strategy);
    ttt_cfg.run_limit = pns::cli::parse_duration(ttt_limit);
    if (!ttt_out.empty()) ttt_cfg.out_csv = ttt_out;
    pns::cli::cmd_ttt(ttt_cfg, std::cout);
  } else if (front->parsed()) {
    if (!front_out.empty()) front_cfg.out_path = front_out;
    pns::cli::cmd_front(front_cfg, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
