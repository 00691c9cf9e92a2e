#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coase/cli/commands.hpp"
#include "coase/cli/config.hpp"

namespace {

void add_common(CLI::App* cmd, coase::cli::Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file (flags take precedence)");
  cmd->add_option("--v-low", o.v_low, "low valuation");
  cmd->add_option("--v-high", o.v_high, "high valuation");
  cmd->add_option("--delta", o.delta, "discount factor in (0, 1)");
  cmd->add_option("--mu0", o.mu0, "prior probability of the high valuation");
  cmd->add_option("--grid", o.grid_n, "uniform grid size for scans");
  cmd->add_option("--paths", o.mc_paths, "Monte Carlo paths");
  cmd->add_option("--seed", o.seed, "Monte Carlo seed");
  cmd->add_option("--out", o.output_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace coase::cli;
  CLI::App app{"Equilibrium solver for a durable-good seller without commitment"};
  app.require_subcommand(1);

  Overrides o;
  auto* solve = app.add_subcommand("solve", "cutoffs, mechanism and value table");
  auto* verify = app.add_subcommand("verify", "deviation scan and structure checks");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play of the price path");
  auto* sweep = app.add_subcommand("sweep", "analytic and simulated revenue over a prior grid");
  for (auto* cmd : {solve, verify, simulate, sweep}) add_common(cmd, o);
  verify->add_option("--priors", o.n_priors, "number of priors in [0.01, 0.99]");
  sweep->add_option("--priors", o.n_priors, "number of priors i/k, i < k");
  for (auto* cmd : {simulate, sweep}) cmd->add_option("--horizon", o.horizon, "periods before a path is cut off");
  simulate->add_option("--type-draw", o.type_draw, "low, high or prior");
  simulate->add_option("--paths-csv", o.paths_csv, "write every simulated step to this CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = resolve_config(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (*solve) return cmd_solve(cfg, std::cout, std::cerr);
  if (*verify) return cmd_verify(cfg, std::cout, std::cerr);
  if (*simulate) return cmd_simulate(cfg, std::cout, std::cerr);
  return cmd_sweep(cfg, std::cout, std::cerr);
}
