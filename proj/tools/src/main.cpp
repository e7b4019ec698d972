#include <iostream>

#include "CLI11.hpp"
#include "expvote/errors.hpp"
#include "harness/commands.hpp"
#include "harness/config.hpp"

int main(int argc, char** argv) {
  harness::RunConfig cfg;

  CLI::App app{"equilibrium solver and Monte Carlo laboratory for the "
               "collective-experimentation voting game"};
  app.fallthrough();  // global options may follow the subcommand name
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);  // unknown keys are parse errors

  app.add_option("--q0", cfg.params.q0, "prior Pr(state H)")->capture_default_str();
  app.add_option("--rho-h", cfg.params.rho_h, "Pr(good type | H)")->capture_default_str();
  app.add_option("--rho-l", cfg.params.rho_l, "Pr(good type | L)")->capture_default_str();
  app.add_option("--lambda", cfg.params.lambda, "lump-sum arrival intensity")
      ->capture_default_str();
  app.add_option("--r", cfg.params.r, "discount rate")->capture_default_str();
  app.add_option("--s", cfg.params.s, "safe flow payoff")->capture_default_str();
  app.add_option("--z", cfg.params.z, "lump-sum magnitude")->capture_default_str();
  app.add_option("--k", cfg.k, "quorum threshold fraction in (0,1]")
      ->capture_default_str();
  app.add_option("--n", cfg.n, "number of agents")->capture_default_str();
  app.add_option("--seed", cfg.seed, "64-bit simulation seed")->capture_default_str();
  app.add_option("--replicates", cfg.replicates, "Monte Carlo replicates per state")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "relative solver tolerance")->capture_default_str();
  app.add_option("--t1", cfg.t1, "probe time for reversible runs (default: cutoff/2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--n-list", cfg.n_list, "agent counts for converge")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--grid", cfg.grid_points, "sweep grid points, k_i = i/grid")
      ->capture_default_str();
  app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  app.add_flag("--svg", cfg.svg, "emit SVG charts next to the CSVs");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)")
      ->capture_default_str();

  auto* validate_cmd =
      app.add_subcommand("validate", "check the standing assumptions, print margins");
  auto* solve_cmd = app.add_subcommand("solve", "solve the finite-n cut-off t_hat");
  auto* sweep_cmd =
      app.add_subcommand("sweep", "limit cut-offs and winner fractions over a k grid");
  auto* converge_cmd =
      app.add_subcommand("converge", "finite-n cut-offs against the limit over n-list");
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo aggregation estimate at the solved cut-off");
  auto* reversible_cmd = app.add_subcommand(
      "reversible", "Monte Carlo of the reversible probe profile");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? harness::kExitOk : harness::kExitConfig;
  }

  try {
    if (*validate_cmd) return harness::cmd_validate(cfg, std::cout);
    if (*solve_cmd) return harness::cmd_solve(cfg, std::cout);
    if (*sweep_cmd) return harness::cmd_sweep(cfg, std::cout);
    if (*converge_cmd) return harness::cmd_converge(cfg, std::cout);
    if (*simulate_cmd) return harness::cmd_simulate(cfg, std::cout);
    if (*reversible_cmd) return harness::cmd_reversible(cfg, std::cout);
  } catch (const expvote::ValidationError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return harness::kExitAssumptions;
  } catch (const expvote::InvalidT1& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return harness::kExitComputation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return harness::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return harness::kExitComputation;
  }
  return harness::kExitConfig;
}
