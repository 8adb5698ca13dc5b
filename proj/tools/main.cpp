#include <CLI11.hpp>
#include <iostream>

#include "harness.hpp"

using nldg::harness::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Penalty DG solvers for 1D nonlocal diffusion and convection-diffusion"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  std::string alpha, N, mu, cfl, sigma, times, ref_N;

  app.add_option("--example", cfg.example, "1, 2, 3, 4i, 4ii or 5")->capture_default_str();
  app.add_option("--scheme", cfg.scheme, "nip, nnipg or nbz")->capture_default_str();
  app.add_option("--k", cfg.k, "polynomial degree")->capture_default_str();
  app.add_option("--alpha", alpha, "kernel exponent (example default if unset)");
  app.add_option("--delta", cfg.delta, "horizon: number, pi expression, 2.5h or sqrt_h");
  app.add_option("--N", N, "comma separated element counts");
  app.add_option("--mu", mu, "penalty constant c (mu = c/h, or c h^-(2k+1) for nbz)");
  app.add_option("--cfl", cfl, "tau = cfl * h (default 0.3/(2k+1))");
  app.add_option("--flux", cfg.flux, "upwind, lf or godunov");
  app.add_option("--sigma", sigma, "nonlocal diffusion coefficient");
  app.add_option("--output", cfg.output, "output CSV (stdout if omitted)");
  app.add_option("--seed", cfg.seed, "random seed for sampled estimates")->capture_default_str();
  app.add_option("--quantity", cfg.quantity, "verify: stability, c0, boundedness, poincare or all")
      ->capture_default_str();
  app.add_option("--times", times, "evolve: snapshot times (default final time)");
  app.add_option("--errors", cfg.errors_output, "evolve: write a convergence table over the N list");
  app.add_option("--ref-N", ref_N, "evolve: element count of the reference run");
  app.add_option("--tableau", cfg.tableau, "cfn64, ark436 or ark324")->capture_default_str();
  app.add_option("--trials", cfg.trials, "random samples for verify")->capture_default_str();

  for (const char* name : {"steady", "evolve", "verify", "ac-study"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("steady")->description("steady convergence table (examples 1, 2)");
  app.get_subcommand("evolve")->description("IMEX evolution with snapshots (examples 3, 4i, 4ii, 5)");
  app.get_subcommand("verify")->description("numerical checks of stability, C0, boundedness, Poincare");
  app.get_subcommand("ac-study")->description("delta = 2.5h and delta = sqrt(h) convergence tables");

  try {
    app.parse(argc, argv);
    using namespace nldg::harness;
    if (!alpha.empty()) cfg.alpha = parse_real(alpha);
    if (!N.empty()) cfg.Ns = parse_int_list(N);
    if (!mu.empty()) cfg.mu = parse_real(mu);
    if (!cfl.empty()) cfg.cfl = parse_real(cfl);
    if (!sigma.empty()) cfg.sigma = parse_real(sigma);
    if (!times.empty()) cfg.times = parse_real_list(times);
    if (!ref_N.empty()) cfg.ref_N = parse_int_list(ref_N).at(0);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return nldg::harness::run(cfg);
}
