#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qosc/cli.hpp"

namespace {

// Flags shared by the oscillator-solving subcommands.
void add_spec_options(CLI::App* cmd, qosc::RunConfig& config) {
  cmd->add_option("--q", config.q, "deformation parameter, q > 1");
  cmd->add_option("--Gamma", config.Gamma, "damping coefficient gamma/m");
  cmd->add_option("--omega", config.omega, "natural frequency sqrt(k/m)");
  cmd->add_option("--order", config.order, "series truncation order");
}

void add_solution_options(CLI::App* cmd, qosc::RunConfig& config) {
  cmd->add_option("--A", config.A_re, "coefficient of x1, real part");
  cmd->add_option("--A-im", config.A_im, "coefficient of x1, imaginary part");
  cmd->add_option("--B", config.B_re, "coefficient of x2, real part");
  cmd->add_option("--B-im", config.B_im, "coefficient of x2, imaginary part");
}

void add_grid_options(CLI::App* cmd, qosc::RunConfig& config) {
  cmd->add_option("--t0", config.t0, "grid start");
  cmd->add_option("--t1", config.t1, "grid end");
  cmd->add_option("--steps", config.steps, "grid steps");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed damped harmonic oscillator toolkit"};
  app.require_subcommand(1);
  qosc::RunConfig config;

  CLI::App* roots = app.add_subcommand("roots", "characteristic roots and regime");
  add_spec_options(roots, config);

  const std::map<std::string, qosc::ModulationKind> modulation_names{
      {"constant", qosc::ModulationKind::constant},
      {"qperiodic", qosc::ModulationKind::qperiodic}};

  CLI::App* solve = app.add_subcommand("solve", "sample a solution to CSV");
  add_spec_options(solve, config);
  add_solution_options(solve, config);
  add_grid_options(solve, config);
  solve->add_option("--modulation", config.modulation, "amplitude law: constant or qperiodic")
      ->transform(CLI::CheckedTransformer(modulation_names, CLI::ignore_case));
  solve->add_option("--amplitude", config.amplitude, "modulation amplitude");
  solve->add_option("--output", config.output, "output CSV path")->required();

  CLI::App* verify = app.add_subcommand("verify", "residual and Wronskian report");
  add_spec_options(verify, config);
  add_solution_options(verify, config);
  add_grid_options(verify, config);

  CLI::App* zeros = app.add_subcommand("zeros", "zeros of e_q(-omega t)");
  zeros->add_option("--q", config.q, "deformation parameter, q > 1");
  zeros->add_option("--omega", config.omega, "natural frequency");
  zeros->add_option("--count", config.count, "number of zeros");

  CLI::App* degenerate =
      app.add_subcommand("degenerate", "degenerate-root family diagnostics");
  degenerate->add_option("--q", config.q, "deformation parameter, q > 1");
  degenerate->add_option("--omega", config.omega, "repeated root magnitude");
  degenerate->add_option("--n", config.family_size, "root multiplicity");
  degenerate->add_option("--order", config.order, "series truncation order");

  CLI::App* riccati = app.add_subcommand("riccati", "sample the Riccati map to CSV");
  add_spec_options(riccati, config);
  add_solution_options(riccati, config);
  add_grid_options(riccati, config);
  riccati->add_option("--output", config.output, "output CSV path")->required();

  CLI::App* windows =
      app.add_subcommand("windows", "modulated solution on self-similar grids");
  add_spec_options(windows, config);
  add_solution_options(windows, config);
  windows->add_option("--points", config.steps, "points per window");
  windows->add_option("--scale", config.scales, "window scales (repeatable)");
  windows->add_option("--amplitude", config.amplitude, "modulation amplitude");
  windows->add_option("--output", config.output, "output CSV stem")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (roots->parsed()) config.command = qosc::Command::roots;
  if (solve->parsed()) config.command = qosc::Command::solve;
  if (verify->parsed()) config.command = qosc::Command::verify;
  if (zeros->parsed()) config.command = qosc::Command::zeros;
  if (degenerate->parsed()) config.command = qosc::Command::degenerate;
  if (riccati->parsed()) config.command = qosc::Command::riccati;
  if (windows->parsed()) config.command = qosc::Command::windows;

  return qosc::run(config, std::cout, std::cerr);
}
