#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qosc/modulation.hpp"

namespace qosc {

enum class Command { roots, solve, verify, zeros, degenerate, riccati, windows };

// Everything the command-line front end collects. Defaults describe the
// critically damped q = 2 oscillator.
struct RunConfig {
  Command command = Command::roots;
  double q = 2.0;
  double Gamma = 2.0;
  double omega = 1.0;
  double A_re = 1.0;
  double A_im = 0.0;
  double B_re = 1.0;
  double B_im = 0.0;
  double t0 = 0.0;
  double t1 = 10.0;
  int steps = 200;
  int order = 64;
  ModulationKind modulation = ModulationKind::constant;
  double amplitude = 1.0;
  int count = 4;
  int family_size = 3;
  std::vector<double> scales{0.5, 0.05};
  std::string output;
};

// Executes the command, writing results to out and diagnostics to err.
// Returns 0 on success, 2 on domain or argument errors, 3 when a series
// evaluation fails its truncation tail guard.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qosc
