#include "qosc/cli.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qosc/csv.hpp"
#include "qosc/degenerate.hpp"
#include "qosc/modulation.hpp"
#include "qosc/oscillator.hpp"
#include "qosc/riccati.hpp"
#include "qosc/special.hpp"
#include "qosc/timeseries.hpp"

namespace qosc {

namespace {

std::string format_complex(const Complex& z) {
  const double im = z.imag();
  return format_double(z.real()) + (im < 0.0 ? "-" : "+") + format_double(std::abs(im)) +
         "i";
}

OscillatorSpec make_spec(const RunConfig& config) {
  return OscillatorSpec(config.Gamma, config.omega, QParam(config.q));
}

SolutionBasis make_basis(const RunConfig& config) {
  SolutionBasis basis = build_basis(make_spec(config), config.order);
  basis.A = Complex(config.A_re, config.A_im);
  basis.B = Complex(config.B_re, config.B_im);
  return basis;
}

QSeries combined_series(const SolutionBasis& basis) {
  return basis.A * basis.x1 + basis.B * basis.x2;
}

void require_output(const RunConfig& config, const char* command) {
  if (config.output.empty()) {
    throw std::invalid_argument(std::string(command) + ": --output is required");
  }
}

std::string output_stem(const std::string& path) {
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return path.substr(0, path.size() - 4);
  }
  return path;
}

void cmd_roots(const RunConfig& config, std::ostream& out) {
  const RootPair roots = characteristic_roots(make_spec(config));
  switch (roots.regime) {
    case Regime::critical:
      out << "lambda = " << format_double(roots.lambda1.real())
          << " (double), regime=critical\n";
      break;
    case Regime::over:
      out << "lambda1 = " << format_double(roots.lambda1.real())
          << ", lambda2 = " << format_double(roots.lambda2.real()) << ", regime=over\n";
      break;
    case Regime::under:
      out << "lambda1 = " << format_complex(roots.lambda1)
          << ", lambda2 = " << format_complex(roots.lambda2)
          << ", regime=under, Omega = " << format_double(roots.Omega) << "\n";
      break;
  }
}

void cmd_solve(const RunConfig& config, std::ostream& out) {
  require_output(config, "solve");
  const SolutionBasis basis = make_basis(config);
  const ModulationSpec mod{config.modulation, config.amplitude};
  const auto f = modulate(combined_series(basis), mod);
  // The q-periodic amplitude is singular at t = 0, so its grid opens at t0.
  const bool include_start = config.modulation == ModulationKind::constant;
  const TimeSeriesOutput ts =
      sample_function(f, config.t0, config.t1, config.steps, include_start);
  write_csv(config.output, ts);
  out << "wrote " << config.output << " (" << ts.t.size() << " rows)\n";
}

void cmd_verify(const RunConfig& config, std::ostream& out) {
  const OscillatorSpec spec = make_spec(config);
  const SolutionBasis basis = build_basis(spec, config.order);
  out << "series residual x1 (rel) = " << format_double(relative_residual(spec, basis.x1))
      << "\n";
  out << "series residual x2 (rel) = " << format_double(relative_residual(spec, basis.x2))
      << "\n";
  const SolutionBasis weighted = make_basis(config);
  const auto f = [&weighted](double t) { return weighted.value(t); };
  double sampled_max = 0.0;
  int sampled_points = 0;
  for (int i = 1; i <= config.steps; ++i) {
    const double t = config.t0 + (config.t1 - config.t0) * static_cast<double>(i) /
                                     static_cast<double>(config.steps);
    if (!(t > 0.0)) continue;
    sampled_max = std::max(sampled_max, std::abs(sampled_residual(f, t, spec)));
    ++sampled_points;
  }
  out << "sampled residual max (" << sampled_points
      << " points) = " << format_double(sampled_max) << "\n";
  out << "wronskian at 0 = " << format_double(q_wronskian(basis, 0.0)) << "\n";
  if (basis.closed_form_radius) {
    const double radius = *basis.closed_form_radius;
    double diff_max = 0.0;
    for (int i = 1; i <= config.steps; ++i) {
      const double t = 0.95 * radius * static_cast<double>(i) /
                       static_cast<double>(config.steps);
      const double w_series = q_wronskian(basis, t);
      const double w_closed = wronskian_closed_form(spec, t);
      diff_max = std::max(diff_max, std::abs(w_series - w_closed) /
                                        std::max(std::abs(w_closed), 1e-300));
    }
    out << "wronskian closed-form max rel diff = " << format_double(diff_max) << "\n";
  }
  // The Riccati map needs a real-valued solution; skip the summary otherwise.
  if (config.A_im == 0.0 && config.B_im == 0.0) {
    const std::vector<RiccatiSample> samples = riccati_scan(
        combined_series(weighted), spec.Gamma, spec.omega, config.t0, config.t1,
        config.steps);
    double riccati_max = 0.0;
    for (const RiccatiSample& s : samples) {
      riccati_max = std::max(riccati_max, std::abs(s.residual));
    }
    out << "riccati residual max (" << samples.size() << " points, "
        << config.steps - static_cast<int>(samples.size())
        << " skipped) = " << format_double(riccati_max) << "\n";
  }
}

void cmd_zeros(const RunConfig& config, std::ostream& out) {
  const std::vector<double> zeros = eq_zeros(QParam(config.q), config.omega, config.count);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_double(zeros[i]);
  }
  out << "\n";
}

void cmd_degenerate(const RunConfig& config, std::ostream& out) {
  const DegenerateFamily family =
      degenerate_basis(config.omega, config.family_size, QParam(config.q), config.order);
  for (int k = 0; k < family.n; ++k) {
    const QSeries defect =
        apply_operator(family.omega, family.n, family.members[static_cast<std::size_t>(k)]);
    out << "member " << k << " = t^" << k << " (d/dt)^" << k
        << " e_q(-omega t): annihilation max |coeff| = "
        << format_double(max_abs_coeff(defect)) << "\n";
  }
  out << "generalized wronskian at 0 = "
      << format_double(generalized_wronskian_at_zero(family)) << "\n";
}

void cmd_riccati(const RunConfig& config, std::ostream& out) {
  require_output(config, "riccati");
  if (config.A_im != 0.0 || config.B_im != 0.0) {
    throw std::invalid_argument("riccati: A and B must be real");
  }
  const SolutionBasis basis = make_basis(config);
  const std::vector<RiccatiSample> samples = riccati_scan(
      combined_series(basis), config.Gamma, config.omega, config.t0, config.t1,
      config.steps);
  std::vector<std::vector<double>> rows;
  rows.reserve(samples.size());
  for (const RiccatiSample& s : samples) rows.push_back({s.t, s.y, s.residual});
  write_csv(config.output, {"t", "y", "residual"}, rows);
  out << "wrote " << config.output << " (" << rows.size() << " rows, "
      << config.steps - static_cast<int>(rows.size()) << " skipped near zeros of x)\n";
}

void cmd_windows(const RunConfig& config, std::ostream& out) {
  require_output(config, "windows");
  const SolutionBasis basis = make_basis(config);
  const ModulationSpec mod{ModulationKind::qperiodic, config.amplitude};
  const auto f = modulate(combined_series(basis), mod);
  const std::vector<TimeSeriesOutput> windows =
      self_similar_windows(f, config.scales, config.steps);
  const std::string stem = output_stem(config.output);
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const std::string path = stem + "_scale" + format_double(config.scales[i]) + ".csv";
    write_csv(path, windows[i]);
    out << "wrote " << path << " (" << windows[i].t.size() << " rows)\n";
  }
}

void validate(const RunConfig& config) {
  if (!(config.t0 < config.t1)) {
    throw std::invalid_argument("config: t0 must be < t1");
  }
  if (config.steps < 2) throw std::invalid_argument("config: steps must be >= 2");
  if (config.order < 2) throw std::invalid_argument("config: order must be >= 2");
}

void dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::roots:
      cmd_roots(config, out);
      return;
    case Command::solve:
      cmd_solve(config, out);
      return;
    case Command::verify:
      cmd_verify(config, out);
      return;
    case Command::zeros:
      cmd_zeros(config, out);
      return;
    case Command::degenerate:
      cmd_degenerate(config, out);
      return;
    case Command::riccati:
      cmd_riccati(config, out);
      return;
    case Command::windows:
      cmd_windows(config, out);
      return;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    dispatch(config, out);
    return 0;
  } catch (const TailGuardError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qosc
