#include "qosc/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qosc {

double qperiodic_sin(double t, const QParam& q) {
  if (!(t > 0.0)) throw std::domain_error("qperiodic_sin: requires t > 0");
  return std::sin(2.0 * std::numbers::pi * std::log(t) / std::log(q.value()));
}

std::function<Complex(double)> modulate(const QSeries& x, const ModulationSpec& spec) {
  const double amplitude = spec.amplitude;
  if (spec.kind == ModulationKind::constant) {
    return [x, amplitude](double t) { return amplitude * eval(x, t); };
  }
  const QParam q = x.q();
  return [x, amplitude, q](double t) {
    return amplitude * qperiodic_sin(t, q) * eval(x, t);
  };
}

std::vector<TimeSeriesOutput> self_similar_windows(const std::function<Complex(double)>& f,
                                                   const std::vector<double>& scales,
                                                   int points) {
  if (points < 1) throw std::invalid_argument("self_similar_windows: points must be >= 1");
  if (scales.empty()) {
    throw std::invalid_argument("self_similar_windows: scales must be nonempty");
  }
  for (double s : scales) {
    if (!(s > 0.0)) {
      throw std::invalid_argument("self_similar_windows: scales must be positive");
    }
  }
  std::vector<TimeSeriesOutput> out;
  out.reserve(scales.size());
  for (double s : scales) {
    TimeSeriesOutput ts;
    ts.t.reserve(static_cast<std::size_t>(points));
    ts.x.reserve(static_cast<std::size_t>(points));
    for (int i = 1; i <= points; ++i) {
      const double t = s * static_cast<double>(i) / static_cast<double>(points);
      ts.t.push_back(t);
      ts.x.push_back(f(t));
    }
    out.push_back(std::move(ts));
  }
  return out;
}

}  // namespace qosc
