#pragma once

#include <functional>
#include <vector>

#include "qosc/series.hpp"
#include "qosc/timeseries.hpp"

namespace qosc {

// sin(2 pi ln t / ln q): invariant under t -> qt, so it decorates solutions
// without disturbing the q-difference structure. Requires t > 0.
double qperiodic_sin(double t, const QParam& q);

// f(qt) - f(t); identically zero for a q-periodic f.
template <typename F>
auto qperiodic_defect(F&& f, double t, const QParam& q) -> decltype(f(t)) {
  return f(q.value() * t) - f(t);
}

enum class ModulationKind { constant, qperiodic };

struct ModulationSpec {
  ModulationKind kind = ModulationKind::constant;
  double amplitude = 1.0;
};

// amplitude * x(t) for constant modulation, amplitude * qperiodic_sin(t) * x(t)
// for q-periodic modulation (then only defined for t > 0). The modulation
// dilation factor is the q carried by the series.
std::function<Complex(double)> modulate(const QSeries& x, const ModulationSpec& spec);

// One trajectory per scale s, on the zero-excluding grid t_i = s i / points,
// i = 1..points. Grids at different scales map onto each other by pure
// dilation, which is what makes window-by-window comparison meaningful.
std::vector<TimeSeriesOutput> self_similar_windows(const std::function<Complex(double)>& f,
                                                   const std::vector<double>& scales,
                                                   int points);

}  // namespace qosc
