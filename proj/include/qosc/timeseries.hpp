#pragma once

#include <functional>
#include <vector>

#include "qosc/series.hpp"

namespace qosc {

// Sampled trajectory; t and x always have equal length.
struct TimeSeriesOutput {
  std::vector<double> t;
  std::vector<Complex> x;

  // True when every imaginary part is exactly zero.
  bool all_real() const;
};

// Uniform grid t_i = t0 + i (t1 - t0)/steps. Inclusive (i = 0..steps) by
// default; with include_start = false the grid opens at t0 (i = 1..steps),
// for integrands singular at the left endpoint.
TimeSeriesOutput sample_function(const std::function<Complex(double)>& f, double t0,
                                 double t1, int steps, bool include_start = true);

}  // namespace qosc
