#include "qosc/timeseries.hpp"

#include <stdexcept>

namespace qosc {

bool TimeSeriesOutput::all_real() const {
  for (const Complex& v : x) {
    if (v.imag() != 0.0) return false;
  }
  return true;
}

TimeSeriesOutput sample_function(const std::function<Complex(double)>& f, double t0,
                                 double t1, int steps, bool include_start) {
  if (steps < 1) throw std::invalid_argument("sample_function: steps must be >= 1");
  if (!(t1 > t0)) throw std::invalid_argument("sample_function: t1 must exceed t0");
  TimeSeriesOutput ts;
  ts.t.reserve(static_cast<std::size_t>(steps) + 1);
  ts.x.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = include_start ? 0 : 1; i <= steps; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(steps);
    ts.t.push_back(t);
    ts.x.push_back(f(t));
  }
  return ts;
}

}  // namespace qosc
