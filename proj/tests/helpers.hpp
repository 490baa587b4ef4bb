#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qosc/series.hpp"

namespace qosc::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

// Deterministic random series with real coefficients in [-1, 1].
inline QSeries random_series(int order, const QParam& q, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = Complex(dist(rng), 0.0);
  return QSeries(std::move(c), q);
}

inline QSeries random_complex_series(int order, const QParam& q, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& v : c) v = Complex(dist(rng), dist(rng));
  return QSeries(std::move(c), q);
}

}  // namespace qosc::testing
