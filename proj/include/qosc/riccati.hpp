#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qosc/series.hpp"

namespace qosc {

// Logarithmic-derivative substitution y(t) = (D_q x)(t) / x(t).
// Throws std::domain_error when |x(t)| <= abs_threshold; if omega_hint is
// given the message names the nearest zero of e_q(-omega t).
double to_riccati(const QSeries& x, double t, double abs_threshold = 1e-8,
                  std::optional<double> omega_hint = std::nullopt);

// Same map with D_q x precomputed once; the returned callable applies the
// identical near-zero guard at every evaluation.
std::function<double(double)> riccati_map(const QSeries& x, double abs_threshold = 1e-8,
                                          std::optional<double> omega_hint = std::nullopt);

// Left side of D_q y + y(qt) y(t) + Gamma y(t) + omega^2 = 0 for a sampled y;
// zero when y came from a solution of the linear equation. t = 0 is outside
// the domain of D_q.
template <typename F>
double riccati_residual(F&& y, double t, double Gamma, double omega, const QParam& q) {
  if (t == 0.0) throw std::domain_error("riccati_residual: t = 0 not in the domain");
  const double yt = y(t);
  const double yqt = y(q.value() * t);
  const double dy = (yqt - yt) / ((q.value() - 1.0) * t);
  return dy + yqt * yt + Gamma * yt + omega * omega;
}

struct RiccatiSample {
  double t;
  double y;
  double residual;
};

// Uniform grid t_i = t0 + i (t1 - t0)/steps, i = 1..steps. The pole guard is
// relative to the sampled magnitude: points where |x(t)| or |x(qt)| falls at
// or below rel_threshold * (1 + max_i |x(t_i)|) are skipped (the residual
// needs y at t and qt), as is t = 0.
std::vector<RiccatiSample> riccati_scan(const QSeries& x, double Gamma, double omega,
                                        double t0, double t1, int steps,
                                        double rel_threshold = 1e-8);

}  // namespace qosc
