#include "qosc/riccati.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qosc/special.hpp"

namespace qosc {

namespace {

[[noreturn]] void throw_near_zero(double t, double x_abs, const QParam& q,
                                  const std::optional<double>& omega_hint) {
  std::ostringstream msg;
  msg << "to_riccati: |x(" << t << ")| = " << x_abs << " is below the pole threshold";
  if (omega_hint) {
    // Walk the zero ladder t_k = q^(k+1)/((q-1) omega) to the one nearest t.
    const std::vector<double> zeros = eq_zeros(q, *omega_hint, 64);
    double best = zeros.front();
    for (double z : zeros) {
      if (std::abs(z - t) < std::abs(best - t)) best = z;
    }
    msg << "; nearest zero of e_q(-omega t) is at t = " << best;
  }
  throw std::domain_error(msg.str());
}

double guarded_ratio(const QSeries& x, const QSeries& dqx, double t, double abs_threshold,
                     const std::optional<double>& omega_hint) {
  const double xv = eval(x, t).real();
  if (std::abs(xv) <= abs_threshold) throw_near_zero(t, std::abs(xv), x.q(), omega_hint);
  return eval(dqx, t).real() / xv;
}

}  // namespace

double to_riccati(const QSeries& x, double t, double abs_threshold,
                  std::optional<double> omega_hint) {
  return guarded_ratio(x, dq(x), t, abs_threshold, omega_hint);
}

std::function<double(double)> riccati_map(const QSeries& x, double abs_threshold,
                                          std::optional<double> omega_hint) {
  const QSeries dqx = dq(x);
  return [x, dqx, abs_threshold, omega_hint](double t) {
    return guarded_ratio(x, dqx, t, abs_threshold, omega_hint);
  };
}

std::vector<RiccatiSample> riccati_scan(const QSeries& x, double Gamma, double omega,
                                        double t0, double t1, int steps,
                                        double rel_threshold) {
  if (steps < 1) throw std::invalid_argument("riccati_scan: steps must be >= 1");
  if (!(t1 > t0)) throw std::invalid_argument("riccati_scan: t1 must exceed t0");
  const QSeries dqx = dq(x);
  const double qv = x.q().value();
  std::vector<double> grid(static_cast<std::size_t>(steps));
  std::vector<double> xt(static_cast<std::size_t>(steps));
  double x_max = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(steps);
    grid[static_cast<std::size_t>(i - 1)] = t;
    const double v = eval(x, t).real();
    xt[static_cast<std::size_t>(i - 1)] = v;
    x_max = std::max(x_max, std::abs(v));
  }
  const double threshold = rel_threshold * (1.0 + x_max);
  std::vector<RiccatiSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = grid[static_cast<std::size_t>(i)];
    if (t == 0.0) continue;
    const double xv = xt[static_cast<std::size_t>(i)];
    const double xqt = eval(x, qv * t).real();
    if (std::abs(xv) <= threshold || std::abs(xqt) <= threshold) continue;
    const double yt = eval(dqx, t).real() / xv;
    const double yqt = eval(dqx, qv * t).real() / xqt;
    const double dy = (yqt - yt) / ((qv - 1.0) * t);
    out.push_back({t, yt, dy + yqt * yt + Gamma * yt + omega * omega});
  }
  return out;
}

}  // namespace qosc
