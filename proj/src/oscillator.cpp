#include "qosc/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qosc {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::under:
      return "under";
    case Regime::over:
      return "over";
    case Regime::critical:
      return "critical";
  }
  return "unknown";
}

RootPair characteristic_roots(const OscillatorSpec& spec, double rel_tol) {
  const double g2 = spec.Gamma * spec.Gamma;
  const double w2 = 4.0 * spec.omega * spec.omega;
  const double disc = g2 - w2;
  if (std::abs(disc) <= rel_tol * std::max(g2, w2)) {
    const Complex lambda(-spec.omega, 0.0);
    return RootPair{lambda, lambda, 2, Regime::critical, 0.0};
  }
  if (disc > 0.0) {
    // Larger-magnitude root directly, partner via the product omega^2.
    const double big = -(spec.Gamma + std::sqrt(disc)) / 2.0;
    const double small = spec.omega * spec.omega / big;
    return RootPair{Complex(small, 0.0), Complex(big, 0.0), 1, Regime::over, 0.0};
  }
  const double Omega = std::sqrt(-disc) / 2.0;
  return RootPair{Complex(-spec.Gamma / 2.0, Omega), Complex(-spec.Gamma / 2.0, -Omega),
                  1, Regime::under, Omega};
}

namespace {

// Splits a complex-coefficient series into its coefficient-wise real part.
QSeries real_part(const QSeries& s) {
  std::vector<Complex> c(s.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(s.coeffs()[i].real(), 0.0);
  return QSeries(std::move(c), s.q());
}

QSeries imag_part(const QSeries& s) {
  std::vector<Complex> c(s.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(s.coeffs()[i].imag(), 0.0);
  return QSeries(std::move(c), s.q());
}

}  // namespace

SolutionBasis build_basis(const OscillatorSpec& spec, int order) {
  if (order < 2) throw std::invalid_argument("build_basis: order must be >= 2");
  const RootPair roots = characteristic_roots(spec);
  SolutionBasis basis{QSeries::zero(0, spec.q), QSeries::zero(0, spec.q),
                      "", "", std::nullopt, Complex(1.0), Complex(1.0)};
  switch (roots.regime) {
    case Regime::under: {
      const QSeries e = eq_series(roots.lambda1, spec.q, order);
      basis.x1 = real_part(e);
      basis.x2 = imag_part(e);
      basis.label1 = "Re e_q(lambda t)";
      basis.label2 = "Im e_q(lambda t)";
      break;
    }
    case Regime::over: {
      basis.x1 = eq_series(roots.lambda1, spec.q, order);
      basis.x2 = eq_series(roots.lambda2, spec.q, order);
      basis.label1 = "e_q(lambda1 t)";
      basis.label2 = "e_q(lambda2 t)";
      break;
    }
    case Regime::critical: {
      basis.x1 = eq_series(Complex(-spec.omega, 0.0), spec.q, order);
      basis.x2 = euler_op(basis.x1);
      basis.label1 = "e_q(-omega t)";
      basis.label2 = "t d/dt e_q(-omega t)";
      basis.closed_form_radius =
          spec.q.value() / ((spec.q.value() - 1.0) * spec.omega);
      break;
    }
  }
  return basis;
}

QSeries residual(const OscillatorSpec& spec, const QSeries& x) {
  if (x.q() != spec.q) {
    throw std::invalid_argument("residual: series q does not match the oscillator q");
  }
  const QSeries d1 = dq(x);
  const QSeries d2 = dq(d1);
  const int out_order = std::max(x.order() - 2, 0);
  std::vector<Complex> c(static_cast<std::size_t>(out_order) + 1);
  for (int n = 0; n <= out_order; ++n) {
    c[static_cast<std::size_t>(n)] = d2.coeff(n) + spec.Gamma * d1.coeff(n) +
                                     spec.omega * spec.omega * x.coeff(n);
  }
  return QSeries(std::move(c), spec.q);
}

double relative_residual(const OscillatorSpec& spec, const QSeries& x) {
  const double scale = max_abs_coeff(x);
  if (scale == 0.0) return 0.0;
  return max_abs_coeff(residual(spec, x)) / scale;
}

double x2_closed_form(double t, const OscillatorSpec& spec, int lnq_order) {
  const RootPair roots = characteristic_roots(spec);
  if (roots.regime != Regime::critical) {
    throw std::domain_error("x2_closed_form: critical regime required");
  }
  const double qv = spec.q.value();
  const double radius = qv / ((qv - 1.0) * spec.omega);
  if (!(std::abs(t) < radius)) {
    throw std::domain_error("x2_closed_form: |t| must be below q/((q-1) omega)");
  }
  if (t == 0.0) return 0.0;
  const double ln_term = lnq_eval((qv - 1.0) * spec.omega * t, spec.q, lnq_order);
  const double e_term = eq_value(Complex(-spec.omega * t, 0.0), spec.q).real();
  return ln_term / (qv - 1.0) * e_term;
}

double q_wronskian(const SolutionBasis& basis, double t, double rel_tol) {
  const QSeries d1 = dq(basis.x1);
  const QSeries d2 = dq(basis.x2);
  const Complex w = eval(basis.x1, t, rel_tol) * eval(d2, t, rel_tol) -
                    eval(basis.x2, t, rel_tol) * eval(d1, t, rel_tol);
  return w.real();
}

double wronskian_closed_form(const OscillatorSpec& spec, double t) {
  const RootPair roots = characteristic_roots(spec);
  if (roots.regime != Regime::critical) {
    throw std::domain_error("wronskian_closed_form: critical regime required");
  }
  const double e = eq_value(Complex(-spec.omega * t, 0.0), spec.q).real();
  return -spec.omega * e * e;
}

std::pair<double, double> perturbation_check(const OscillatorSpec& spec, double eps,
                                             double t, int order) {
  const RootPair roots = characteristic_roots(spec);
  if (roots.regime != Regime::critical) {
    throw std::domain_error("perturbation_check: critical regime required");
  }
  if (!(eps > 0.0)) {
    throw std::domain_error("perturbation_check: eps must be positive");
  }
  const double h = std::sqrt(2.0 * spec.omega * eps);
  const double lambda1 = -spec.omega + h;
  const double lambda2 = spec.omega * spec.omega / lambda1;
  const QSeries e1 = eq_series(Complex(lambda1, 0.0), spec.q, order);
  const QSeries e2 = eq_series(Complex(lambda2, 0.0), spec.q, order);
  const double fd = (eval(e1, t) - eval(e2, t)).real() / (2.0 * h);
  const QSeries x2 = euler_op(eq_series(Complex(-spec.omega, 0.0), spec.q, order));
  const double ref = -eval(x2, t).real() / spec.omega;
  return {fd, ref};
}

std::function<double(double)> classical_solution(const ClassicalSpec& spec, double A,
                                                 double B, double rel_tol) {
  const double g2 = spec.gamma * spec.gamma;
  const double mk4 = 4.0 * spec.m * spec.k;
  const double disc = g2 - mk4;
  const double omega = std::sqrt(spec.k / spec.m);
  if (std::abs(disc) <= rel_tol * std::max(g2, mk4)) {
    return [=](double t) { return (A + B * t) * std::exp(-omega * t); };
  }
  if (disc > 0.0) {
    const double big = -(spec.gamma + std::sqrt(disc)) / (2.0 * spec.m);
    const double small = (spec.k / spec.m) / big;
    return [=](double t) { return A * std::exp(small * t) + B * std::exp(big * t); };
  }
  const double decay = -spec.gamma / (2.0 * spec.m);
  const double Omega = std::sqrt(-disc) / (2.0 * spec.m);
  return [=](double t) {
    return std::exp(decay * t) * (A * std::cos(Omega * t) + B * std::sin(Omega * t));
  };
}

QSeries first_order_solution(double gamma, double k, Complex x0, const QParam& q,
                             int order) {
  if (gamma == 0.0) {
    throw std::domain_error("first_order_solution: gamma must be nonzero");
  }
  return x0 * eq_series(Complex(-k / gamma, 0.0), q, order);
}

}  // namespace qosc
