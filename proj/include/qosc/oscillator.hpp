#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qosc/series.hpp"
#include "qosc/special.hpp"

namespace qosc {

// Mass, damping and stiffness of the classical reference oscillator.
// Only the classical q -> 1 solution consumes this; no QParam is attached.
struct ClassicalSpec {
  double m;
  double gamma;
  double k;

  ClassicalSpec(double m_, double gamma_, double k_) : m(m_), gamma(gamma_), k(k_) {
    if (!(m > 0.0) || !(k > 0.0) || !(gamma >= 0.0)) {
      throw std::domain_error("ClassicalSpec: requires m > 0, k > 0, gamma >= 0");
    }
  }
};

// Reduced parameters of the q-deformed equation D_q^2 x + Gamma D_q x + omega^2 x = 0.
struct OscillatorSpec {
  double Gamma;
  double omega;
  QParam q;

  OscillatorSpec(double Gamma_, double omega_, const QParam& q_)
      : Gamma(Gamma_), omega(omega_), q(q_) {
    if (!(omega > 0.0) || !(Gamma >= 0.0)) {
      throw std::domain_error("OscillatorSpec: requires omega > 0, Gamma >= 0");
    }
  }
};

enum class Regime { under, over, critical };

const char* regime_name(Regime r);

// Roots of lambda^2 + Gamma lambda + omega^2 = 0.
// multiplicity == 2 exactly in the critical regime; Omega = sqrt(omega^2 -
// Gamma^2/4) in the under-damped regime and 0 otherwise.
struct RootPair {
  Complex lambda1;
  Complex lambda2;
  int multiplicity;
  Regime regime;
  double Omega;
};

// Pair of real-coefficient basis solutions. closed_form_radius is set in the
// critical regime only: |t| < q/((q-1) omega) bounds the Ln_q closed form.
struct SolutionBasis {
  QSeries x1;
  QSeries x2;
  std::string label1;
  std::string label2;
  std::optional<double> closed_form_radius;
  Complex A{1.0};
  Complex B{1.0};

  // Combined solution A x1(t) + B x2(t).
  Complex value(double t, double rel_tol = 1e-12) const {
    return A * eval(x1, t, rel_tol) + B * eval(x2, t, rel_tol);
  }
};

// Classifies the regime with the relative tolerance
// |Gamma^2 - 4 omega^2| <= rel_tol * max(Gamma^2, 4 omega^2) for criticality
// and computes the roots in the cancellation-stable form: larger-magnitude
// root from the quadratic formula, the other through the product omega^2.
RootPair characteristic_roots(const OscillatorSpec& spec, double rel_tol = 1e-9);

// Basis of order-`order` series solutions:
//   under-damped:  coefficient-wise Re and Im of e_q(lambda t), lambda = -Gamma/2 + i Omega
//   over-damped:   e_q(lambda1 t), e_q(lambda2 t)
//   critical:      e_q(-omega t), t d/dt e_q(-omega t)
QSeries residual(const OscillatorSpec& spec, const QSeries& x);
SolutionBasis build_basis(const OscillatorSpec& spec, int order = 64);

// max |residual coefficient| relative to the largest coefficient of x.
double relative_residual(const OscillatorSpec& spec, const QSeries& x);

// D_q^2 f + Gamma D_q f + omega^2 f at t through sampled difference quotients.
template <typename F>
auto sampled_residual(F&& f, double t, const OscillatorSpec& spec)
    -> decltype(f(t)) {
  auto df = [&f, &spec](double s) { return q_derivative_at(f, s, spec.q); };
  return q_derivative_at(df, t, spec.q) + spec.Gamma * q_derivative_at(f, t, spec.q) +
         spec.omega * spec.omega * f(t);
}

// Critical second solution in closed form,
//   x2(t) = 1/(q-1) * Ln_q(1 - (q-1) omega t) * e_q(-omega t),
// valid for |t| < q/((q-1) omega). lnq_order = 0 picks the Ln_q truncation
// adaptively. Throws std::domain_error outside the radius or off-regime.
double x2_closed_form(double t, const OscillatorSpec& spec, int lnq_order = 0);

// q-Wronskian x1 D_q x2 - x2 D_q x1 evaluated from the basis series.
double q_wronskian(const SolutionBasis& basis, double t, double rel_tol = 1e-12);

// Critical-regime closed form W_q(t) = -omega e_q(-omega t)^2, evaluated
// through the infinite product; an independent route from the determinant.
double wronskian_closed_form(const OscillatorSpec& spec, double t);

// Near-critical splitting Gamma/2 = omega + eps. Returns the pair
//   ( [e_q(lambda1 t) - e_q(lambda2 t)] / (2 sqrt(2 omega eps)) , -x2(t)/omega )
// with lambda1 = -omega + sqrt(2 omega eps) and lambda2 = omega^2 / lambda1,
// the Vieta completion used by characteristic_roots. The components agree to
// O(sqrt(eps)).
std::pair<double, double> perturbation_check(const OscillatorSpec& spec, double eps,
                                             double t, int order = 64);

// Closed-form classical solution x(t) for m x'' + gamma x' + k x = 0 with the
// same regime tolerance rule as characteristic_roots.
std::function<double(double)> classical_solution(const ClassicalSpec& spec, double A,
                                                 double B, double rel_tol = 1e-9);

// Solution x0 e_q(-(k/gamma) t) of the first-order equation
// gamma D_q x + k x = 0; requires gamma != 0.
QSeries first_order_solution(double gamma, double k, Complex x0, const QParam& q,
                             int order = 64);

}  // namespace qosc
