#include "qosc/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qosc {

namespace {

std::string sci(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

}  // namespace

QSeries eq_series(Complex lambda, const QParam& q, int order) {
  if (order < 0) {
    throw std::invalid_argument("eq_series: order must be >= 0");
  }
  std::vector<Complex> c(static_cast<size_t>(order) + 1);
  c[0] = Complex(1.0);
  double bracket = 0.0;
  double power = 1.0;
  for (int n = 1; n <= order; ++n) {
    bracket += power;
    power *= q.value();
    c[static_cast<size_t>(n)] = c[static_cast<size_t>(n - 1)] * lambda / bracket;
  }
  return QSeries(std::move(c), q);
}

EqProductEval eq_eval_product(Complex z, const QParam& q, double cutoff) {
  if (!(cutoff > 0.0)) {
    throw std::invalid_argument("eq_eval_product: cutoff must be positive");
  }
  const double qv = q.value();
  const double a = 1.0 - 1.0 / qv;
  Complex value(1.0);
  Complex u = a * z;

  // Factors with sizable deviation are multiplied out one by one; a factor
  // hitting an exact zero of e_q keeps the value exactly zero. Once
  // |u| < 1e-3 the remaining product is folded in through its logarithm,
  // log prod_{k>=0}(1 + u q^-k) = sum_m (-1)^(m+1) u^m / (m (1 - q^-m)),
  // which stays cheap for q arbitrarily close to 1. The m = 1 term is the
  // log-linear tail sum_{k} a q^-k z; higher m refine it below the cutoff.
  while (std::abs(u) >= 1e-3) {
    value *= (1.0 + u);
    u /= qv;
  }
  if (u != Complex(0.0)) {
    Complex log_tail(0.0);
    Complex um = u;
    double q_minus_m = 1.0 / qv;
    double sign = 1.0;
    for (int m = 1; m <= 96; ++m) {
      const Complex term = sign * um / (static_cast<double>(m) * (1.0 - q_minus_m));
      log_tail += term;
      if (std::abs(term) < 1e-25) {
        break;
      }
      um *= u;
      q_minus_m /= qv;
      sign = -sign;
    }
    value *= std::exp(log_tail);
  }

  // smallest n with |(1-1/q) q^-n z| < cutoff
  const double dev0 = std::abs(a * z);
  int factors_used = 0;
  if (dev0 >= cutoff) {
    factors_used = static_cast<int>(std::floor(std::log(dev0 / cutoff) / std::log(qv))) + 1;
    while (dev0 * std::pow(qv, -static_cast<double>(factors_used)) >= cutoff) {
      ++factors_used;  // floor/log rounding slack
    }
  }
  return EqProductEval{value, factors_used};
}

Complex eq_value(Complex z, const QParam& q) {
  if (std::abs(z) < 1.0) {
    return eval(eq_series(z, q, 64), 1.0);
  }
  return eq_eval_product(z, q).value;
}

QSeries cosq_series(double omega, const QParam& q, int order) {
  const QSeries e = eq_series(Complex(0.0, omega), q, order);
  std::vector<Complex> c(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    c[static_cast<size_t>(n)] = Complex(e.coeff(n).real());
  }
  return QSeries(std::move(c), q);
}

QSeries sinq_series(double omega, const QParam& q, int order) {
  const QSeries e = eq_series(Complex(0.0, omega), q, order);
  std::vector<Complex> c(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    c[static_cast<size_t>(n)] = Complex(e.coeff(n).imag());
  }
  return QSeries(std::move(c), q);
}

double lnq_eval(double x, const QParam& q, int order, double rel_tol) {
  const double qv = q.value();
  if (!(std::abs(x) < qv)) {
    throw std::domain_error("lnq_eval: series for Ln_q(1-x) requires |x| < q, got x = " +
                            std::to_string(x));
  }
  if (order < 0) {
    throw std::invalid_argument("lnq_eval: order must be >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (order == 0) {
    // terms decay like (|x|/q)^l; solve (|x|/q)^L * margin <= rel_tol
    const double r = std::abs(x) / qv;
    const double margin = 0.01 * (1.0 - r);
    order = static_cast<int>(std::ceil(std::log(rel_tol * margin) / std::log(r)));
    order = std::clamp(order, 32, 200000);
  }
  // term_l = x^l / [l]_q, advanced by ratios; x^l and [l]_q overflow
  // separately near |x| = q while their quotient stays bounded.
  double sum = 0.0;
  double bracket = 1.0;  // [1]_q
  double power = qv;     // q^1
  double term = x;       // x^1 / [1]_q
  sum += term;
  for (int l = 2; l <= order; ++l) {
    const double next_bracket = bracket + power;
    term *= x * (bracket / next_bracket);
    sum += term;
    bracket = next_bracket;
    power *= qv;
  }
  const double guard = std::abs(term) / (1.0 + std::abs(sum));
  if (!(guard <= rel_tol)) {
    throw TailGuardError("lnq_eval: truncation order " + std::to_string(order) +
                             " insufficient at x = " + std::to_string(x) + " (guard " +
                             sci(guard) + " > rel_tol " + sci(rel_tol) + ")",
                         guard);
  }
  return -sum;
}

std::vector<double> eq_zeros(const QParam& q, double omega, int count) {
  if (!(omega > 0.0)) {
    throw std::domain_error("eq_zeros: omega must be positive");
  }
  if (count < 0) {
    throw std::invalid_argument("eq_zeros: count must be >= 0");
  }
  std::vector<double> zeros(static_cast<size_t>(count));
  double t = q.value() / ((q.value() - 1.0) * omega);  // k = 0
  for (int k = 0; k < count; ++k) {
    zeros[static_cast<size_t>(k)] = t;
    t *= q.value();
  }
  return zeros;
}

}  // namespace qosc
