#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "qosc/qcore.hpp"

namespace qosc {

using Complex = std::complex<double>;

// Raised when a truncated series is evaluated outside its trustworthy range:
// the last retained term is no longer negligible against the partial sum.
class TailGuardError : public std::runtime_error {
 public:
  TailGuardError(const std::string& what, double guard)
      : std::runtime_error(what), guard_(guard) {}
  // |c_N t^N| / (1 + |partial sum|) that tripped the check.
  double guard() const noexcept { return guard_; }

 private:
  double guard_;
};

// Truncated power series sum_{n=0}^{N} c_n t^n tagged with its q parameter.
// Coefficients are complex; real solutions carry zero imaginary parts.
class QSeries {
 public:
  QSeries(std::vector<Complex> coeffs, const QParam& q)
      : c_(std::move(coeffs)), q_(q) {
    if (c_.empty()) {
      throw std::invalid_argument("QSeries: coefficient list must be non-empty");
    }
  }

  static QSeries zero(int order, const QParam& q) {
    if (order < 0) {
      throw std::invalid_argument("QSeries::zero: order must be >= 0");
    }
    return QSeries(std::vector<Complex>(static_cast<size_t>(order) + 1), q);
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return c_; }
  Complex coeff(int n) const {
    return (n >= 0 && n <= order()) ? c_[static_cast<size_t>(n)] : Complex(0.0);
  }
  const QParam& q() const noexcept { return q_; }

 private:
  std::vector<Complex> c_;
  QParam q_;
};

// Jackson derivative on coefficients: c_n -> [n]_q c_n at degree n-1.
// Annihilates constants; the result of a constant is the order-0 zero series.
QSeries dq(const QSeries& s);

// Euler operator t d/dt on coefficients: c_n -> n c_n, degree unchanged.
QSeries euler_op(const QSeries& s);

// Classical derivative on coefficients: c_n -> n c_n at degree n-1.
QSeries ddt(const QSeries& s);

// Multiplication by t^power; the order grows by power.
QSeries mul_by_t(const QSeries& s, int power = 1);

// Cauchy product truncated at min(order_a, order_b). Mixing different q
// values is a usage error and throws std::invalid_argument.
QSeries mul(const QSeries& a, const QSeries& b);

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const Complex& alpha, const QSeries& s);
QSeries operator*(double alpha, const QSeries& s);

// Horner evaluation with a tail guard: throws TailGuardError when
// |c_N t^N| / (1 + |partial sum|) exceeds rel_tol.
Complex eval(const QSeries& s, double t, double rel_tol = 1e-12);

double max_abs_coeff(const QSeries& s);

}  // namespace qosc
