#include "qosc/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qosc {

namespace {

void require_same_q(const QSeries& a, const QSeries& b, const char* op) {
  if (a.q() != b.q()) {
    throw std::invalid_argument(std::string(op) + ": operands carry different q values");
  }
}

std::string sci(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

}  // namespace

QSeries dq(const QSeries& s) {
  const int n = s.order();
  if (n == 0) {
    return QSeries::zero(0, s.q());
  }
  std::vector<Complex> out(static_cast<size_t>(n));
  double bracket = 0.0;
  double power = 1.0;
  for (int k = 1; k <= n; ++k) {
    bracket += power;
    power *= s.q().value();
    out[static_cast<size_t>(k - 1)] = bracket * s.coeff(k);
  }
  return QSeries(std::move(out), s.q());
}

QSeries euler_op(const QSeries& s) {
  std::vector<Complex> out(s.coeffs());
  for (int k = 0; k <= s.order(); ++k) {
    out[static_cast<size_t>(k)] *= static_cast<double>(k);
  }
  return QSeries(std::move(out), s.q());
}

QSeries ddt(const QSeries& s) {
  const int n = s.order();
  if (n == 0) {
    return QSeries::zero(0, s.q());
  }
  std::vector<Complex> out(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    out[static_cast<size_t>(k - 1)] = static_cast<double>(k) * s.coeff(k);
  }
  return QSeries(std::move(out), s.q());
}

QSeries mul_by_t(const QSeries& s, int power) {
  if (power < 0) {
    throw std::invalid_argument("mul_by_t: power must be >= 0");
  }
  std::vector<Complex> out(s.coeffs().size() + static_cast<size_t>(power));
  std::copy(s.coeffs().begin(), s.coeffs().end(), out.begin() + power);
  return QSeries(std::move(out), s.q());
}

QSeries mul(const QSeries& a, const QSeries& b) {
  require_same_q(a, b, "mul");
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc(0.0);
    for (int j = 0; j <= k; ++j) {
      acc += a.coeff(j) * b.coeff(k - j);
    }
    out[static_cast<size_t>(k)] = acc;
  }
  return QSeries(std::move(out), a.q());
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  require_same_q(a, b, "operator+");
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    out[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  }
  return QSeries(std::move(out), a.q());
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  require_same_q(a, b, "operator-");
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> out(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    out[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
  }
  return QSeries(std::move(out), a.q());
}

QSeries operator*(const Complex& alpha, const QSeries& s) {
  std::vector<Complex> out(s.coeffs());
  for (auto& c : out) {
    c *= alpha;
  }
  return QSeries(std::move(out), s.q());
}

QSeries operator*(double alpha, const QSeries& s) {
  return Complex(alpha) * s;
}

Complex eval(const QSeries& s, double t, double rel_tol) {
  Complex acc = s.coeff(s.order());
  for (int k = s.order() - 1; k >= 0; --k) {
    acc = acc * t + s.coeff(k);
  }
  const double tail = std::abs(s.coeff(s.order())) *
                      std::pow(std::abs(t), static_cast<double>(s.order()));
  const double guard = tail / (1.0 + std::abs(acc));
  if (!(guard <= rel_tol)) {
    throw TailGuardError("eval: last retained term |c_N t^N| = " + sci(tail) +
                             " is not negligible at t = " + std::to_string(t) +
                             " (guard " + sci(guard) + " > rel_tol " + sci(rel_tol) +
                             "); raise the truncation order",
                         guard);
  }
  return acc;
}

double max_abs_coeff(const QSeries& s) {
  double m = 0.0;
  for (const auto& c : s.coeffs()) {
    m = std::max(m, std::abs(c));
  }
  return m;
}

}  // namespace qosc
