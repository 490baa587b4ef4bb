#pragma once

#include <stdexcept>
#include <utility>

namespace qosc {

// Deformation parameter, restricted to q > 1. The q = 1 limit is reached
// only by letting q -> 1+ numerically; constructing QParam(1) throws.
class QParam {
 public:
  explicit QParam(double q) : q_(q) {
    if (!(q > 1.0)) {
      throw std::domain_error("QParam: q must satisfy q > 1");
    }
  }

  double value() const noexcept { return q_; }

  friend bool operator==(const QParam& a, const QParam& b) noexcept {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const QParam& a, const QParam& b) noexcept {
    return !(a == b);
  }

 private:
  double q_;
};

// q-bracket [n]_q = 1 + q + ... + q^(n-1), accumulated by direct summation.
// The quotient form (q^n - 1)/(q - 1) cancels catastrophically as q -> 1+.
double q_bracket(int n, const QParam& q);

// q-factorial [n]_q! = prod_{k=1..n} [k]_q. Throws std::range_error when the
// product leaves the double range instead of returning infinity.
double q_factorial(int n, const QParam& q);

// Jackson difference quotient D_q f(t) = (f(qt) - f(t)) / ((q-1) t).
// t = 0 is outside the domain of the quotient; use the series form there.
template <typename F>
auto q_derivative_at(F&& f, double t, const QParam& q)
    -> decltype(std::forward<F>(f)(t)) {
  if (t == 0.0) {
    throw std::domain_error("q_derivative_at: difference quotient undefined at t = 0");
  }
  const double qv = q.value();
  return (f(qv * t) - f(t)) / ((qv - 1.0) * t);
}

}  // namespace qosc
