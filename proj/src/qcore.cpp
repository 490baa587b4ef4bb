#include "qosc/qcore.hpp"

#include <cmath>
#include <string>

namespace qosc {

double q_bracket(int n, const QParam& q) {
  if (n < 0) {
    throw std::invalid_argument("q_bracket: n must be >= 0");
  }
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= q.value();
  }
  return sum;
}

double q_factorial(int n, const QParam& q) {
  if (n < 0) {
    throw std::invalid_argument("q_factorial: n must be >= 0");
  }
  double fact = 1.0;
  double bracket = 0.0;
  double power = 1.0;
  for (int k = 1; k <= n; ++k) {
    bracket += power;  // [k]_q = [k-1]_q + q^(k-1)
    power *= q.value();
    fact *= bracket;
    if (!std::isfinite(fact)) {
      throw std::range_error("q_factorial: overflow at n = " + std::to_string(k));
    }
  }
  return fact;
}

}  // namespace qosc
