#include "qosc/degenerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qosc {

namespace {

QSeries dq_pow(QSeries s, int n) {
  for (int i = 0; i < n; ++i) s = dq(s);
  return s;
}

QSeries ddt_pow(QSeries s, int n) {
  for (int i = 0; i < n; ++i) s = ddt(s);
  return s;
}

}  // namespace

QSeries equation_residual(const QDifferenceEquation& eq, const QSeries& x) {
  if (x.q() != eq.q) {
    throw std::invalid_argument("equation_residual: series q does not match the equation");
  }
  const int deg = eq.degree();
  const int out_order = std::max(x.order() - deg, 0);
  std::vector<Complex> c(static_cast<std::size_t>(out_order) + 1, Complex(0.0));
  QSeries d = x;
  for (int k = 0; k <= deg; ++k) {
    for (int n = 0; n <= out_order; ++n) {
      c[static_cast<std::size_t>(n)] += eq.a[static_cast<std::size_t>(k)] * d.coeff(n);
    }
    if (k < deg) d = dq(d);
  }
  return QSeries(std::move(c), eq.q);
}

QSeries apply_operator(double omega, int n, const QSeries& f) {
  if (n < 0) throw std::invalid_argument("apply_operator: n must be >= 0");
  if (f.order() < n) {
    throw std::invalid_argument("apply_operator: series order must be >= n");
  }
  QSeries g = f;
  for (int i = 0; i < n; ++i) {
    const QSeries d = dq(g);
    const int out_order = g.order() - 1;
    std::vector<Complex> c(static_cast<std::size_t>(out_order) + 1);
    for (int m = 0; m <= out_order; ++m) {
      c[static_cast<std::size_t>(m)] = d.coeff(m) + omega * g.coeff(m);
    }
    g = QSeries(std::move(c), f.q());
  }
  return g;
}

QSeries commutator_check(const QSeries& f) {
  if (f.order() < 1) {
    throw std::invalid_argument("commutator_check: series order must be >= 1");
  }
  const QSeries df = dq(f);
  return euler_op(df) - dq(euler_op(f)) + df;
}

QSeries shift_identity_check(int n, const QSeries& f) {
  if (n < 1 || n >= f.order() + 1) {
    throw std::invalid_argument("shift_identity_check: requires 1 <= n <= order");
  }
  const QSeries lhs = euler_op(dq_pow(f, n));
  const QSeries rhs = dq_pow(euler_op(f) - static_cast<double>(n) * f, n);
  return lhs - rhs;
}

QSeries general_identity_check(double omega, int n, const QSeries& f) {
  if (n < 1 || n > f.order()) {
    throw std::invalid_argument("general_identity_check: requires 1 <= n <= order");
  }
  const QSeries lhs = euler_op(apply_operator(omega, n, f));
  const QSeries rhs = apply_operator(omega, n, euler_op(f)) -
                      static_cast<double>(n) * apply_operator(omega, n - 1, dq(f));
  return lhs - rhs;
}

DegenerateFamily degenerate_basis(double omega, int n, const QParam& q, int order) {
  if (n < 1) throw std::invalid_argument("degenerate_basis: n must be >= 1");
  if (order < n) throw std::invalid_argument("degenerate_basis: order must be >= n");
  DegenerateFamily family{omega, n, q, {}};
  const QSeries e = eq_series(Complex(-omega, 0.0), q, order);
  family.members.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    family.members.push_back(mul_by_t(ddt_pow(e, k), k));
  }
  return family;
}

QSeries general_solution(const std::vector<std::pair<Complex, int>>& roots,
                         const std::vector<Complex>& coeffs, const QParam& q,
                         int order) {
  int total = 0;
  for (const auto& [lambda, mult] : roots) {
    (void)lambda;
    if (mult < 1) throw std::invalid_argument("general_solution: multiplicity must be >= 1");
    total += mult;
  }
  if (static_cast<int>(coeffs.size()) != total) {
    throw std::invalid_argument("general_solution: coefficient count must match total multiplicity");
  }
  QSeries out = QSeries::zero(order, q);
  std::size_t idx = 0;
  for (const auto& [lambda, mult] : roots) {
    const QSeries e = eq_series(lambda, q, order);
    for (int j = 0; j < mult; ++j) {
      out = out + coeffs[idx++] * mul_by_t(ddt_pow(e, j), j);
    }
  }
  return out;
}

double generalized_wronskian_at_zero(const DegenerateFamily& family) {
  const int n = family.n;
  // M[j][k] = (D_q^j members[k])(0) = constant coefficient after j derivatives.
  std::vector<std::vector<double>> M(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k) {
    QSeries d = family.members[static_cast<std::size_t>(k)];
    for (int j = 0; j < n; ++j) {
      M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = d.coeff(0).real();
      if (j < n - 1) d = dq(d);
    }
  }
  // Gaussian elimination with partial pivoting.
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) >
          std::abs(M[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)])) {
        pivot = row;
      }
    }
    if (M[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(M[static_cast<std::size_t>(pivot)], M[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const double diag = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= diag;
    for (int row = col + 1; row < n; ++row) {
      const double factor =
          M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / diag;
      for (int j = col; j < n; ++j) {
        M[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
            factor * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return det;
}

}  // namespace qosc
