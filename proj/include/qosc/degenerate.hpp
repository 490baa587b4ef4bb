#pragma once

#include <utility>
#include <vector>

#include "qosc/series.hpp"
#include "qosc/special.hpp"

namespace qosc {

// Linear constant-coefficient q-difference equation sum_k a[k] D_q^k x = 0.
struct QDifferenceEquation {
  std::vector<double> a;
  QParam q;

  QDifferenceEquation(std::vector<double> a_, const QParam& q_) : a(std::move(a_)), q(q_) {
    if (a.size() < 2 || a.back() == 0.0) {
      throw std::invalid_argument(
          "QDifferenceEquation: needs degree >= 1 with nonzero leading coefficient");
    }
  }

  int degree() const { return static_cast<int>(a.size()) - 1; }
};

// sum_k a[k] D_q^k x, truncated to order(x) - degree.
QSeries equation_residual(const QDifferenceEquation& eq, const QSeries& x);

// n-fold application of (D_q + omega), dropping one order per application.
QSeries apply_operator(double omega, int n, const QSeries& f);

// T(D_q f) - D_q(T f) + D_q f for the scale operator T = t d/dt.
// Identically zero on every truncated series.
QSeries commutator_check(const QSeries& f);

// T(D_q^n f) - D_q^n(T f - n f); requires 1 <= n < order(f).
QSeries shift_identity_check(int n, const QSeries& f);

// T((D_q+omega)^n f) - [(D_q+omega)^n (T f) - n (D_q+omega)^(n-1) D_q f];
// requires 1 <= n <= order(f).
QSeries general_identity_check(double omega, int n, const QSeries& f);

// Solution family for the degenerate root -omega of multiplicity n:
// members[k] = t^k (d/dt)^k e_q(-omega t), k = 0 .. n-1.
struct DegenerateFamily {
  double omega;
  int n;
  QParam q;
  std::vector<QSeries> members;
};

DegenerateFamily degenerate_basis(double omega, int n, const QParam& q, int order = 64);

// Linear combination over the root list {(lambda, multiplicity)}: each root
// contributes members t^j (d/dt)^j e_q(lambda t), j = 0 .. multiplicity-1,
// consuming coefficients in that order. coeffs.size() must equal the total
// multiplicity.
QSeries general_solution(const std::vector<std::pair<Complex, int>>& roots,
                         const std::vector<Complex>& coeffs, const QParam& q,
                         int order = 64);

// det[ (D_q^j members[k])(0) ], j,k = 0 .. n-1, by Gaussian elimination.
// Nonzero determinant certifies linear independence of the family.
double generalized_wronskian_at_zero(const DegenerateFamily& family);

}  // namespace qosc
