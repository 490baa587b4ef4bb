#pragma once

#include <vector>

#include "qosc/series.hpp"

namespace qosc {

// Result of evaluating e_q(z) through its infinite product
// prod_{n>=0} (1 + (1-1/q) q^-n z). factors_used is the smallest n whose
// factor deviation |(1-1/q) q^-n z| fell below the cutoff; the tail beyond
// the explicitly multiplied factors is folded in through its logarithm.
struct EqProductEval {
  Complex value;
  int factors_used;
};

// Truncated Jackson exponential e_q(lambda t) = sum_n (lambda t)^n / [n]_q!.
// Coefficients are built by the recurrence c_n = c_{n-1} lambda / [n]_q,
// which stays in range where the explicit q-factorial would overflow.
QSeries eq_series(Complex lambda, const QParam& q, int order);

// e_q(z) via the convergent infinite product. Exact zeros of a factor make
// the value exactly zero. cutoff bounds the neglected factor deviation.
EqProductEval eq_eval_product(Complex z, const QParam& q, double cutoff = 1e-18);

// Real and imaginary coefficient parts of e_q(i omega t):
// e_q(it) = cos_q t + i sin_q t. Both series carry zero imaginary parts.
QSeries cosq_series(double omega, const QParam& q, int order);
QSeries sinq_series(double omega, const QParam& q, int order);

// e_q(z) by truncated series for |z| < 1, by the infinite product otherwise
// (empirical crossover; both routes stay accurate near |z| = 1).
Complex eq_value(Complex z, const QParam& q);

// q-logarithm Ln_q(1 - x) = -sum_{l>=1} x^l / [l]_q, convergent for |x| < q.
// order = 0 picks the truncation adaptively from |x|/q and rel_tol; an
// explicit order is honored and checked by the same tail guard as eval.
// Throws std::domain_error outside |x| < q.
double lnq_eval(double x, const QParam& q, int order = 0, double rel_tol = 1e-12);

// First `count` zeros of t -> e_q(-omega t), ascending:
// t_k = q^(k+1) / ((q-1) omega), successive ratios equal to q.
std::vector<double> eq_zeros(const QParam& q, double omega, int count);

}  // namespace qosc
