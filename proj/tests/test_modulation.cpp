#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "qosc/modulation.hpp"
#include "qosc/oscillator.hpp"

using namespace qosc;

TEST_CASE("qperiodic_sin values and domain") {
  const QParam q(2.0);
  CHECK(qperiodic_sin(1.0, q) == 0.0);
  // ln(sqrt(2))/ln(2) = 1/2, so the argument is an integer multiple of pi.
  CHECK(std::abs(qperiodic_sin(std::sqrt(2.0), q)) <= 1e-15);
  CHECK(qperiodic_sin(std::pow(2.0, 0.25), q) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(qperiodic_sin(0.0, q), std::domain_error);
  CHECK_THROWS_AS(qperiodic_sin(-1.0, q), std::domain_error);
}

TEST_CASE("qperiodic_sin is invariant under t -> qt") {
  for (double qv : {1.3, 2.0, 3.7}) {
    const QParam q(qv);
    const auto f = [&q](double t) { return qperiodic_sin(t, q); };
    for (int i = 1; i <= 100; ++i) {
      const double t = 0.03 * i;
      CHECK(std::abs(qperiodic_defect(f, t, q)) <= 1e-12);
    }
  }
}

TEST_CASE("modulate with constant kind scales the series evaluation") {
  const QParam q(2.0);
  const QSeries e = eq_series(Complex(-1.0), q, 64);
  const auto f = modulate(e, {ModulationKind::constant, 2.5});
  CHECK(std::abs(f(0.5) - 2.5 * eval(e, 0.5)) == 0.0);
  CHECK(f(0.0) == Complex(2.5));
}

TEST_CASE("q-periodic modulation preserves the oscillator equation") {
  const QParam q(2.0);
  const OscillatorSpec spec(2.0, 1.0, q);
  const SolutionBasis basis = build_basis(spec, 64);
  const QSeries combined = basis.A * basis.x1 + basis.B * basis.x2;
  const auto f = modulate(combined, {ModulationKind::qperiodic, 1.0});
  for (double t : {0.3, 0.7, 1.3, 1.9}) {
    CHECK(std::abs(sampled_residual(f, t, spec)) <= 1e-9);
  }
  CHECK_THROWS_AS(f(0.0), std::domain_error);
}

TEST_CASE("self_similar_windows produces dilated copies of the same grid") {
  const auto identity = [](double t) { return Complex(t); };
  const auto windows = self_similar_windows(identity, {0.5, 0.05}, 4);
  REQUIRE(windows.size() == 2);
  REQUIRE(windows[0].t.size() == 4);
  CHECK(windows[0].t[0] == 0.125);
  CHECK(windows[0].t[3] == 0.5);
  CHECK(windows[1].t[3] == 0.05);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(windows[1].t[i] == doctest::Approx(0.1 * windows[0].t[i]).epsilon(1e-15));
  }
  CHECK_THROWS_AS(self_similar_windows(identity, {}, 4), std::invalid_argument);
  CHECK_THROWS_AS(self_similar_windows(identity, {0.5, -0.1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(self_similar_windows(identity, {0.5}, 0), std::invalid_argument);
}

TEST_CASE("modulated solution restricted to a q-ladder matches pure dilation") {
  // On the grid t_k = q^k t_0 the modulation factor is constant, so the
  // modulated solution inherits the recursion of the unmodulated one.
  const QParam q(2.0);
  const QSeries e = eq_series(Complex(-1.0), q, 64);
  const auto f = modulate(e, {ModulationKind::qperiodic, 1.0});
  const double t0 = 0.3;
  const double a0 = qperiodic_sin(t0, q);
  for (int k = 0; k < 4; ++k) {
    const double t = t0 * std::pow(2.0, k);
    const Complex expected = a0 * eval(e, t);
    CHECK(std::abs(f(t) - expected) <= 1e-12 * std::abs(expected) + 1e-14);
  }
}
