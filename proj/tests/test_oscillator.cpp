#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "qosc/oscillator.hpp"

using namespace qosc;
using qosc::testing::rel_diff;

// Reference values computed independently from the defining series at high
// truncation order (q = 2, omega = 1, critical damping unless noted).
namespace {
constexpr double kX2_025 = -0.210516370672;  // t d/dt e_2(-t) at t = 0.25
constexpr double kX2_05 = -0.350412674729;
constexpr double kX2_10 = -0.463994432451;
constexpr double kX2_19 = -0.319931032335;
constexpr double kW_05 = -0.333594255455;    // q-Wronskian at t = 0.5
constexpr double kW_10 = -0.0833985638637;
}  // namespace

TEST_CASE("oscillator parameter validation") {
  CHECK_THROWS_AS(ClassicalSpec(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ClassicalSpec(1.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ClassicalSpec(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(OscillatorSpec(-0.1, 1.0, QParam(2.0)), std::domain_error);
  CHECK_THROWS_AS(OscillatorSpec(1.0, 0.0, QParam(2.0)), std::domain_error);
}

TEST_CASE("characteristic_roots regimes") {
  const RootPair critical = characteristic_roots(OscillatorSpec(2.0, 1.0, QParam(2.0)));
  CHECK(critical.regime == Regime::critical);
  CHECK(critical.multiplicity == 2);
  CHECK(critical.lambda1 == Complex(-1.0));
  CHECK(critical.lambda2 == Complex(-1.0));
  CHECK(critical.Omega == 0.0);

  const RootPair over = characteristic_roots(OscillatorSpec(5.0, 2.0, QParam(2.0)));
  CHECK(over.regime == Regime::over);
  CHECK(over.multiplicity == 1);
  CHECK(over.lambda1 == Complex(-1.0));
  CHECK(over.lambda2 == Complex(-4.0));

  const RootPair under =
      characteristic_roots(OscillatorSpec(2.0, std::sqrt(2.0), QParam(2.0)));
  CHECK(under.regime == Regime::under);
  CHECK(under.lambda1.real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(under.lambda1.imag() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(under.lambda2.imag() == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(under.Omega == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("characteristic_roots near-critical tolerance band") {
  const double omega = 1.0;
  CHECK(characteristic_roots(OscillatorSpec(2.0 * omega * (1.0 + 1e-10), omega, QParam(2.0)))
            .regime == Regime::critical);
  CHECK(characteristic_roots(OscillatorSpec(2.0 * omega * (1.0 + 1e-6), omega, QParam(2.0)))
            .regime == Regime::over);
  CHECK(characteristic_roots(OscillatorSpec(2.0 * omega * (1.0 - 1e-6), omega, QParam(2.0)))
            .regime == Regime::under);
}

TEST_CASE("build_basis critical structure") {
  const OscillatorSpec spec(2.0, 1.0, QParam(2.0));
  const SolutionBasis basis = build_basis(spec, 8);
  CHECK(basis.label1 == "e_q(-omega t)");
  CHECK(basis.label2 == "t d/dt e_q(-omega t)");
  REQUIRE(basis.closed_form_radius.has_value());
  CHECK(*basis.closed_form_radius == 2.0);
  CHECK(basis.x1.coeff(0) == Complex(1.0));
  CHECK(basis.x2.coeff(0) == Complex(0.0));
  CHECK(basis.x2.coeff(1).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(basis.x2.coeff(2).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(build_basis(spec, 1), std::invalid_argument);
}

TEST_CASE("basis series satisfy the equation in every regime") {
  for (double qv : {1.1, 2.0, 3.0}) {
    for (auto [Gamma, omega] : {std::pair{1.0, 1.0}, {5.0, 2.0}, {2.0, 1.0}}) {
      const OscillatorSpec spec(Gamma, omega, QParam(qv));
      const SolutionBasis basis = build_basis(spec, 64);
      CHECK(relative_residual(spec, basis.x1) <= 1e-12);
      CHECK(relative_residual(spec, basis.x2) <= 1e-12);
    }
  }
}

TEST_CASE("residual detects a non-solution") {
  const OscillatorSpec spec(2.0, 1.0, QParam(2.0));
  const QSeries wrong = eq_series(Complex(-2.0), spec.q, 16);
  const QSeries r = residual(spec, wrong);
  // (mu^2 + Gamma mu + omega^2) mu^n / [n]_q! with mu = -2: constant term 1.
  CHECK(r.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(relative_residual(spec, wrong) > 1e-2);
  CHECK_THROWS_AS(residual(spec, eq_series(Complex(-2.0), QParam(3.0), 16)),
                  std::invalid_argument);
}

TEST_CASE("sampled residual vanishes on combined solutions") {
  const OscillatorSpec spec(2.0, 1.0, QParam(2.0));
  SolutionBasis basis = build_basis(spec, 64);
  basis.A = Complex(0.3, 0.0);
  basis.B = Complex(-1.2, 0.0);
  const auto f = [&basis](double t) { return basis.value(t); };
  for (double t : {0.25, 0.7, 1.3, 2.0}) {
    CHECK(std::abs(sampled_residual(f, t, spec)) <= 1e-10);
  }
}

TEST_CASE("x2_closed_form matches the series route") {
  const OscillatorSpec spec(2.0, 1.0, QParam(2.0));
  CHECK(x2_closed_form(0.0, spec) == 0.0);
  CHECK(rel_diff(x2_closed_form(0.25, spec), kX2_025) <= 1e-9);
  CHECK(rel_diff(x2_closed_form(0.5, spec), kX2_05) <= 1e-9);
  CHECK(rel_diff(x2_closed_form(1.0, spec), kX2_10) <= 1e-9);
  CHECK(rel_diff(x2_closed_form(1.9, spec), kX2_19) <= 1e-9);

  const SolutionBasis basis = build_basis(spec, 64);
  CHECK(std::abs(x2_closed_form(1.0, spec) - eval(basis.x2, 1.0).real()) <= 1e-10);

  CHECK_THROWS_AS(x2_closed_form(2.0, spec), std::domain_error);
  CHECK_THROWS_AS(x2_closed_form(-2.5, spec), std::domain_error);
  CHECK_THROWS_AS(x2_closed_form(0.5, OscillatorSpec(1.0, 1.0, QParam(2.0))),
                  std::domain_error);
}

TEST_CASE("x2_closed_form approaches the classical -t omega e^(-omega t)") {
  const OscillatorSpec spec(2.0, 1.0, QParam(1.0 + 1e-8));
  const double classical = -0.5 * std::exp(-0.5);
  CHECK(std::abs(x2_closed_form(0.5, spec) - classical) <= 1e-4);
}

TEST_CASE("q-Wronskian: exact value at zero, reference values, closed form") {
  const OscillatorSpec spec(2.0, 1.0, QParam(2.0));
  const SolutionBasis basis = build_basis(spec, 64);
  CHECK(q_wronskian(basis, 0.0) == -1.0);
  CHECK(rel_diff(q_wronskian(basis, 0.5), kW_05) <= 1e-10);
  CHECK(rel_diff(q_wronskian(basis, 1.0), kW_10) <= 1e-10);
  CHECK(rel_diff(wronskian_closed_form(spec, 0.5), kW_05) <= 1e-9);
  CHECK(rel_diff(wronskian_closed_form(spec, 1.0), kW_10) <= 1e-9);
  CHECK(wronskian_closed_form(spec, 0.0) == -1.0);
  CHECK_THROWS_AS(wronskian_closed_form(OscillatorSpec(1.0, 1.0, QParam(2.0)), 0.5),
                  std::domain_error);
}

TEST_CASE("perturbation_check converges at sqrt(eps) rate") {
  const OscillatorSpec spec(2.0, 1.0, QParam(2.0));
  const auto [fd, ref] = perturbation_check(spec, 1e-6, 1.0);
  CHECK(std::abs(fd - ref) <= 1e-3);
  const auto [fd8, ref8] = perturbation_check(spec, 1e-8, 1.0);
  CHECK(std::abs(fd8 - ref8) < std::abs(fd - ref));
  CHECK_THROWS_AS(perturbation_check(spec, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(perturbation_check(OscillatorSpec(1.0, 1.0, QParam(2.0)), 1e-6, 1.0),
                  std::domain_error);
}

TEST_CASE("classical_solution reference points") {
  // critically damped: x = (A + B t) e^{-t}
  const auto critical = classical_solution(ClassicalSpec(1.0, 2.0, 1.0), 0.0, 1.0);
  CHECK(critical(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // over-damped: x = A e^{-t} + B e^{-4t}
  const auto over = classical_solution(ClassicalSpec(1.0, 5.0, 4.0), 1.0, 1.0);
  CHECK(over(0.0) == 2.0);
  CHECK(over(1.0) == doctest::Approx(std::exp(-1.0) + std::exp(-4.0)).epsilon(1e-13));
  // undamped: x = A cos t + B sin t
  const auto under = classical_solution(ClassicalSpec(1.0, 0.0, 1.0), 0.25, 2.0);
  CHECK(under(0.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("q-solution approaches the classical solution as q -> 1+") {
  const double qv = 1.001;
  // critical: matched coefficients are A_cl = A, B_cl = -omega B
  const OscillatorSpec spec(2.0, 1.0, QParam(qv));
  SolutionBasis basis = build_basis(spec, 64);
  const auto classical = classical_solution(ClassicalSpec(1.0, 2.0, 1.0), 1.0, -1.0);
  for (double t : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(std::abs(basis.value(t).real() - classical(t)) <= 1e-2);
  }
}

TEST_CASE("first_order_solution") {
  const QParam q(2.0);
  const QSeries x = first_order_solution(1.0, 1.0, Complex(1.0), q, 20);
  const QSeries e = eq_series(Complex(-1.0), q, 20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(std::abs(x.coeff(n) - e.coeff(n)) == 0.0);
  }
  // gamma D_q x + k x = 0 as a residual check
  const QSeries d = dq(x);
  for (int n = 0; n <= 19; ++n) {
    CHECK(std::abs(1.0 * d.coeff(n) + 1.0 * x.coeff(n)) <= 1e-15);
  }
  CHECK_THROWS_AS(first_order_solution(0.0, 1.0, Complex(1.0), q, 20), std::domain_error);
}
