#include <cmath>

#include "doctest.h"
#include "lebedev/complexfn.hpp"
#include "lebedev/errors.hpp"
#include "lebedev/quad.hpp"
#include "lebedev/registry.hpp"

using namespace lebedev;

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {2, 7, 20, 64}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    REQUIRE(x.size() == static_cast<std::size_t>(n));
    double s = 0.0, m = 0.0;
    for (int i = 0; i < n; ++i) {
      s += w[i];
      m += w[i] * std::pow(x[i], 2 * n - 2);
    }
    CHECK(std::abs(s - 2.0) < 1e-14);
    CHECK(std::abs(m - 2.0 / (2 * n - 1)) < 1e-14);
  }
}

TEST_CASE("adaptive Gauss-Kronrod") {
  auto r = integrate_gk([](double x) { return Complex(std::sin(x)); }, 0.0, kPi, 1e-13, 0.0);
  CHECK(std::abs(r.value - 2.0) < 1e-13);
  CHECK(r.nodes_used > 0);
  r = integrate_gk([](double x) { return Complex(std::sqrt(x)); }, 0.0, 1.0, 1e-10, 0.0);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-10);
  CHECK_THROWS_AS(integrate_gk([](double x) { return Complex(1.0 / x); }, 0.0, 1.0, 1e-14, 0.0, 2000),
                  NoConvergence);
}

TEST_CASE("semi-infinite integrals") {
  QuadratureSpec q;
  auto r = integrate_semi_infinite([](double x) { return Complex(std::exp(-x)); }, q);
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  r = integrate_semi_infinite([](double x) { return Complex(1.0 / (1.0 + x * x)); }, q);
  CHECK(std::abs(r.value - kPi / 2.0) < 1e-9);
  r = integrate_semi_infinite([](double x) { return Complex(std::exp(-x * x)); }, q, 1.0);
  CHECK(std::abs(r.value - 0.5 * kSqrtPi * std::erfc(1.0)) < 1e-13);
}

TEST_CASE("oscillatory integrals") {
  QuadratureSpec q;
  auto r = integrate_oscillatory([](double x) { return Complex(std::cos(40.0 * x) * std::exp(-x)); },
                                 0.0, 10.0, 40.0, q);
  const double ref = (1.0 - std::exp(-10.0) * (std::cos(400.0) - 40.0 * std::sin(400.0))) / 1601.0;
  CHECK(std::abs(r.value - ref) < 1e-12);
  r = integrate_semi_infinite_osc([](double x) { return Complex(std::cos(5.0 * x) * std::exp(-x)); }, 0.0,
                                  5.0, q);
  CHECK(std::abs(r.value - 1.0 / 26.0) < 1e-12);
  // Dirichlet integral: only algebraic decay
  r = integrate_oscillatory_tail(
      [](double x) { return Complex(x == 0.0 ? 1.0 : std::sin(x) / x); }, 0.0, 1.0, q);
  CHECK(std::abs(r.value - kPi / 2.0) < 1e-9);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  auto r = tanh_sinh([](double, double xa, double) { return Complex(1.0 / std::sqrt(xa)); }, 0.0, 1.0,
                     1e-12);
  CHECK(std::abs(r.value - 2.0) < 1e-10);
  r = tanh_sinh([](double, double xa, double bx) { return Complex(1.0 / std::sqrt(xa * bx)); }, 0.0, 1.0,
                1e-12);
  CHECK(std::abs(r.value - kPi) < 1e-10);
}

TEST_CASE("vertical line integrals") {
  QuadratureSpec q;
  VerticalLineOptions opt;
  opt.conjugate_symmetric = true;
  // (1/2 pi i) int Gamma(s) x^{-s} ds = e^{-x}
  for (double x : {0.5, 1.5, 4.0}) {
    auto r = integrate_vertical_line(
        [x](Complex s) { return lebedev::gamma(s) * std::pow(x, -s); }, 1.0, q, opt);
    CHECK(std::abs(r.value - std::exp(-x)) < 1e-12);
    CHECK(r.truncation_T_used > 0.0);
  }
  // two integrands on one set of nodes
  auto m = integrate_vertical_line_multi(
      [](Complex s, std::span<Complex> out) {
        out[0] = lebedev::gamma(s) * std::pow(2.0, -s);
        out[1] = lebedev::gamma(s) * lebedev::gamma(1.0 - s + 0.5) / lebedev::gamma(1.5);
      },
      2, 0.5, q, opt);
  CHECK(std::abs(m.values[0] - std::exp(-2.0)) < 1e-12);
  // Gamma(s) Gamma(a - s)/Gamma(a) at x = 1 inverts to (1+x)^{-a} = 2^{-3/2}
  CHECK(std::abs(m.values[1] - std::pow(2.0, -1.5)) < 1e-12);
}

TEST_CASE("Mellin transform helpers") {
  const TestFunction f = make_test_function("exp");
  for (double s : {0.5, 1.0, 2.5})
    CHECK(std::abs(mellin_transform_numeric(f, s) - std::tgamma(s)) < 1e-11);
  CHECK(std::abs(mellin_transform_numeric(f, Complex(1.0, 3.0)) - lebedev::gamma(Complex(1.0, 3.0))) <
        1e-11);
  CHECK(std::abs(mellin_invert_numeric([](Complex s) { return lebedev::gamma(s); }, 0.7, 2.0) -
                 std::exp(-2.0)) < 1e-11);
  CHECK(std::abs(weighted_norm(f, 0.5, 1.0) - kSqrtPi) < 1e-10);
  // (int e^{-2x} x^{-1/2} dx)^{1/2} = (sqrt(pi/2))^{1/2}
  CHECK(std::abs(weighted_norm(f, 0.25, 2.0) - std::sqrt(std::sqrt(kPi / 2.0))) < 1e-10);
}

TEST_CASE("quadrature spec validation and config text") {
  QuadratureSpec q;
  CHECK_NOTHROW(q.validate());
  q.rel_tol = -1.0;
  CHECK_THROWS_AS(q.validate(), PreconditionError);
  QuadratureSpec c;
  const auto unknown = apply_config_text(
      "# tolerances\nrel_tol = 1e-9\nmax_nodes=5000\n  truncation_T = 20\ncolour = blue\n", c);
  CHECK(c.rel_tol == 1e-9);
  CHECK(c.max_nodes == 5000);
  CHECK(c.truncation_T == 20.0);
  CHECK(c.abs_tol == QuadratureSpec{}.abs_tol);
  REQUIRE(unknown.size() == 1);
  CHECK(unknown[0] == "colour");
  CHECK_THROWS_AS(apply_config_file("/nonexistent/lebedev.cfg", c), PreconditionError);
}
