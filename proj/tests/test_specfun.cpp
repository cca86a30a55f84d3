#include <cmath>

#include "doctest.h"
#include "lebedev/complexfn.hpp"
#include "lebedev/specfun.hpp"
#include "oracles.hpp"

using namespace lebedev;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const Complex kI(0.0, 1.0);

}  // namespace

TEST_CASE("hyp2f1 closed forms") {
  for (double z : {0.5, -0.9, -3.0, -40.0})
    CHECK(rel(hyp2f1(1.0, 1.0, 2.0, z), -std::log1p(-z) / z) < 1e-13);
  const Complex a(0.3, 0.8);
  for (double z : {0.2, 0.9, -5.0})
    CHECK(rel(hyp2f1(a, 1.7, 1.7, z), std::pow(1.0 - z, -a)) < 1e-13);
  const double s = 0.6;
  CHECK(rel(hyp2f1(0.5, 0.5, 1.5, s * s), std::asin(s) / s) < 1e-14);
  CHECK(rel(hyp2f1(a, 2.0, 3.5, 0.0), 1.0) < 1e-16);
}

TEST_CASE("Legendre P with integer degree and zero order") {
  for (double x : {1.001, 1.5, 4.0, 30.0}) {
    CHECK(rel(legendre_p(LegendreArgs(0.0, 1.0, x)), x) < 1e-13);
    CHECK(rel(legendre_p(LegendreArgs(0.0, 2.0, x)), 0.5 * (3.0 * x * x - 1.0)) < 1e-13);
  }
}

TEST_CASE("Legendre P and Q of order -1/2 and 1/2 in elementary form") {
  for (double xi : {0.2, 1.0, 3.0}) {
    const double X = std::cosh(xi), sh = std::sinh(xi);
    for (const Complex nu : {Complex(0.3, 0.0), Complex(-0.5, 1.2), Complex(0.7, -0.4)}) {
      const Complex k = nu + 0.5;
      CHECK(rel(legendre_p(LegendreArgs(-0.5, nu, X)),
                std::sqrt(2.0 / (kPi * sh)) * std::sinh(k * xi) / k) < 1e-12);
      CHECK(rel(legendre_q(LegendreArgs(0.5, nu, X)),
                kI * std::sqrt(kPi / (2.0 * sh)) * std::exp(-k * xi)) < 1e-12);
      CHECK(rel(legendre_q(LegendreArgs(-0.5, nu, X)),
                -kI * std::sqrt(kPi / (2.0 * sh)) * std::exp(-k * xi) / k) < 1e-12);
    }
  }
}

TEST_CASE("Legendre Q of integer degree") {
  CHECK(rel(legendre_q(LegendreArgs(0.0, 0.0, 2.0)), 0.5 * std::log(3.0)) < 1e-14);
  for (double x : {1.2, 2.0, 9.0})
    CHECK(rel(legendre_q(LegendreArgs(0.0, 1.0, x)), 0.5 * x * std::log((x + 1.0) / (x - 1.0)) - 1.0) <
          1e-12);
}

TEST_CASE("conical functions agree with the Mehler and Heine integrals") {
  for (double tau : {0.0, 0.4, 1.7, 3.0})
    for (double x : {0.05, 0.7, 2.0, 25.0}) {
      const double X = std::sqrt((1.0 + x) / x);
      const double p = oracle::conical_p(tau, X), q = oracle::conical_q_sum(tau, X);
      const auto args = LegendreArgs::kernel(0.0, Complex(-0.5, tau), x);
      CHECK(std::abs(legendre_p(args) - p) < 1e-12 * std::max(1.0, std::abs(p)));
      const auto qp = legendre_q(LegendreArgs::kernel(0.0, Complex(-0.5, tau), x));
      const auto qm = legendre_q(LegendreArgs::kernel(0.0, Complex(-0.5, -tau), x));
      CHECK(std::abs(qp + qm - q) < 1e-11 * std::max(1.0, std::abs(q)));
    }
}

TEST_CASE("P routes agree where both apply") {
  for (const Complex mu : {Complex(0.0), Complex(-0.3), Complex(-0.5, 0.2), Complex(0.4)})
    for (double x : {1.3, 2.5, 6.0}) {
      const LegendreArgs a(mu, Complex(-0.5, 0.9), x);
      CHECK(rel(legendre_p_near(a), legendre_p_far(a)) < 1e-11);
    }
}

TEST_CASE("Q routes agree where all three apply") {
  for (const Complex mu : {Complex(-0.3), Complex(0.2), Complex(-0.4, 0.2)})
    for (double x : {1.5, 3.0, 10.0}) {
      const LegendreArgs a(mu, Complex(-0.5, 0.7), x);
      const Complex s = legendre_q_series(a);
      CHECK(rel(legendre_q_connection(a), s) < 1e-10);
      CHECK(rel(legendre_q_integral(a), s) < 1e-10);
    }
}

TEST_CASE("kernel argument keeps x - 1 exact") {
  const auto a = LegendreArgs::kernel(0.0, -0.5, 1e12);
  CHECK(a.xm1 > 0.0);
  CHECK(std::abs(a.xm1 - 1e-12 / (std::sqrt(1.0 + 1e-12) + 1.0)) < 1e-27);
  const auto c = LegendreArgs::conical(-0.3, 2.0, 3.0);
  CHECK(c.nu == Complex(-0.5, 2.0));
}

TEST_CASE("modified Bessel functions") {
  CHECK(std::abs(bessel_k_imag(0.0, 1.0) - 0.42102443824070833) < 1e-14);
  CHECK(std::abs(bessel_k_imag(0.0, 2.0) - 0.11389387274953344) < 1e-14);
  for (double tau : {0.5, 2.0, 6.0})
    for (double x : {0.3, 1.5, 8.0}) {
      const double ref = oracle::integrate(
          [&](double t) { return std::exp(-x * std::cosh(t)) * std::cos(tau * t); }, 0.0, 12.0, 60);
      CHECK(std::abs(bessel_k_imag(tau, x) - ref) < 1e-13 + 1e-11 * std::abs(ref));
      CHECK(std::abs(bessel_k_imag_scaled(tau, x) - std::exp(x) * ref) <
            1e-11 * std::max(1.0, std::exp(x) * std::abs(ref)));
    }
  for (double x : {0.1, 1.0, 5.0})
    CHECK(rel(bessel_i(0.5, x), std::sqrt(2.0 / (kPi * x)) * std::sinh(x)) < 1e-14);
}

TEST_CASE("the K I product is real and matches its factors") {
  for (double tau : {0.0, 0.8, 2.5})
    for (double z : {0.2, 3.0}) {
      const Complex I = bessel_i(Complex(0.0, tau), z) + bessel_i(Complex(0.0, -tau), z);
      const double ref = bessel_k_imag(tau, z) * I.real();
      CHECK(std::abs(I.imag()) < 1e-12);
      CHECK(std::abs(bessel_kii_product(tau, z) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
    }
  // large z uses the asymptotic products
  const double tau = 1.1, z = 40.0;
  const Complex ref = bessel_i(Complex(0.0, tau), z) * bessel_k_imag(tau, z);
  CHECK(rel(bessel_ik_asymptotic(Complex(0.0, tau), Complex(0.0, tau), z), ref) < 1e-10);
}
