#include <cmath>
#include <random>

#include "doctest.h"
#include "lebedev/errors.hpp"
#include "lebedev/kernel.hpp"
#include "oracles.hpp"

using namespace lebedev;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Phi at mu = 0: sqrt(pi) |Gamma(1/2 + i tau)|^2 P^2
double phi0_oracle(double tau, double x) {
  const double P = oracle::conical_p(tau, std::sqrt((1.0 + x) / x));
  return std::sqrt(oracle::pi) * oracle::gamma_half_pair(tau) * P * P;
}

double s0_oracle(double tau, double x) {
  const double X = std::sqrt((1.0 + x) / x);
  return std::sqrt(oracle::pi) / (x * x * std::cosh(oracle::pi * tau)) * oracle::conical_p(tau, X) *
         oracle::conical_q_sum(tau, X);
}

}  // namespace

TEST_CASE("strip and order checks") {
  const auto p = TransformParams::make(-0.3);
  CHECK(p.nu > -0.5);
  CHECK(p.nu < 0.3);
  CHECK_NOTHROW(p.require_kernel_strip());
  CHECK_THROWS_AS(TransformParams::make(0.0, 0.2).require_kernel_strip(), ContourError);
  CHECK_THROWS_AS(TransformParams::make(0.6).require_order(), PreconditionError);
  CHECK_THROWS_AS(phi_direct(p, {1.0, -1.0}), PreconditionError);
  CHECK_THROWS_AS(phi_fourier_cosine(p, {1.0, 0.5}), PreconditionError);
  CHECK_NOTHROW(phi_fourier_cosine(p, {1.0, 0.5}, true));
}

TEST_CASE("gamma pair") {
  for (double t : {0.0, 0.7, 4.0}) CHECK(rel(gamma_pair(0.0, t), oracle::gamma_half_pair(t)) < 1e-13);
  // real and even in tau for real mu
  const Complex a = gamma_pair(-0.3, 1.2), b = gamma_pair(-0.3, -1.2);
  CHECK(std::abs(a.imag()) < 1e-15 * std::abs(a));
  CHECK(rel(a, b) < 1e-15);
}

TEST_CASE("Phi at mu = 0 against the Mehler integral") {
  const auto p = TransformParams::make(0.0);
  CHECK(std::abs(phi_direct(p, {1.0, 1.0}) - 0.29110836571015599487) < 1e-14);
  for (double tau : {0.0, 0.5, 2.0, 5.0})
    for (double x : {0.1, 1.0, 3.0, 10.0}) {
      const double ref = phi0_oracle(tau, x);
      CHECK(rel(phi_direct(p, {tau, x}), ref) < 1e-11);
      CHECK(std::abs(phi_mellin_barnes(p, {tau, x}).value - ref) < 1e-10 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("three routes for Phi agree") {
  for (const Complex mu : {Complex(0.0), Complex(-0.3), Complex(-0.49), Complex(-0.5, 0.2)})
    for (double tau : {0.0, 1.0, 5.0})
      for (double x : {1.0, 3.0, 10.0}) {
        const auto p = TransformParams::make(mu);
        const Complex d = phi_direct(p, {tau, x});
        const double tol = mu.imag() == 0.0 ? 1e-8 : 1e-6;
        CHECK(std::abs(phi_mellin_barnes(p, {tau, x}).value - d) < tol * (1.0 + std::abs(d)));
        CHECK(std::abs(phi_fourier_cosine(p, {tau, x}).value - d) < tol * (1.0 + std::abs(d)));
      }
}

TEST_CASE("ODE residual") {
  for (const Complex mu : {Complex(0.0), Complex(-0.3), Complex(-0.5, 0.2)})
    for (double tau : {0.0, 2.0})
      for (double x : {1.5, 10.0}) {
        const auto p = TransformParams::make(mu);
        CHECK(ode_residual(p, {tau, x}) < 1e-7);
        CHECK(ode_residual(p, {tau, x}, OdeForm::AsPrinted) > 1e-3);
      }
}

TEST_CASE("the MB jet differentiates Phi") {
  const auto p = TransformParams::make(-0.3);
  const double tau = 0.8, x = 2.0, h = 1e-3;
  const PhiJet j = phi_mb_jet(p, {tau, x});
  auto phi = [&](double y) { return phi_mellin_barnes(p, {tau, y}).value; };
  const Complex d1 = (phi(x - 2 * h) - 8.0 * phi(x - h) + 8.0 * phi(x + h) - phi(x + 2 * h)) / (12 * h);
  const Complex d2 = (-phi(x - 2 * h) + 16.0 * phi(x - h) - 30.0 * phi(x) + 16.0 * phi(x + h) -
                      phi(x + 2 * h)) / (12 * h * h);
  CHECK(rel(j.d[0], phi(x)) < 1e-12);
  CHECK(std::abs(j.d[1] - d1) < 1e-9);
  CHECK(std::abs(j.d[2] - d2) < 1e-6);
}

TEST_CASE("bound |Phi| <= C x^{-nu}") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lt(-3.0, 3.0), tt(0.0, 6.0);
  for (double mu : {0.0, -0.3, -0.49}) {
    const auto p = TransformParams::make(mu);
    const double C = norm_constant(p);
    CHECK(C > 0.0);
    for (int i = 0; i < 40; ++i) {
      const double x = std::pow(10.0, lt(rng)), tau = tt(rng);
      CHECK(std::abs(phi_direct(p, {tau, x})) <= C * std::pow(x, -p.nu));
    }
  }
}

TEST_CASE("S kernel") {
  const auto p0 = TransformParams::make(0.0);
  CHECK(std::abs(s_kernel(p0, {1.0, 1.0}) - 0.017232782987529623872) < 1e-15);
  for (double tau : {0.0, 0.5, 2.0})
    for (double x : {0.2, 1.0, 4.0}) CHECK(rel(s_kernel(p0, {tau, x}), s0_oracle(tau, x)) < 1e-11);

  const auto p = TransformParams::make(-0.3);
  CHECK(rel(s_kernel(p, {0.5, 2.0}), 0.37234766469313642531) < 1e-12);
  CHECK(rel(s_kernel(p, {2.0, 0.5}), -0.008536440661446390246) < 1e-11);
  for (double tau : {0.3, 1.5})
    for (double x : {0.5, 3.0}) {
      auto pc = p;
      pc.nu = s_contour_nu(p);
      CHECK(rel(s_kernel_contour(pc, {tau, x}).value, s_kernel(p, {tau, x})) < 1e-9);
    }
  const auto multi = s_kernel_contour_multi(p, 1.5, {0.5, 3.0});
  CHECK(rel(multi[1], s_kernel(p, {1.5, 3.0})) < 1e-9);

  std::vector<std::string> warnings;
  s_kernel(TransformParams::make(Complex(-0.3, 0.1)), {1.0, 1.0}, &warnings);
  CHECK(warnings.size() == 1);
  warnings.clear();
  s_kernel(p, {1.0, 1.0}, &warnings);
  CHECK(warnings.empty());
}

TEST_CASE("S contour abscissa") {
  for (const Complex mu : {Complex(0.0), Complex(-0.3), Complex(0.4), Complex(-0.5, 0.2)}) {
    const double nu = s_contour_nu(TransformParams::make(mu));
    const double c = 1.5 - nu;
    CHECK(c > 1.5);
    CHECK(c < std::min(2.0, 2.0 - mu.real()));
  }
}

TEST_CASE("adjoint inversion kernels") {
  for (double mu : {0.0, -0.3}) {
    const auto p = TransformParams::make(mu);
    const double xi = 1.2;
    const std::vector<double> ys = {0.3, 1.0, 5.0};
    const auto psi = psi0_kernel_multi(p, xi, ys);
    const Complex pre = kSqrtPi * std::exp(Complex(0.0, kPi * mu)) / std::cosh(kPi * xi);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      CHECK(rel(psi[i], pre * g_inverse_kernel(p, xi, ys[i])) < 1e-7);
      CHECK(rel(g_inverse_potential(p, xi, ys[i]), legendre_pq_sum(mu, xi, ys[i]) / std::sqrt(ys[i])) <
            1e-15);
    }
  }
}
